"""Pytest wiring: absltest.main() parses absl flags; pytest does not."""

from absl import flags


def pytest_configure(config):
  del config  # Unused.
  flags.FLAGS.mark_as_parsed()

# Helper module, not a test module; its `test_tmpfile` helper would be
# collected as a test.
collect_ignore = ['bicoend/utils/test_utils.py']
