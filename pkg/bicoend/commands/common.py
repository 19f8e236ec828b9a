# Copyright (c) 2021, Google Inc.
# All rights reserved.
# 
# Redistribution and use in source and binary forms, with or without modification,
# are permitted provided that the following conditions are met:
# 
# 1. Redistributions of source code must retain the above copyright notice, this
#    list of conditions and the following disclaimer.
# 
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
# 
# 3. Neither the name of Google Inc. nor the names of its contributors
#    may be used to endorse or promote products derived from this software without
#    specific prior written permission.
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND
# ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
# WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE FOR
# ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON
# ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""Flags, run configuration and exit handling shared by every subcommand."""

import dataclasses
import os
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from absl import app
from absl import flags
from absl import logging
import ml_collections

from bicoend.codescent import export
from bicoend.presentations import dsl
from bicoend.pseudo import twocat
from bicoend.utils import config as config_lib
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import timing

FLAGS = flags.FLAGS
OutputFormat = constants.OutputFormat
ExitCode = constants.ExitCode

flags.DEFINE_multi_string('input', None,
                          'Input file(s) in the bicoend format.',
                          short_name='i')
flags.DEFINE_string('output', None,
                    'Output filename. Output goes to stdout when unset.')
flags.DEFINE_integer(
    'budget', None,
    f'Completion step cap. Defaults to ${constants.BUDGET_ENV_VAR}, else to '
    'the value of the profile.')
flags.DEFINE_integer('seed', 0,
                     'Interning seed; 0 keeps declaration order.')
flags.DEFINE_enum_class('format', OutputFormat.JSON, OutputFormat,
                        'Output format. dot is only available for codescent.',
                        case_sensitive=False)
flags.DEFINE_enum('profile', 'default', ['default', 'test', 'large'],
                  'Budget profile, see bicoend/utils/config.py.')
flags.DEFINE_integer(
    'cpus', 0,
    'Number of worker processes for check. Use 0 to check inputs serially.',
    short_name='j')
flags.DEFINE_string('runtime_csv', None,
                    'If set, stage runtimes are written to this CSV file.')
flags.DEFINE_string(
    'pseudofunctor', None,
    'Name of the pseudofunctor to use. Defaults to the first one declared.')
flags.DEFINE_string(
    'shape', None,
    'Shape expression A for coyoneda. Defaults to the opposite of the domain '
    'of the pseudofunctor.')
flags.DEFINE_string('transformation', None,
                    'Name of a pseudonat to carry through coyoneda.')
flags.DEFINE_string('modification', None,
                    'Name of a modification to carry through coyoneda.')
flags.DEFINE_boolean('interchange', False,
                     'fubini: also build the interchange of both orders.')


def register_required_flags():
  flags.mark_flags_as_required(['input'])


@dataclasses.dataclass(frozen=True)
class RunConfig:
  """Everything a subcommand reads from the command line.

  Attributes:
    command: The subcommand.
    inputs: Input paths, in order.
    budget: Completion step cap.
    seed: Interning seed.
    output_format: How results are rendered.
    profile: Name of the budget profile the other caps come from.
    output: Output path, or None for stdout.
    cpus: Worker processes for check; 0 runs serially.
    runtime_csv: Where to save stage runtimes, if anywhere.
    pseudofunctor: Name of the pseudofunctor to use.
    shape: Shape expression for coyoneda.
    transformation: Name of a pseudonat for coyoneda.
    modification: Name of a modification for coyoneda.
    interchange: Whether fubini also builds the interchange.
  """
  command: str
  inputs: Tuple[str, ...]
  budget: int
  seed: int = 0
  output_format: OutputFormat = OutputFormat.JSON
  profile: str = 'default'
  output: Optional[str] = None
  cpus: int = 0
  runtime_csv: Optional[str] = None
  pseudofunctor: Optional[str] = None
  shape: Optional[str] = None
  transformation: Optional[str] = None
  modification: Optional[str] = None
  interchange: bool = False

  def __post_init__(self):
    if self.budget <= 0:
      raise ValueError(f'budget must be positive, got {self.budget}')
    if self.seed < 0:
      raise ValueError(f'seed must be non-negative, got {self.seed}')
    if self.cpus < 0:
      raise ValueError('Number of processes must be positive '
                       '(for multiprocessing) or 0 (for serial execution).')
    if self.output_format == OutputFormat.DOT and self.command != 'codescent':
      raise ValueError('--format=dot is only available for codescent')

  def budgets(self) -> ml_collections.ConfigDict:
    """The profile, with the budget and seed of this run."""
    params = config_lib.get_config(self.profile)
    params.budget = self.budget
    params.seed = self.seed
    return params


def default_budget(profile: str) -> int:
  value = os.environ.get(constants.BUDGET_ENV_VAR)
  if value:
    try:
      return int(value)
    except ValueError:
      raise ValueError(
          f'${constants.BUDGET_ENV_VAR} is not an integer: {value!r}'
      ) from None
  return config_lib.get_config(profile).budget


def run_config(command: str) -> RunConfig:
  """Builds the RunConfig of `command` from the parsed flags.

  Raises:
    app.UsageError: if a value is out of range.
  """
  try:
    budget = FLAGS.budget
    if budget is None:
      budget = default_budget(FLAGS.profile)
    return RunConfig(
        command=command,
        inputs=tuple(FLAGS.input or ()),
        budget=budget,
        seed=FLAGS.seed,
        output_format=FLAGS.format,
        profile=FLAGS.profile,
        output=FLAGS.output,
        cpus=FLAGS.cpus,
        runtime_csv=FLAGS.runtime_csv,
        pseudofunctor=FLAGS.pseudofunctor,
        shape=FLAGS.shape,
        transformation=FLAGS.transformation,
        modification=FLAGS.modification,
        interchange=FLAGS.interchange)
  except ValueError as e:
    raise app.UsageError(str(e), exitcode=ExitCode.PARSE_ERROR) from e


def exit_code_for(error: Exception) -> ExitCode:
  """Maps a failure onto the exit-code contract.

  A BoundaryMismatch raised past the document layer is a failed check; the
  document layer reports its own as BoundaryError.
  """
  if isinstance(error, (errors.DslSyntaxError, errors.BoundaryError,
                        errors.MalformedTables, OSError)):
    return ExitCode.PARSE_ERROR
  if isinstance(error, errors.BudgetExhausted):
    return ExitCode.BUDGET_EXHAUSTED
  return ExitCode.CHECK_FAILED


def read_input(path: str) -> str:
  with open(path, encoding='utf-8') as f:
    return f.read()


def load_input(path: str, config: RunConfig) -> dsl.Environment:
  """Parses and elaborates one input file."""
  before = time.time()
  env = dsl.load(read_input(path), config.budgets())
  timing.timelog('load', path, before, size=len(env.values))
  return env


def load_inputs(config: RunConfig) -> List[dsl.Environment]:
  if not config.inputs:
    raise errors.DslSyntaxError('no input given', 1, 1)
  return [load_input(path, config) for path in config.inputs]


def find(environments: Sequence[dsl.Environment], kind: str,
         name: Optional[str]) -> Any:
  """The value declared as `name`, or the first value of `kind`.

  Raises:
    BoundaryError: if no input declares it.
  """
  for env in environments:
    for declared, value in env.of_kind(kind).items():
      if name is None or declared == name:
        return value
  wanted = f'{kind} {name!r}' if name else f'any {kind}'
  raise errors.BoundaryError(f'the inputs declare no {wanted}', 0, 0)


def render(config: RunConfig,
           payload: Dict[str, Any],
           text: str,
           dot: Optional[str] = None) -> str:
  if config.output_format == OutputFormat.DOT and dot is not None:
    return dot
  if config.output_format == OutputFormat.TEXT:
    return text + '\n'
  return export.to_json(payload) + '\n'


def write_output(config: RunConfig, contents: str) -> None:
  if config.output:
    with open(config.output, 'w', encoding='utf-8') as f:
      f.write(contents)
  else:
    sys.stdout.write(contents)


def error_payload(config: RunConfig, error: Exception,
                  code: ExitCode) -> Dict[str, Any]:
  return {
      'schema': constants.REPORT_SCHEMA,
      'command': config.command,
      'exit_code': int(code),
      'error': {
          'type': type(error).__name__,
          'message': str(error),
      },
  }


def execute(body: Callable[[RunConfig], ExitCode], config: RunConfig) -> int:
  """Runs a subcommand and turns its failures into exit codes.

  Args:
    body: Writes the output of the command and returns its exit code.
    config: The run configuration.

  Returns:
    The exit code.
  """
  before = time.time()
  try:
    code = body(config)
  except (errors.BicoendError, OSError) as e:
    code = exit_code_for(e)
    logging.error('%s failed with exit code %d: %s', config.command,
                  int(code), e)
    write_output(
        config,
        render(config, error_payload(config, e, code), f'error: {e}'))
  timing.timelog('total', config.command, before)
  if config.runtime_csv:
    timing.save_runtime(timing.timing, config.runtime_csv)
  logging.info('%s finished with exit code %d', config.command, int(code))
  return int(code)


def shape(environments: Sequence[dsl.Environment],
          expression: str) -> twocat.Fin2Cat:
  """Evaluates a shape expression against every input.

  Raises:
    BoundaryError: if a factor is not declared.
  """
  known = {}
  for env in environments:
    known.update(env.shapes())
  try:
    return twocat.shape(expression, known)
  except errors.MalformedTables as e:
    raise errors.BoundaryError(f'--shape: {e}', 0, 0) from None
