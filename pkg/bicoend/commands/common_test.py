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
"""Tests for common."""

import os
from unittest import mock

from absl import app
from absl import flags
from absl import logging
from absl.testing import absltest
from absl.testing import flagsaver
from absl.testing import parameterized

from bicoend.commands import common
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import test_utils

FLAGS = flags.FLAGS
ExitCode = constants.ExitCode


def setUpModule():
  logging.set_verbosity(logging.FATAL)


class RunConfigTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('zero_budget', dict(budget=0)),
      ('negative_seed', dict(budget=10, seed=-1)),
      ('negative_cpus', dict(budget=10, cpus=-2)),
      ('dot_for_check', dict(budget=10,
                             output_format=constants.OutputFormat.DOT)),
  )
  def test_invalid(self, kwargs):
    with self.assertRaises(ValueError):
      common.RunConfig('check', (), **kwargs)

  def test_budgets_override_the_profile(self):
    config = common.RunConfig('codescent', (), budget=7, seed=3,
                              profile='test')
    params = config.budgets()
    self.assertEqual(params.budget, 7)
    self.assertEqual(params.seed, 3)
    self.assertEqual(params.enumeration_limit, 2000)

  @flagsaver.flagsaver(profile='test')
  def test_budget_from_profile(self):
    with mock.patch.dict(os.environ, {}, clear=True):
      self.assertEqual(common.run_config('check').budget, 4000)

  @flagsaver.flagsaver
  def test_budget_from_environment(self):
    with mock.patch.dict(os.environ, {constants.BUDGET_ENV_VAR: '123'}):
      self.assertEqual(common.run_config('check').budget, 123)
      FLAGS.budget = 9
      self.assertEqual(common.run_config('check').budget, 9)

  @flagsaver.flagsaver
  def test_bad_environment_budget(self):
    with mock.patch.dict(os.environ, {constants.BUDGET_ENV_VAR: 'lots'}):
      with self.assertRaises(app.UsageError):
        common.run_config('check')

  @flagsaver.flagsaver(budget=-1)
  def test_bad_budget_flag(self):
    with self.assertRaises(app.UsageError):
      common.run_config('check')


class ExitCodeTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('syntax', errors.DslSyntaxError('bad', 1, 1), ExitCode.PARSE_ERROR),
      ('boundary', errors.BoundaryError('bad', 1, 1), ExitCode.PARSE_ERROR),
      ('semantic_boundary', errors.BoundaryMismatch('x'),
       ExitCode.CHECK_FAILED),
      ('tables', errors.MalformedTables('x'), ExitCode.PARSE_ERROR),
      ('missing_file', FileNotFoundError('x'), ExitCode.PARSE_ERROR),
      ('budget', errors.BudgetExhausted('enumeration', 5),
       ExitCode.BUDGET_EXHAUSTED),
      ('check', errors.CheckFailed('bad', None), ExitCode.CHECK_FAILED),
      ('compatibility', errors.CompatibilityFailure('bad', 'f'),
       ExitCode.CHECK_FAILED),
  )
  def test_exit_code_for(self, error, expected):
    self.assertEqual(common.exit_code_for(error), expected)

  def test_values_are_frozen(self):
    self.assertEqual([int(c) for c in ExitCode], [0, 1, 2, 3])


class LookupTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    config = common.RunConfig(
        'check', (test_utils.bicoend_testdata('terminal.bicoend'),),
        budget=100, profile='test')
    self.environments = common.load_inputs(config)

  def test_first_of_kind(self):
    self.assertEqual(
        common.find(self.environments, 'pseudofunctor', None).name, 'K')

  def test_by_name(self):
    p = common.find(self.environments, 'pseudofunctor', 'K4')
    self.assertLen(p.dom.factor_list, 4)

  def test_missing(self):
    with self.assertRaisesRegex(errors.BoundaryError, 'nat'):
      common.find(self.environments, 'nat', None)

  def test_shape(self):
    shape = common.shape(self.environments, 'C^op x 1')
    self.assertLen(shape.factor_list, 2)
    with self.assertRaises(errors.BoundaryError):
      common.shape(self.environments, 'D')

  def test_no_input(self):
    with self.assertRaises(errors.DslSyntaxError):
      common.load_inputs(common.RunConfig('check', (), budget=10))


class ExecuteTest(absltest.TestCase):

  def test_error_payload_and_runtime_csv(self):
    output = test_utils.test_tmpfile('error.txt')
    runtime = test_utils.test_tmpfile('runtime.csv')
    config = common.RunConfig(
        'check', (), budget=10, output=output, runtime_csv=runtime,
        output_format=constants.OutputFormat.TEXT)

    def body(_):
      raise errors.BudgetExhausted('completion', 10, 'X')

    self.assertEqual(common.execute(body, config), 3)
    with open(output) as f:
      self.assertEqual(
          f.read(),
          'error: budget exhausted during completion after 10 steps while '
          'realizing X\n')
    self.assertTrue(os.path.exists(runtime))


if __name__ == '__main__':
  absltest.main()
