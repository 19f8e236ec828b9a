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
r"""Checks every declaration of the input files against its axioms.

Usage:
  bicoend check \
    --input=bicoend/testdata/pseudonats.bicoend \
    --format=text \
    --cpus=4

Exit status is 0 when every check passes, 1 when some axiom fails, 2 when an
input does not parse and 3 when a category does not realize within budget.
With several inputs the largest of these is returned.
"""

import dataclasses
import multiprocessing
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

from absl import app
from absl import logging
import ml_collections

from bicoend.cat import fincat
from bicoend.commands import common
from bicoend.derived import modification
from bicoend.extra import extranat
from bicoend.presentations import dsl
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports
from bicoend.utils import timing

ExitCode = constants.ExitCode

Checker = Callable[[Any, ml_collections.ConfigDict], reports.Report]

CHECKERS: Dict[str, Checker] = {
    'category': lambda c, _: fincat.check_category(c),
    'twocat': lambda t, _: twocat.check_two_category(t),
    'functor': lambda f, _: fincat.check_functor(f),
    'nat': lambda n, _: fincat.check_nat(n),
    'pseudofunctor': lambda p, _: pseudofunctor.check_pseudofunctor(p),
    'pseudonat': lambda a, _: pseudonat.check_pseudonat(a),
    'extranat': lambda b, params: extranat.check_extrapseudonat(
        b, params.use_constant_shortcut),
    'modification': lambda m, _: modification.check_modification(m),
}


@dataclasses.dataclass
class FileOutcome:
  """What checking one input file gave.

  Attributes:
    path: The input file.
    exit_code: Its exit code on its own.
    report: The merged report, when the file elaborated.
    error: The failure message, when it did not.
    timing: Stage runtimes recorded in the worker.
  """
  path: str
  exit_code: int
  report: Optional[reports.Report] = None
  error: Optional[str] = None
  timing: List[Dict[str, Any]] = dataclasses.field(default_factory=list)

  def to_dict(self) -> Dict[str, Any]:
    out = {'path': self.path, 'exit_code': self.exit_code}
    if self.report is not None:
      out['report'] = self.report.to_dict()
    if self.error is not None:
      out['error'] = self.error
    return out

  def summary(self) -> str:
    if self.report is not None:
      return self.report.summary()
    return f'ERROR {self.path}: {self.error}'


def check_environment(path: str, env: dsl.Environment,
                      params: ml_collections.ConfigDict) -> reports.Report:
  """Runs the checker of each declaration, in declaration order."""
  verdicts = []
  for name, (kind, value) in env.values.items():
    report = CHECKERS[kind](value, params)
    logging.vlog(1, '%s %s: %s', kind, name, report.counts())
    verdicts.append(report)
  return reports.merge(path, verdicts)


def check_file(args: Tuple[str, common.RunConfig]) -> FileOutcome:
  """Loads and checks one file; failures become the outcome."""
  path, config = args
  time_logs = []
  before = time.time()
  try:
    env = common.load_input(path, config)
    report = check_environment(path, env, config.budgets())
  except (errors.BicoendError, OSError) as e:
    code = common.exit_code_for(e)
    logging.error('%s: %s', path, e)
    return FileOutcome(path, int(code), error=str(e))
  time_logs.append(
      timing.timelog('check', path, before, size=len(report.entries),
                     update_global_variable=False))
  code = ExitCode.SUCCESS if report.passed else ExitCode.CHECK_FAILED
  if not report.passed:
    logging.warning('%s: %s failed', path, ', '.join(report.failed_axioms()))
  return FileOutcome(path, int(code), report, timing=time_logs)


def check_files(config: common.RunConfig) -> List[FileOutcome]:
  """Checks every input, in parallel when config.cpus > 0."""
  inputs = [(path, config) for path in config.inputs]
  if config.cpus == 0:
    outcomes = [check_file(one) for one in inputs]
  else:
    logging.log_first_n(logging.INFO,
                        f'Using multiprocessing: cpus is {config.cpus}.', 1)
    with multiprocessing.Pool(processes=config.cpus) as pool:
      # map keeps input order whatever order the workers finish in.
      outcomes = pool.map(check_file, inputs)
    logging.vlog(1, 'Multiprocessing pool is done. Number of outputs: %d',
                 len(outcomes))
  for outcome in outcomes:
    timing.timing.extend(outcome.timing)
  return outcomes


def run(config: common.RunConfig) -> ExitCode:
  """cmd_check: one merged report per input file."""
  if not config.inputs:
    raise errors.DslSyntaxError('no input given', 1, 1)
  outcomes = check_files(config)
  code = ExitCode(max(outcome.exit_code for outcome in outcomes))
  payload = {
      'schema': constants.REPORT_SCHEMA,
      'command': 'check',
      'exit_code': int(code),
      'inputs': [outcome.to_dict() for outcome in outcomes],
  }
  text = '\n'.join(outcome.summary() for outcome in outcomes)
  common.write_output(config, common.render(config, payload, text))
  return code


def main(argv):
  if len(argv) > 1:
    raise app.UsageError('Too many command-line arguments.')
  return common.execute(run, common.run_config('check'))


if __name__ == '__main__':
  common.register_required_flags()
  app.run(main)
