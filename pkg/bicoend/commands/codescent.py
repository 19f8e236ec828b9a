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
r"""Computes the bicoend of a pseudofunctor as a codescent object.

Usage:
  bicoend codescent \
    --input=bicoend/testdata/z2_action.bicoend \
    --pseudofunctor=P \
    --format=dot \
    --output=z2.dot

The JSON output holds the realized category, the functor x, the components
of χ, the number of connected components and the BC verdicts.
"""

import time

from absl import app
from absl import logging

from bicoend.cat import fincat
from bicoend.codescent import bicoend as bicoend_lib
from bicoend.codescent import export
from bicoend.codescent import solution as solution_lib
from bicoend.commands import common
from bicoend.pseudo import pseudofunctor
from bicoend.utils import constants
from bicoend.utils import timing


def run(config: common.RunConfig) -> constants.ExitCode:
  """cmd_codescent."""
  environments = common.load_inputs(config)
  p = common.find(environments, 'pseudofunctor', config.pseudofunctor)
  pseudofunctor.check_pseudofunctor(p).raise_if_failed(
      f'pseudofunctor {p.name}')
  before = time.time()
  witness = bicoend_lib.bicoend(p, config.budgets())
  solution = witness.solution
  timing.timelog('codescent', p.name, before,
                 size=solution.category.num_morphisms)
  report = solution_lib.check_bc(witness.coherence, solution)
  pi0 = fincat.pi0(solution.category)
  logging.info('codescent object of %s: pi0 = %d', p.name, pi0)

  payload = export.solution_to_dict(solution)
  payload['pi0'] = pi0
  payload['report'] = report.to_dict()
  text = '\n'.join([
      f'{solution.category.name}: {solution.category.num_objects} objects, '
      f'{solution.category.num_morphisms} morphisms, pi0 = {pi0}',
      report.summary(),
  ])
  common.write_output(
      config, common.render(config, payload, text, export.to_dot(solution)))
  if not report.passed:
    return constants.ExitCode.CHECK_FAILED
  return constants.ExitCode.SUCCESS


def main(argv):
  if len(argv) > 1:
    raise app.UsageError('Too many command-line arguments.')
  return common.execute(run, common.run_config('codescent'))


if __name__ == '__main__':
  common.register_required_flags()
  app.run(main)
