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
r"""Builds and verifies the equivalence between joint and iterated bicoends.

Usage:
  bicoend fubini \
    --input=bicoend/testdata/walking_arrow.bicoend \
    --pseudofunctor=H \
    --interchange

The pseudofunctor must live on A^op x B^op x A x B. A pseudofunctor on a
product of products, such as hom(A x B), is first spread over the leaves of
its domain.
"""

import time

from absl import app
from absl import logging

from bicoend.commands import common
from bicoend.fubini import fubini as fubini_lib
from bicoend.pseudo import pseudofunctor
from bicoend.utils import constants
from bicoend.utils import timing


def run(config: common.RunConfig) -> constants.ExitCode:
  """cmd_fubini."""
  environments = common.load_inputs(config)
  p = pseudofunctor.flatten(
      common.find(environments, 'pseudofunctor', config.pseudofunctor))
  pseudofunctor.check_pseudofunctor(p).raise_if_failed(
      f'pseudofunctor {p.name}')
  params = config.budgets()
  before = time.time()
  swapped = None
  if config.interchange:
    swapped = fubini_lib.interchange(p, params)
    bundle = swapped.first
  else:
    bundle = fubini_lib.fubini_equivalence(p, params)
  timing.timelog('fubini', p.name, before, size=len(bundle.report.entries))
  counts = fubini_lib.pi0_counts(bundle)
  logging.info('fubini for %s: %s', p.name, counts)

  payload = fubini_lib.to_dict(bundle, swapped)
  lines = [
      f'joint: pi0 = {counts["joint"]}',
      f'iterated: pi0 = {counts["iterated"]}',
      bundle.report.summary(),
  ]
  if swapped is not None:
    lines.append(
        f'swapped: pi0 = {payload["interchange"]["swapped"]["pi0"]}')
    lines.append(swapped.report.summary())
  common.write_output(config, common.render(config, payload, '\n'.join(lines)))
  return constants.ExitCode.SUCCESS


def main(argv):
  if len(argv) > 1:
    raise app.UsageError('Too many command-line arguments.')
  return common.execute(run, common.run_config('fubini'))


if __name__ == '__main__':
  common.register_required_flags()
  app.run(main)
