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
r"""Computes the co-Yoneda object I(F) = ∫ᵃ F(a) × A(-, a) and compares it with F.

Usage:
  bicoend coyoneda \
    --input=bicoend/testdata/pseudonats.bicoend \
    --modification=M

F is given by --pseudofunctor, or is the source of --transformation or of
--modification when one of those is set. A is the opposite of the domain of
F unless --shape says otherwise. At every object b the number of connected
components of I(F)(b) is compared with that of F(b); when F is discrete the
one-categorical co-Yoneda quotient is compared as well.
"""

import time
from typing import Any, Dict, Optional

from absl import app
from absl import logging

from bicoend.cat import fincat
from bicoend.commands import common
from bicoend.derived import coyoneda as coyoneda_lib
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import oracles
from bicoend.utils import random_instances
from bicoend.utils import reports
from bicoend.utils import timing


def discrete_values(f: pseudofunctor.PseudoFun,
                    a: twocat.Fin2Cat
                   ) -> Optional[random_instances.SetFunctor]:
  """F as a set-valued functor on A^op, or None when F is not discrete."""
  if a.num_cells != a.num_one_cells:
    return None
  if any(c.num_morphisms != c.num_objects for c in f.obj):
    return None
  return random_instances.SetFunctor(
      a.underlying, tuple(c.num_objects for c in f.obj),
      tuple(tuple(int(i) for i in fun.obj) for fun in f.mor),
      contravariant=True)


def compare(f: pseudofunctor.PseudoFun, a: twocat.Fin2Cat,
            bundle) -> reports.Report:
  """π0 of I(F)(b) against F(b) and, for discrete F, the set quotient."""
  report = reports.Report(f'co-Yoneda for {f.name}')
  discrete = discrete_values(f, a)
  for b, witness in enumerate(bundle.witnesses):
    name = a.objects[b]
    pi0 = fincat.pi0(witness.category)
    report.expect_equal('pi0', name, pi0, fincat.pi0(f.obj[b]))
    if discrete is not None:
      report.expect_equal('quotient', name, pi0,
                          oracles.coyoneda_quotient(discrete, b))
  return report


def _values(f, a, bundle) -> Dict[str, Any]:
  return {
      a.objects[b]: {
          'objects': w.category.num_objects,
          'morphisms': w.category.num_morphisms,
          'pi0': fincat.pi0(w.category),
          'value_pi0': fincat.pi0(f.obj[b]),
      } for b, w in enumerate(bundle.witnesses)
  }


def run(config: common.RunConfig) -> constants.ExitCode:
  """cmd_coyoneda."""
  environments = common.load_inputs(config)
  sigma = gamma = delta = None
  if config.modification:
    sigma = common.find(environments, 'modification', config.modification)
    gamma, delta = sigma.source, sigma.target
  elif config.transformation:
    gamma = common.find(environments, 'pseudonat', config.transformation)
  if gamma is not None:
    f = gamma.source
    if config.pseudofunctor and config.pseudofunctor != f.name:
      raise errors.BoundaryError(
          f'{gamma.name} does not start at {config.pseudofunctor}', 0, 0)
  else:
    f = common.find(environments, 'pseudofunctor', config.pseudofunctor)
  if config.shape:
    a = common.shape(environments, config.shape)
  else:
    a = twocat.opposite_2cat(f.dom)
  params = config.budgets()

  before = time.time()
  source = coyoneda_lib.coyoneda_object(f, a, params)
  timing.timelog('coyoneda', f.name, before)
  report = compare(f, a, source)
  payload = {
      'schema': constants.COYONEDA_SCHEMA,
      'source': f.name,
      'shape': a.name,
      'values': _values(f, a, source),
  }

  if gamma is not None:
    before = time.time()
    target = source
    if not gamma.target == f:
      target = coyoneda_lib.coyoneda_object(gamma.target, a, params)
    image = coyoneda_lib.coyoneda_on_pseudonat(gamma, a, source, target)
    report.record('transformation', image.transformation.name, True)
    payload['transformation'] = image.transformation.name
    if sigma is not None:
      image_delta = image
      if delta is not gamma:
        image_delta = coyoneda_lib.coyoneda_on_pseudonat(
            delta, a, source, target)
      result = coyoneda_lib.coyoneda_on_modification(sigma, a, source, target,
                                                     image, image_delta)
      report.record('modification', result.name, True)
      payload['modification'] = result.name
    timing.timelog('coyoneda images', gamma.name, before)

  logging.info('co-Yoneda for %s: %s', f.name, report.counts())
  payload['report'] = report.to_dict()
  lines = [
      f'{name}: pi0 = {value["pi0"]}, F: pi0 = {value["value_pi0"]}'
      for name, value in payload['values'].items()
  ]
  lines.append(report.summary())
  common.write_output(config, common.render(config, payload, '\n'.join(lines)))
  if not report.passed:
    return constants.ExitCode.CHECK_FAILED
  return constants.ExitCode.SUCCESS


def main(argv):
  if len(argv) > 1:
    raise app.UsageError('Too many command-line arguments.')
  return common.execute(run, common.run_config('coyoneda'))


if __name__ == '__main__':
  common.register_required_flags()
  app.run(main)
