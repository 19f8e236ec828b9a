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
"""Bicoends with a parameter: a ↦ ∫ᵇ P(a, b, b) as a pseudofunctor.

Every structure map of the result is induced through the universal property
of the bicoend at its source: Q(f) from the transformation
i^{a'}∘P(f, -, -), and Q(θ), φ and φ0 from whiskered coherence cells of P.
"""

import dataclasses
from typing import Optional, Tuple

from absl import logging
import ml_collections

from bicoend.cat import fincat
from bicoend.codescent import bicoend as bicoend_lib
from bicoend.compose import composites
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import config as config_lib
from bicoend.utils import errors


@dataclasses.dataclass(frozen=True, eq=False)
class ParametrizedBicoend:
  """Q = ∫ᵇ P(-, b, b) with the bicoend it uses at each object.

  Attributes:
    source: P on A × B^op × B.
    pseudofunctor: Q on A.
    witnesses: The bicoend of P(a, -, -) for each object a of A.
  """
  source: pseudofunctor.PseudoFun
  pseudofunctor: pseudofunctor.PseudoFun
  witnesses: Tuple[bicoend_lib.BicoendWitness, ...]

  @property
  def parameter(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[0]

  @property
  def variable(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[2]

  def inclusion(self, a: int, b: int) -> fincat.Fun:
    """i^a_b: P(a, b, b) → Q(a)."""
    return self.witnesses[a].component(b)


def _induce_cells(bundle_witnesses, p, a_shape, b_shape, mor):
  """Q on 2-cells and the coherence cells of Q."""
  au = a_shape.underlying

  def one(y):
    return b_shape.identity(y)

  def along(witness, cell_of):
    return {
        y: fincat.hwhisker_left(witness.component(y), cell_of(y))
        for y in range(b_shape.num_objects)
    }

  cells = []
  for theta in range(a_shape.num_cells):
    f, f2 = a_shape.cell_source(theta), a_shape.cell_target(theta)
    a, a2 = int(au.src[f]), int(au.tgt[f])
    gamma = along(
        bundle_witnesses[a2], lambda y, theta=theta: p.cell[p.dom.pack(
            'cell', (theta, b_shape.identity_cell(one(y)),
                     b_shape.identity_cell(one(y))))])
    cells.append(
        bicoend_lib.induce_between(bundle_witnesses[a], mor[f], mor[f2],
                                   gamma))
  phi2 = {}
  for g, f in a_shape.composable_pairs():
    a, a3 = int(au.src[f]), int(au.tgt[g])
    gamma = along(
        bundle_witnesses[a3], lambda y, g=g, f=f: p.phi2[(p.one_cell(
            g, one(y), one(y)), p.one_cell(f, one(y), one(y)))])
    phi2[(g, f)] = bicoend_lib.induce_between(
        bundle_witnesses[a], fincat.compose_fun(mor[g], mor[f]),
        mor[a_shape.compose(g, f)], gamma)
  phi0 = []
  for a in range(a_shape.num_objects):
    gamma = along(
        bundle_witnesses[a],
        lambda y, a=a: p.phi0[p.dom.pack('object', (a, y, y))])
    phi0.append(
        bicoend_lib.induce_between(
            bundle_witnesses[a], mor[a_shape.identity(a)],
            fincat.identity_fun(bundle_witnesses[a].category), gamma))
  return tuple(cells), phi2, tuple(phi0)


def parametrized_bicoend(
    p: pseudofunctor.PseudoFun,
    config: Optional[ml_collections.ConfigDict] = None,
    name: Optional[str] = None) -> ParametrizedBicoend:
  """Computes a ↦ ∫ᵇ P(a, b, b) for P on A × B^op × B.

  Args:
    p: The pseudofunctor.
    config: Budgets, see utils/config.py.
    name: Name of the resulting pseudofunctor.

  Returns:
    The bundle; its pseudofunctor has passed check_pseudofunctor.

  Raises:
    BoundaryMismatch: if p is not on a three-factor shape.
    BudgetExhausted: if some bicoend does not realize within budget.
  """
  if len(p.dom.factor_list) != 3:
    raise errors.BoundaryMismatch(f'{p!r} is not on a shape A × B^op × B')
  config = config or config_lib.get_config()
  a_shape, _, b_shape = p.dom.factor_list
  witnesses = tuple(
      bicoend_lib.bicoend(
          pseudofunctor.fix_arguments(p, {0: a}), config,
          f'∫{p.name}({a_shape.objects[a]})')
      for a in range(a_shape.num_objects))
  au = a_shape.underlying
  mor = []
  for f in range(a_shape.num_one_cells):
    a, a2 = int(au.src[f]), int(au.tgt[f])
    moved = composites.stalactite(
        pseudonat.partial_transformation(p, 0, f), witnesses[a2].extranat,
        f'i.{p.name}({a_shape.one_cells[f]})')
    h, _ = bicoend_lib.induce_from(witnesses[a], moved)
    mor.append(h)
  mor = tuple(mor)
  cells, phi2, phi0 = _induce_cells(witnesses, p, a_shape, b_shape, mor)
  q = pseudofunctor.PseudoFun(name or f'∫{p.name}', a_shape,
                              tuple(w.category for w in witnesses), mor,
                              cells, phi2, phi0)
  pseudofunctor.check_pseudofunctor(q).raise_if_failed(
      f'parametrized bicoend {q.name}')
  logging.info('parametrized bicoend %s over %d objects', q.name,
               a_shape.num_objects)
  return ParametrizedBicoend(p, q, witnesses)


def inner_transformation(bundle: ParametrizedBicoend,
                         b: int) -> pseudonat.PseudoNat:
  """j_b: P(-, b, b) ⇒ Q, with identity cells.

  Raises:
    CheckFailed: if j_b fails its checker.
  """
  p = bundle.source
  q = bundle.pseudofunctor
  a_shape = bundle.parameter
  au = a_shape.underlying
  source = pseudofunctor.fix_arguments(p, {1: b, 2: b})
  comps = tuple(
      bundle.inclusion(a, b) for a in range(a_shape.num_objects))
  cells = tuple(
      fincat.identity_nat(
          fincat.compose_fun(comps[int(au.tgt[f])], source.mor[f]))
      for f in range(a_shape.num_one_cells))
  result = pseudonat.PseudoNat(
      f'j[{bundle.variable.objects[b]}]', source, q, comps, cells)
  pseudonat.check_pseudonat(result).raise_if_failed(
      f'inner transformation {result.name}')
  return result
