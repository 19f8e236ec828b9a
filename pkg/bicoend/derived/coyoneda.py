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
"""The co-Yoneda construction I(F) = ∫ᵃ F(a) × A(-, a).

Given concrete finite F: A^op → Cat, I(F) is the parametrized bicoend of
(b, a, a') ↦ F(a) × A(b, a'). Transformations and modifications are sent to
their images through the universal property at every object b.
"""

import dataclasses
from typing import Dict, Optional, Tuple

from absl import logging
import ml_collections

from bicoend.cat import fincat
from bicoend.codescent import bicoend as bicoend_lib
from bicoend.compose import composites
from bicoend.derived import modification as modification_lib
from bicoend.derived import parametrized
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import errors


@dataclasses.dataclass(frozen=True, eq=False)
class Image:
  """I(γ) with the cells I(γ)∘i ≅ i∘(γ × 1) it was induced with."""
  transformation: pseudonat.PseudoNat
  witnesses: Dict[Tuple[int, int], fincat.Nat]


def _maps(a: twocat.Fin2Cat):
  shape = twocat.product_2cat(
      twocat.opposite_2cat(a), twocat.opposite_2cat(a), a)
  hom = pseudofunctor.hom_functor(a)
  along_f = twocat.coordinate_map(shape, twocat.opposite_2cat(a), [1])
  along_hom = twocat.coordinate_map(shape, hom.dom, [0, 2])
  return hom, along_f, along_hom


def _check_domain(f: pseudofunctor.PseudoFun, a: twocat.Fin2Cat):
  if len(a.leaves) != 1:
    raise errors.BoundaryMismatch(f'{a.name} is not a single shape')
  if not f.dom == twocat.opposite_2cat(a):
    raise errors.BoundaryMismatch(f'{f!r} is not on {a.name}^op')


def weighted(f: pseudofunctor.PseudoFun,
             a: twocat.Fin2Cat) -> pseudofunctor.PseudoFun:
  """(b, x, y) ↦ F(x) × A(b, y) on A^op × A^op × A."""
  _check_domain(f, a)
  hom, along_f, along_hom = _maps(a)
  return pseudofunctor.pointwise_product(
      pseudofunctor.reindex(f, along_f), pseudofunctor.reindex(hom, along_hom),
      f'{f.name}x{a.name}')


def coyoneda_object(
    f: pseudofunctor.PseudoFun,
    a: twocat.Fin2Cat,
    config: Optional[ml_collections.ConfigDict] = None
) -> parametrized.ParametrizedBicoend:
  """I(F) on A^op, with the bicoend used at each object.

  Raises:
    BoundaryMismatch: if F is not on A^op.
    BudgetExhausted: if some bicoend does not realize within budget.
  """
  bundle = parametrized.parametrized_bicoend(weighted(f, a), config,
                                             f'I({f.name})')
  logging.info('co-Yoneda object of %s over %s', f.name, a.name)
  return bundle


def weighted_pseudonat(gamma: pseudonat.PseudoNat,
                       a: twocat.Fin2Cat) -> pseudonat.PseudoNat:
  """γ × 1: F(x) × A(b, y) ⇒ G(x) × A(b, y)."""
  _check_domain(gamma.source, a)
  hom, along_f, along_hom = _maps(a)
  return pseudonat.pointwise_product_pseudonat(
      pseudonat.reindex_pseudonat(gamma, along_f),
      pseudonat.identity_pseudonat(pseudofunctor.reindex(hom, along_hom)))


def coyoneda_on_pseudonat(
    gamma: pseudonat.PseudoNat,
    a: twocat.Fin2Cat,
    source: parametrized.ParametrizedBicoend,
    target: parametrized.ParametrizedBicoend) -> Image:
  """I(γ): I(F) ⇒ I(G) for γ: F ⇒ G.

  Args:
    gamma: The transformation.
    a: The shape A.
    source: I(F), from coyoneda_object.
    target: I(G), from coyoneda_object.

  Returns:
    The image; its transformation has passed check_pseudonat.

  Raises:
    CheckFailed: if the image fails its checker.
  """
  m = weighted_pseudonat(gamma, a)
  par = source.parameter
  pu = par.underlying
  comps = []
  witnesses = {}
  for b in range(par.num_objects):
    moved = composites.stalactite(
        pseudonat.fix_pseudonat(m, {0: b}), target.witnesses[b].extranat,
        f'i.{gamma.name}[{par.objects[b]}]')
    h, zeta = bicoend_lib.induce_from(source.witnesses[b], moved)
    comps.append(h)
    for x in range(a.num_objects):
      witnesses[(b, x)] = fincat.hwhisker_right(
          zeta, source.witnesses[b].coherence.x1.inclusions[x])
  p = m.source
  one = a.identity
  cells = []
  for k in range(par.num_one_cells):
    b, b2 = int(pu.src[k]), int(pu.tgt[k])
    gammas = {
        x: fincat.hwhisker_left(
            target.inclusion(b2, x),
            m.cells[p.one_cell(k, one(x), one(x))])
        for x in range(a.num_objects)
    }
    cells.append(
        bicoend_lib.induce_between(
            source.witnesses[b],
            fincat.compose_fun(comps[b2], source.pseudofunctor.mor[k]),
            fincat.compose_fun(target.pseudofunctor.mor[k], comps[b]),
            gammas))
  result = pseudonat.PseudoNat(f'I({gamma.name})', source.pseudofunctor,
                               target.pseudofunctor, tuple(comps),
                               tuple(cells))
  pseudonat.check_pseudonat(result).raise_if_failed(
      f'co-Yoneda image {result.name}')
  return Image(result, witnesses)


def coyoneda_on_modification(
    sigma: modification_lib.Modification, a: twocat.Fin2Cat,
    source: parametrized.ParametrizedBicoend,
    target: parametrized.ParametrizedBicoend, image_source: Image,
    image_target: Image) -> modification_lib.Modification:
  """I(Σ): I(γ) ⇛ I(δ) for Σ: γ ⇛ δ.

  Args:
    sigma: The modification.
    a: The shape A.
    source: I(F).
    target: I(G).
    image_source: I(γ).
    image_target: I(δ).

  Returns:
    The image; it has passed check_modification.

  Raises:
    CompatibilityFailure: if some component is not induced.
    CheckFailed: if the image fails its checker.
  """
  par = source.parameter
  hom = pseudofunctor.hom_functor(a)
  comps = []
  for b in range(par.num_objects):
    gammas = {}
    for x in range(a.num_objects):
      ident = fincat.identity_fun(hom.at(b, x))
      gammas[x] = fincat.hwhisker_left(
          target.inclusion(b, x),
          fincat.product_nat(sigma.comps[x], fincat.identity_nat(ident)))
    comps.append(
        bicoend_lib.induce_between(
            source.witnesses[b], image_source.transformation.comps[b],
            image_target.transformation.comps[b], gammas))
  result = modification_lib.Modification(f'I({sigma.name})',
                                         image_source.transformation,
                                         image_target.transformation,
                                         tuple(comps))
  modification_lib.check_modification(result).raise_if_failed(
      f'co-Yoneda image {result.name}')
  return result
