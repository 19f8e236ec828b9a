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
"""Bicoends as codescent objects.

A triple (Y, y, υ) solving the coherence data of P is the same thing as an
extrapseudonatural transformation P ⇏ Y: its components are y∘I_b and its
cells are υ∗J_g. The bicoend of P is the universal such transformation.
"""

import dataclasses
from typing import Mapping, Optional, Tuple

from absl import logging
import ml_collections

from bicoend.cat import fincat
from bicoend.codescent import coherence
from bicoend.codescent import solution as solution_lib
from bicoend.extra import extranat
from bicoend.presentations import unions
from bicoend.pseudo import pseudofunctor
from bicoend.utils import config as config_lib
from bicoend.utils import errors


@dataclasses.dataclass(frozen=True, eq=False)
class BicoendWitness:
  """i: P ⇏ ∫ᵇ P(b, b) together with the codescent object it came from."""
  solution: solution_lib.CodescentSolution
  extranat: extranat.ExtraPseudoNat

  @property
  def category(self) -> fincat.FinCat:
    return self.solution.category

  @property
  def coherence(self) -> coherence.CoherenceData:
    return self.solution.coherence

  def component(self, b: int) -> fincat.Fun:
    """i_b: P(b, b) → ∫ᵇ P(b, b)."""
    return self.extranat.comp(0, b, 0)

  def cell(self, g: int) -> fincat.Nat:
    return self.extranat.left[(0, g, 0)]


def to_extrapseudonat(cd: coherence.CoherenceData,
                      cand: solution_lib.CodescentSolution,
                      name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """The transformation P ⇏ Y of a triple (Y, y, υ).

  Raises:
    CheckFailed: if the result fails its checker.
  """
  b = cd.shape
  comps = {
      a: fincat.compose_fun(cand.x, cd.x1.inclusions[a])
      for a in range(b.num_objects)
  }
  cells = {
      g: fincat.hwhisker_right(cand.chi, cd.x2.inclusions[g])
      for g in range(b.num_one_cells)
  }
  result = extranat.into_constant(name or f'i({cd.name})', cd.source,
                                  cand.category, comps, cells)
  extranat.check_extrapseudonat(result).raise_if_failed(
      f'transformation of {cand.category.name}')
  return result


def from_extrapseudonat(
    j: extranat.ExtraPseudoNat,
    cd: Optional[coherence.CoherenceData] = None
) -> solution_lib.CodescentSolution:
  """The triple (Y, y, υ) of a transformation into a constant Y.

  Args:
    j: A transformation P ⇏ Y over the terminal parameter.
    cd: Coherence data of P; built from j's source when missing.

  Returns:
    The candidate solution; it has passed check_bc.

  Raises:
    BoundaryMismatch: if j's target is not constant.
    CheckFailed: if the triple fails BC1 or BC2.
  """
  if extranat.constant_side(j) != 'target':
    raise errors.BoundaryMismatch(f'{j!r} does not have a constant target')
  cd = cd or coherence.coherence_data_of(j.source)
  b = cd.shape
  x = unions.copair(cd.x1, [j.comp(0, a, 0) for a in range(b.num_objects)])
  chi = unions.copair_nat(
      cd.x2, [j.left[(0, g, 0)] for g in range(b.num_one_cells)])
  cand = solution_lib.candidate(cd, x, chi)
  solution_lib.check_bc(cd, cand).raise_if_failed(
      f'triple of {j.name}')
  return cand


def bicoend(p: pseudofunctor.PseudoFun,
            config: Optional[ml_collections.ConfigDict] = None,
            name: Optional[str] = None) -> BicoendWitness:
  """Computes ∫ᵇ P(b, b) for P on B^op × B.

  Args:
    p: The pseudofunctor; a terminal parameter is allowed.
    config: Budgets, see utils/config.py.
    name: Name of the bicoend category.

  Returns:
    The witness; its transformation has passed its checker.

  Raises:
    BudgetExhausted: if the codescent object does not realize within budget.
  """
  config = config or config_lib.get_config()
  cd = coherence.coherence_data_of(p)
  name = name or f'∫{p.name}'
  sol = solution_lib.compute_codescent(cd, config.budget,
                                       config.enumeration_limit, config.seed,
                                       name)
  j = to_extrapseudonat(cd, sol, f'i({p.name})')
  extranat.check_extrapseudonat(j, config.use_constant_shortcut
                               ).raise_if_failed(f'bicoend of {p.name}')
  logging.info('bicoend of %s: %d objects, %d morphisms', p.name,
               sol.category.num_objects, sol.category.num_morphisms)
  return BicoendWitness(sol, j)


def induce_from(witness: BicoendWitness, j: extranat.ExtraPseudoNat
               ) -> Tuple[fincat.Fun, fincat.Nat]:
  """ĵ: ∫ᵇ P(b, b) → Y with ĵ∘i = j, for a transformation j: P ⇏ Y."""
  return solution_lib.induce_1cell(
      witness.solution, from_extrapseudonat(j, witness.coherence))


def induce_between(witness: BicoendWitness, h: fincat.Fun, k: fincat.Fun,
                   cells: Mapping[int, fincat.Nat]) -> fincat.Nat:
  """The unique γ: h ⇒ k with γ∗1_{i_a} = Γ_a for every object a.

  Args:
    witness: The bicoend.
    h: ∫ᵇ P(b, b) → Y.
    k: ∫ᵇ P(b, b) → Y.
    cells: Γ_a: h∘i_a ⇒ k∘i_a for each object a of B.

  Returns:
    γ.

  Raises:
    CompatibilityFailure: if the Γ_a are not compatible with the cells i_f.
  """
  cd = witness.coherence
  gamma = unions.copair_nat(
      cd.x1, [cells[a] for a in range(cd.shape.num_objects)])
  return solution_lib.induce_2cell(witness.solution, h, k, gamma)
