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
"""Codescent objects of coherence data in finite categories.

A solution is (X, x: X1 → X, χ: x∘u ⇒ x∘w) with χ invertible, subject to
two pasting equalities:

  BC1  (x∗λ)·(χ∗r)·(x∗ρ⁻¹)·(χ∗p) = (χ∗q)·(x∗κ)   per object of X3,
  BC2  χ∗v = (x∗γ)·(x∗δ)                           per object of X1.

compute_codescent presents X on the objects of X1 by the morphisms of X1
and a pair of generators χ_z, χ_z⁻¹ per object z of X2, and realizes the
quotient by bounded completion. Its universal property is available through
induce_1cell and induce_2cell.
"""

import dataclasses
from typing import Any, Dict, List, Optional, Sequence, Tuple

from absl import logging
import networkx as nx
import numpy as np

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.codescent import coherence
from bicoend.presentations import presentation
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports

Letters = Tuple[str, ...]
Relation = Tuple[Tuple[int, Letters], Tuple[int, Letters]]


@dataclasses.dataclass(frozen=True, eq=False)
class CodescentSolution:
  """A 0-cell X with x: X1 → X and an invertible χ: x∘u ⇒ x∘w.

  Attributes:
    coherence: The data this solves.
    category: X.
    x: X1 → X.
    chi: x∘u ⇒ x∘w.
    provenance: Computed here or supplied by a caller.
    adjoined: The presentation of X, for computed solutions.
    relations: The relations X was presented with, in letters.
  """
  coherence: coherence.CoherenceData
  category: fincat.FinCat
  x: fincat.Fun
  chi: fincat.Nat
  provenance: constants.Provenance = constants.Provenance.USER_SUPPLIED
  adjoined: Optional[presentation.Adjoined] = None
  relations: Tuple[Relation, ...] = ()

  @property
  def is_computed(self) -> bool:
    return self.adjoined is not None

  def describe(self) -> Dict[str, Any]:
    x2 = self.coherence.x2.category
    return {
        'schema': constants.SOLUTION_SCHEMA,
        'source': self.coherence.name,
        'provenance': self.provenance.value,
        'category': self.category.describe(),
        'x': self.x.describe()['objects'],
        'chi': {
            x2.objects[z]: self.category.morphisms[m]
            for z, m in enumerate(self.chi.comps)
        },
        'num_relations': len(self.relations),
    }


def candidate(cd: coherence.CoherenceData, x: fincat.Fun,
              chi: fincat.Nat) -> CodescentSolution:
  """Wraps a triple (Y, y, υ) supplied from outside."""
  return CodescentSolution(cd, x.cod, x, chi,
                           constants.Provenance.USER_SUPPLIED)


def chi_name(cd: coherence.CoherenceData, z: int) -> str:
  return f'{constants.CHI_PREFIX}[{cd.x2.category.objects[z]}]'


def chi_inverse_name(cd: coherence.CoherenceData, z: int) -> str:
  return f'{constants.CHI_INVERSE_PREFIX}[{cd.x2.category.objects[z]}]'


def _relations(cd: coherence.CoherenceData) -> List[Relation]:
  """Naturality, inverse, BC1 and BC2 relations, in application order."""
  x1, x2, x3 = cd.x1.category, cd.x2.category, cd.x3.category
  name = x1.morphisms
  relations = []
  for m in range(x2.num_morphisms):
    if x2.is_identity(m):
      continue
    z, z2 = int(x2.src[m]), int(x2.tgt[m])
    relations.append(
        ((int(cd.u.obj[z]), (name[cd.u.mor[m]], chi_name(cd, z2))),
         (int(cd.u.obj[z]), (chi_name(cd, z), name[cd.w.mor[m]]))))
  for z in range(x2.num_objects):
    relations.append(((int(cd.u.obj[z]), (chi_name(cd, z),
                                          chi_inverse_name(cd, z))),
                      (int(cd.u.obj[z]), ())))
    relations.append(((int(cd.w.obj[z]), (chi_inverse_name(cd, z),
                                          chi_name(cd, z))),
                      (int(cd.w.obj[z]), ())))
  rho_inverse = x1.inverses[cd.rho.comps]
  for t in range(x3.num_objects):
    start = int(cd.u.obj[cd.p.obj[t]])
    relations.append(
        ((start, (chi_name(cd, int(cd.p.obj[t])), name[rho_inverse[t]],
                  chi_name(cd, int(cd.r.obj[t])), name[cd.lam.comps[t]])),
         (start, (name[cd.kappa.comps[t]], chi_name(cd, int(cd.q.obj[t]))))))
  for s in range(x1.num_objects):
    start = int(cd.u.obj[cd.v.obj[s]])
    relations.append(
        ((start, (chi_name(cd, int(cd.v.obj[s])),)),
         (start, (name[cd.delta.comps[s]], name[cd.gamma.comps[s]]))))
  return relations


def compute_codescent(cd: coherence.CoherenceData,
                      budget: int = constants.DEFAULT_BUDGET,
                      enumeration_limit: int = constants
                      .DEFAULT_ENUMERATION_LIMIT,
                      seed: Optional[int] = 0,
                      name: Optional[str] = None) -> CodescentSolution:
  """Presents and realizes the codescent object of `cd`.

  Args:
    cd: Coherence data.
    budget: Completion step cap.
    enumeration_limit: Cap on the number of morphisms of X.
    seed: Interning seed for the generators.
    name: Name of X.

  Returns:
    A computed solution; it has passed check_bc.

  Raises:
    BudgetExhausted: if the quotient does not realize within budget.
    CheckFailed: if the realized solution fails BC1 or BC2.
  """
  x1, x2 = cd.x1.category, cd.x2.category
  arrows = []
  for z in range(x2.num_objects):
    arrows.append((chi_name(cd, z), int(cd.u.obj[z]), int(cd.w.obj[z])))
    arrows.append((chi_inverse_name(cd, z), int(cd.w.obj[z]),
                   int(cd.u.obj[z])))
  relations = _relations(cd)
  name = name or f'Cod({cd.name})'
  logging.info('presenting %s: %d objects, %d generators, %d relations', name,
               x1.num_objects, x1.num_morphisms + len(arrows), len(relations))
  adjoined = presentation.adjoin_generators(x1, arrows, relations, budget,
                                            enumeration_limit, seed, name)
  chi_comps = np.asarray([
      adjoined.evaluate(int(cd.u.obj[z]), [chi_name(cd, z)])
      for z in range(x2.num_objects)
  ], dtype=np.int64)
  x = adjoined.inclusion
  chi = fincat.Nat(
      fincat.compose_fun(x, cd.u), fincat.compose_fun(x, cd.w), chi_comps)
  solution = CodescentSolution(cd, adjoined.category, x, chi,
                               constants.Provenance.COMPUTED, adjoined,
                               tuple(relations))
  check_bc(cd, solution).raise_if_failed(f'codescent object {name}')
  logging.info('codescent object %s: %d objects, %d morphisms', name,
               adjoined.category.num_objects,
               adjoined.category.num_morphisms)
  return solution


def _check_boundaries(cd: coherence.CoherenceData, cand: CodescentSolution):
  if not cand.x.dom == cd.x1.category:
    raise errors.BoundaryMismatch(
        f'{cand.x!r} does not start at {cd.x1.category.name}')
  if not (cand.chi.source == fincat.compose_fun(cand.x, cd.u) and
          cand.chi.target == fincat.compose_fun(cand.x, cd.w)):
    raise errors.BoundaryMismatch(f'{cand.chi!r} is not a cell x∘u ⇒ x∘w')


def check_bc(cd: coherence.CoherenceData,
             cand: CodescentSolution) -> reports.Report:
  """Evaluates BC1 per object of X3 and BC2 per object of X1.

  Raises:
    BoundaryMismatch: if x or χ has the wrong boundary.
  """
  _check_boundaries(cd, cand)
  report = reports.Report(f'codescent conditions for {cand.category.name}')
  hwl, hwr = fincat.hwhisker_left, fincat.hwhisker_right
  x, chi = cand.x, cand.chi
  report.record('naturality', 'chi', fincat.check_nat(chi).passed)
  invertible = fincat.is_invertible_nat(chi)
  report.record('invertible', 'chi', invertible)
  if invertible and cd.x3.category.num_objects:
    lhs = fincat.vchain(
        hwr(chi, cd.p), hwl(x, fincat.inverse_nat(cd.rho)), hwr(chi, cd.r),
        hwl(x, cd.lam))
    rhs = fincat.vcompose_nat(hwr(chi, cd.q), hwl(x, cd.kappa))
    for t, tag in enumerate(cd.x3.category.objects):
      report.expect_equal('BC1', tag, cand.category.morphisms[lhs.comps[t]],
                          cand.category.morphisms[rhs.comps[t]])
  lhs = hwr(chi, cd.v)
  rhs = fincat.vcompose_nat(hwl(x, cd.gamma), hwl(x, cd.delta))
  for s, tag in enumerate(cd.x1.category.objects):
    report.expect_equal('BC2', tag, cand.category.morphisms[lhs.comps[s]],
                        cand.category.morphisms[rhs.comps[s]])
  return report


def _letter_images(solution: CodescentSolution,
                   cand: CodescentSolution) -> Dict[str, int]:
  cd = solution.coherence
  x1 = cd.x1.category
  y = cand.category
  images = {x1.morphisms[m]: int(cand.x.mor[m]) for m in range(
      x1.num_morphisms)}
  inverses = y.inverses[cand.chi.comps]
  for z in range(cd.x2.category.num_objects):
    if inverses[z] < 0:
      raise errors.RelationViolation(
          f'{chi_name(cd, z)} has no inverse in {y.name}')
    images[chi_name(cd, z)] = int(cand.chi.comps[z])
    images[chi_inverse_name(cd, z)] = int(inverses[z])
  return images


def _fold(y: fincat.FinCat, start: int, images: Sequence[int]) -> int:
  here = int(y.identity[start])
  for image in images:
    here = int(y.compose[image, here])
    if here < 0:
      raise errors.RelationViolation(
          f'letter images do not compose in {y.name}')
  return here


def induce_1cell(solution: CodescentSolution,
                 cand: CodescentSolution) -> Tuple[fincat.Fun, fincat.Nat]:
  """The 1-cell h: X → Y with ζ: h∘x ⇒ y induced by a candidate.

  Args:
    solution: A computed solution.
    cand: (Y, y, υ) passing check_bc for the same coherence data.

  Returns:
    (h, ζ) with ζ the identity, and the pasting (h∗χ) = υ verified.

  Raises:
    CheckFailed: if `solution` is not computed, or the pasting fails.
    RelationViolation: if the images break a relation of X.
  """
  if not solution.is_computed:
    raise errors.CheckFailed(
        f'{solution.category.name} has no presentation to induce from')
  cd = solution.coherence
  _check_boundaries(cd, cand)
  images = _letter_images(solution, cand)
  y = cand.category
  for (ls, left), (rs, right) in solution.relations:
    start = int(cand.x.obj[ls])
    if _fold(y, start, [images[l] for l in left]) != _fold(
        y, start, [images[l] for l in right]):
      raise errors.RelationViolation(
          f'{y.name} breaks the relation {left} = {right}')
  realization = solution.adjoined.realization
  generators = realization.system.generators
  mor = np.asarray([
      _fold(y, int(cand.x.obj[s]), [images[generators[g].name] for g in word])
      for s, word in zip(realization.sources, realization.words)
  ], dtype=np.int64)
  h = fincat.Fun(solution.category, y, cand.x.obj.copy(), mor)
  functor = fincat.check_functor(h)
  if not functor.passed:
    raise errors.RelationViolation(
        f'induced map {solution.category.name} -> {y.name} is not a functor: '
        f'{functor.summary()}')
  hx = fincat.compose_fun(h, solution.x)
  if not hx == cand.x:
    raise errors.CheckFailed(f'h∘x differs from y for {y.name}')
  zeta = fincat.identity_nat(hx)
  report = reports.Report(f'induced 1-cell into {y.name}')
  report.expect_equal('BC3', 'chi', fincat.hwhisker_left(h, solution.chi),
                      cand.chi)
  report.raise_if_failed(f'1-cell into {y.name}')
  logging.vlog(1, 'induced %s -> %s', solution.category.name, y.name)
  return h, zeta


def induce_2cell(solution: CodescentSolution, h: fincat.Fun, k: fincat.Fun,
                 gamma: fincat.Nat) -> fincat.Nat:
  """The unique β′: h ⇒ k with β′∗1_x = Γ.

  Args:
    solution: A solution whose x is the identity on objects.
    h: X → Y.
    k: X → Y.
    gamma: Γ: h∘x ⇒ k∘x.

  Returns:
    β′, with the same components as Γ.

  Raises:
    BoundaryMismatch: if Γ is not a cell h∘x ⇒ k∘x.
    CompatibilityFailure: naming the first object z of X2 where
      k(χ_z)·Γ_{u z} ≠ Γ_{w z}·h(χ_z).
  """
  cd = solution.coherence
  x = solution.x
  if not (gamma.source == fincat.compose_fun(h, x) and
          gamma.target == fincat.compose_fun(k, x)):
    raise errors.BoundaryMismatch(f'{gamma!r} is not a cell h∘x ⇒ k∘x')
  if not np.array_equal(x.obj, np.arange(x.dom.num_objects)):
    raise errors.BoundaryMismatch(
        f'{x!r} is not the identity on objects')
  y = h.cod
  chi = solution.chi.comps
  comps = gamma.comps
  x2 = cd.x2.category
  for z in range(x2.num_objects):
    lhs = y.compose[k.mor[chi[z]], comps[cd.u.obj[z]]]
    rhs = y.compose[comps[cd.w.obj[z]], h.mor[chi[z]]]
    if lhs != rhs:
      raise errors.CompatibilityFailure(
          f'Γ is not compatible with χ at {x2.objects[z]}', x2.objects[z])
  result = fincat.Nat(h, k, comps.copy())
  fincat.check_nat(result).raise_if_failed(
      f'induced 2-cell on {solution.category.name}')
  return result


def equivalence_of_solutions(
    s1: CodescentSolution,
    s2: CodescentSolution) -> equivalence.EquivalenceWitness:
  """The adjoint equivalence between two computed solutions of the same data.

  Raises:
    CheckFailed: if the equivalence fails verification.
  """
  s, _ = induce_1cell(s1, s2)
  t, _ = induce_1cell(s2, s1)
  one1 = fincat.identity_fun(s1.category)
  one2 = fincat.identity_fun(s2.category)
  unit = induce_2cell(s1, one1, fincat.compose_fun(t, s),
                      fincat.identity_nat(s1.x))
  counit = induce_2cell(s2, fincat.compose_fun(s, t), one2,
                        fincat.identity_nat(s2.x))
  witness = equivalence.EquivalenceWitness(s, t, unit, counit)
  equivalence.verify_adjoint_equivalence(witness).raise_if_failed(
      f'equivalence {s1.category.name} <-> {s2.category.name}')
  return witness


def transport_solution(solution: CodescentSolution,
                       cd: coherence.CoherenceData, along1: fincat.Fun,
                       along2: fincat.Fun) -> CodescentSolution:
  """A solution of `cd` from one of isomorphic data.

  Args:
    solution: A solution of the original data.
    cd: The new coherence data.
    along1: Isomorphism from the new X1 to the original.
    along2: Isomorphism from the new X2 to the original.

  Returns:
    (X, x∘along1, χ∗along2), checked against `cd`.

  Raises:
    BoundaryMismatch: if the isomorphisms do not intertwine u and w.
    CheckFailed: if the transported triple fails BC1 or BC2.
  """
  old = solution.coherence
  compose = fincat.compose_fun
  if not (compose(old.u, along2) == compose(along1, cd.u) and
          compose(old.w, along2) == compose(along1, cd.w)):
    raise errors.BoundaryMismatch(
        f'isomorphisms do not carry {cd.name} to {old.name}')
  moved = candidate(cd, compose(solution.x, along1),
                    fincat.hwhisker_right(solution.chi, along2))
  check_bc(cd, moved).raise_if_failed(
      f'transported solution {solution.category.name}')
  return moved


def codescent_components(cd: coherence.CoherenceData) -> List[List[int]]:
  """Connected components of X read off the presentation alone.

  Objects of X1 are joined along morphisms of X1 and along each χ_z. This
  is π0 of the codescent object without realizing it.
  """
  graph = nx.Graph()
  x1 = cd.x1.category
  graph.add_nodes_from(range(x1.num_objects))
  graph.add_edges_from(zip(x1.src.tolist(), x1.tgt.tolist()))
  graph.add_edges_from(zip(cd.u.obj.tolist(), cd.w.obj.tolist()))
  components = [sorted(c) for c in nx.connected_components(graph)]
  return sorted(components, key=lambda c: c[0])
