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
"""Pseudonatural transformations between finite pseudofunctors."""

import dataclasses
from typing import Any, Dict, Mapping, Sequence, Tuple

from absl import logging

from bicoend.cat import fincat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import reports


@dataclasses.dataclass(frozen=True, eq=False)
class PseudoNat:
  """α: F ⇒ G with components α_a and invertible cells α_f.

  Attributes:
    name: Display name.
    source: F.
    target: G, on the same domain.
    comps: α_a: F(a) → G(a) for each object a.
    cells: α_f: α_b∘F(f) ⇒ G(f)∘α_a for each 1-cell f: a → b.
  """
  name: str
  source: pseudofunctor.PseudoFun
  target: pseudofunctor.PseudoFun
  comps: Tuple[fincat.Fun, ...]
  cells: Tuple[fincat.Nat, ...]

  def __post_init__(self):
    if not self.source.dom == self.target.dom:
      raise errors.BoundaryMismatch(
          f'{self.name}: {self.source!r} and {self.target!r} are not parallel')
    dom = self.source.dom
    if (len(self.comps) != dom.num_objects or
        len(self.cells) != dom.num_one_cells):
      raise errors.MalformedTables(f'{self.name}: tables do not match '
                                   f'{dom.name}')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, PseudoNat):
      return NotImplemented
    return (self.comps == other.comps and self.cells == other.cells and
            self.source == other.source and self.target == other.target)

  def __hash__(self) -> int:
    return hash(self.comps)

  def __repr__(self) -> str:
    return f'PseudoNat({self.source.name} => {self.target.name})'

  @property
  def dom(self) -> twocat.Fin2Cat:
    return self.source.dom


def check_pseudonat(alpha: PseudoNat) -> reports.Report:
  """Decides the three pseudonaturality axioms instance by instance.

  The first axiom is checked for every composable pair, the second for
  every 2-cell and the third for every object. Each failure carries both
  evaluated composites.

  Args:
    alpha: The candidate transformation.

  Returns:
    The Report.
  """
  report = reports.Report(f'pseudonatural transformation {alpha.name}')
  f_, g_ = alpha.source, alpha.target
  dom = alpha.dom
  u = dom.underlying
  names = dom.one_cells

  for x in range(dom.num_objects):
    comp = alpha.comps[x]
    ok = comp.dom == f_.obj[x] and comp.cod == g_.obj[x]
    report.record('components', dom.objects[x],
                  ok and fincat.check_functor(comp).passed)
  if not report.passed:
    return report
  for f in range(dom.num_one_cells):
    a, b = int(u.src[f]), int(u.tgt[f])
    cell = alpha.cells[f]
    ok = (cell.source == fincat.compose_fun(alpha.comps[b], f_.mor[f]) and
          cell.target == fincat.compose_fun(g_.mor[f], alpha.comps[a]))
    report.record('cell_boundaries', names[f],
                  ok and fincat.is_invertible_nat(cell) and
                  fincat.check_nat(cell).passed)
  if not report.passed:
    return report

  for g, f in dom.composable_pairs():
    a, c = int(u.src[f]), int(u.tgt[g])
    lhs = fincat.vcompose_nat(
        alpha.cells[dom.compose(g, f)],
        fincat.hwhisker_left(alpha.comps[c], f_.phi2[(g, f)]))
    rhs = fincat.vchain(
        fincat.hwhisker_right(alpha.cells[g], f_.mor[f]),
        fincat.hwhisker_left(g_.mor[g], alpha.cells[f]),
        fincat.hwhisker_right(g_.phi2[(g, f)], alpha.comps[a]))
    report.expect_equal('PS1', f'{names[g]},{names[f]}', lhs, rhs)

  for theta in range(dom.num_cells):
    f, f2 = dom.cell_source(theta), dom.cell_target(theta)
    if f == f2 and dom.cells.is_identity(theta):
      continue
    a, b = int(u.src[f]), int(u.tgt[f])
    lhs = fincat.vcompose_nat(
        alpha.cells[f2],
        fincat.hwhisker_left(alpha.comps[b], f_.cell[theta]))
    rhs = fincat.vcompose_nat(
        fincat.hwhisker_right(g_.cell[theta], alpha.comps[a]),
        alpha.cells[f])
    report.expect_equal('PS2', dom.cells.morphisms[theta], lhs, rhs)

  for x in range(dom.num_objects):
    lhs = fincat.vcompose_nat(
        fincat.hwhisker_right(g_.phi0[x], alpha.comps[x]),
        alpha.cells[dom.identity(x)])
    rhs = fincat.hwhisker_left(alpha.comps[x], f_.phi0[x])
    report.expect_equal('PS3', dom.objects[x], lhs, rhs)
  logging.vlog(1, 'check_pseudonat %s: %s', alpha.name, report.counts())
  return report


def identity_pseudonat(p: pseudofunctor.PseudoFun) -> PseudoNat:
  comps = tuple(fincat.identity_fun(x) for x in p.obj)
  cells = tuple(fincat.identity_nat(f) for f in p.mor)
  return PseudoNat(f'id({p.name})', p, p, comps, cells)


def compose_pseudonat(beta: PseudoNat, alpha: PseudoNat) -> PseudoNat:
  """Vertical composite β∘α of α: F ⇒ G and β: G ⇒ H."""
  if not alpha.target == beta.source:
    raise errors.BoundaryMismatch(
        f'cannot compose {beta!r} after {alpha!r}')
  u = alpha.dom.underlying
  comps = tuple(
      fincat.compose_fun(b, a) for b, a in zip(beta.comps, alpha.comps))
  cells = []
  for f in range(alpha.dom.num_one_cells):
    a, b = int(u.src[f]), int(u.tgt[f])
    cells.append(
        fincat.vcompose_nat(
            fincat.hwhisker_right(beta.cells[f], alpha.comps[a]),
            fincat.hwhisker_left(beta.comps[b], alpha.cells[f])))
  return PseudoNat(f'{beta.name}.{alpha.name}', alpha.source, beta.target,
                   comps, tuple(cells))


def reindex_pseudonat(alpha: PseudoNat, along: twocat.TwoFun) -> PseudoNat:
  """Restricts α along a strict 2-functor into its domain."""
  return PseudoNat(alpha.name, pseudofunctor.reindex(alpha.source, along),
                   pseudofunctor.reindex(alpha.target, along),
                   tuple(alpha.comps[x] for x in along.obj),
                   tuple(alpha.cells[f] for f in along.mor))


def extend_pseudonat(name: str,
                     source: pseudofunctor.PseudoFun,
                     target: pseudofunctor.PseudoFun,
                     comps: Sequence[fincat.Fun],
                     cells: Mapping[int, fincat.Nat]) -> PseudoNat:
  """Completes cells given on generating 1-cells.

  Identity cells follow from the unit axiom and composite cells from the
  composition axiom.

  Args:
    name: Name of the result.
    source: F.
    target: G.
    comps: Every component.
    cells: Cells for some 1-cells.

  Returns:
    The transformation; it is not checked here.

  Raises:
    MalformedTables: if some cell is not determined.
  """
  dom = source.dom
  u = dom.underlying
  known: Dict[int, fincat.Nat] = dict(cells)
  for x in range(dom.num_objects):
    i = dom.identity(x)
    if i not in known:
      known[i] = fincat.vcompose_nat(
          fincat.inverse_nat(
              fincat.hwhisker_right(target.phi0[x], comps[x])),
          fincat.hwhisker_left(comps[x], source.phi0[x]))
  pairs = dom.composable_pairs()
  changed = True
  while changed:
    changed = False
    for g, f in pairs:
      gf = dom.compose(g, f)
      if gf in known or g not in known or f not in known:
        continue
      a, c = int(u.src[f]), int(u.tgt[g])
      known[gf] = fincat.vchain(
          fincat.inverse_nat(fincat.hwhisker_left(comps[c],
                                                  source.phi2[(g, f)])),
          fincat.hwhisker_right(known[g], source.mor[f]),
          fincat.hwhisker_left(target.mor[g], known[f]),
          fincat.hwhisker_right(target.phi2[(g, f)], comps[a]))
      changed = True
  missing = [f for f in range(dom.num_one_cells) if f not in known]
  if missing:
    raise errors.MalformedTables(
        f'{name}: cells at {[dom.one_cells[f] for f in missing]} are not '
        'determined')
  return PseudoNat(name, source, target, tuple(comps),
                   tuple(known[f] for f in range(dom.num_one_cells)))


def _split(rest: twocat.Fin2Cat, kind: str, index: int,
           remaining: int) -> Tuple[int, ...]:
  if remaining == 0:
    return ()
  if remaining == 1:
    return (index,)
  return rest.unpack(kind, index)


def partial_transformation(p: pseudofunctor.PseudoFun, factor: int,
                           f: int) -> PseudoNat:
  """The transformation P(…,x,…) ⇒ P(…,x',…) induced by f: x → x'.

  Args:
    p: A pseudofunctor on a product shape.
    factor: Position of the top-level factor that f belongs to.
    f: A 1-cell of that factor.

  Returns:
    The pseudonatural transformation between the two restrictions, with
    components P(…,f,…) and cells built from coherence cells.
  """
  factors = p.dom.factor_list
  shape = factors[factor]
  x, x2 = int(shape.underlying.src[f]), int(shape.underlying.tgt[f])
  source = pseudofunctor.fix_arguments(p, {factor: x})
  target = pseudofunctor.fix_arguments(p, {factor: x2})
  rest = source.dom
  remaining = len(factors) - 1
  ru = rest.underlying

  def one_cell(at_factor, k):
    coords = list(_split(rest, 'one_cell', k, remaining))
    coords.insert(factor, at_factor)
    return p.one_cell(*coords)

  comps = tuple(
      p.mor[one_cell(f, rest.identity(r))] for r in range(rest.num_objects))
  cells = []
  for k in range(rest.num_one_cells):
    r, r2 = int(ru.src[k]), int(ru.tgt[k])
    cells.append(
        pseudofunctor.coherence_iso(
            p, [one_cell(shape.identity(x), k),
                one_cell(f, rest.identity(r2))],
            [one_cell(f, rest.identity(r)),
             one_cell(shape.identity(x2), k)]))
  return PseudoNat(f'{p.name}[{factor}={shape.one_cells[f]}]', source,
                   target, comps, tuple(cells))


def fix_pseudonat(alpha: PseudoNat, assignment: Mapping[int, int]) -> PseudoNat:
  """Restricts α to the factors left free by `assignment`."""
  if not assignment:
    return alpha
  return reindex_pseudonat(
      alpha, pseudofunctor.fixing_map(alpha.dom, assignment))


def add_parameter_pseudonat(alpha: PseudoNat,
                            shape: twocat.Fin2Cat) -> PseudoNat:
  """α on shape × dom(α), constant in the new factor."""
  return reindex_pseudonat(alpha,
                           pseudofunctor.parameter_map(shape, alpha.dom))


def pointwise_product_pseudonat(alpha: PseudoNat,
                                beta: PseudoNat) -> PseudoNat:
  """α × β: F × F' ⇒ G × G' with product components and cells."""
  source = pseudofunctor.pointwise_product(alpha.source, beta.source)
  target = pseudofunctor.pointwise_product(alpha.target, beta.target)
  comps = tuple(
      fincat.product_fun(a, b) for a, b in zip(alpha.comps, beta.comps))
  cells = tuple(
      fincat.product_nat(a, b) for a, b in zip(alpha.cells, beta.cells))
  return PseudoNat(f'{alpha.name}x{beta.name}', source, target, comps, cells)
