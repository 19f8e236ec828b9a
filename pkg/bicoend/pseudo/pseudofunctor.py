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
"""Pseudofunctors from a finite 2-category into finite categories.

A `PseudoFun` stores one FinCat per object, one functor per 1-cell and one
natural transformation per 2-cell, together with the coherence cells

  phi2[(g, f)]: P(g)∘P(f) ⇒ P(g·f)   for every composable pair,
  phi0[a]:      P(1_a) ⇒ 1_{P(a)}     for every object.

All of them are stored in full, so checking the pseudofunctor axioms is a
finite scan of literal table equalities.
"""

import dataclasses
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from bicoend.cat import fincat
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import reports

Pair = Tuple[int, int]


@dataclasses.dataclass(frozen=True, eq=False)
class PseudoFun:
  """A pseudofunctor dom → Cat with finite values.

  Attributes:
    name: Display name.
    dom: The index 2-category.
    obj: Value at each object.
    mor: Functor for each 1-cell.
    cell: Transformation for each 2-cell.
    phi2: Composition coherence, keyed by (g, f) with g·f defined.
    phi0: Unit coherence for each object.
  """
  name: str
  dom: twocat.Fin2Cat
  obj: Tuple[fincat.FinCat, ...]
  mor: Tuple[fincat.Fun, ...]
  cell: Tuple[fincat.Nat, ...]
  phi2: Mapping[Pair, fincat.Nat]
  phi0: Tuple[fincat.Nat, ...]

  def __post_init__(self):
    if (len(self.obj) != self.dom.num_objects or
        len(self.mor) != self.dom.num_one_cells or
        len(self.cell) != self.dom.num_cells or
        len(self.phi0) != self.dom.num_objects):
      raise errors.MalformedTables(f'{self.name}: tables do not match '
                                   f'{self.dom.name}')
    missing = [
        pair for pair in self.dom.composable_pairs() if pair not in self.phi2
    ]
    if missing:
      g, f = missing[0]
      raise errors.MalformedTables(
          f'{self.name}: no coherence cell for {self.dom.one_cells[g]} after '
          f'{self.dom.one_cells[f]}')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, PseudoFun):
      return NotImplemented
    return (self.dom == other.dom and self.obj == other.obj and
            self.mor == other.mor and self.cell == other.cell and
            self.phi0 == other.phi0 and
            all(self.phi2[k] == other.phi2[k] for k in self.phi2))

  def __hash__(self) -> int:
    return hash((self.dom, self.obj))

  def __repr__(self) -> str:
    return f'PseudoFun({self.name!r} on {self.dom.name})'

  def one_cell(self, *coords: int) -> int:
    """1-cell index from top-level factor coordinates."""
    return self.dom.pack('one_cell', coords)

  def at(self, *coords: int) -> fincat.FinCat:
    return self.obj[self.dom.pack('object', coords)]

  def fun(self, *coords: int) -> fincat.Fun:
    return self.mor[self.one_cell(*coords)]

  def phi(self, g: int, f: int) -> fincat.Nat:
    return self.phi2[(g, f)]

  def describe(self) -> Dict[str, Any]:
    return {
        'name': self.name,
        'dom': self.dom.name,
        'objects': {
            name: self.obj[x].describe()
            for x, name in enumerate(self.dom.objects)
        },
        'one_cells': {
            name: self.mor[f].describe()
            for f, name in enumerate(self.dom.one_cells)
        },
    }


def check_pseudofunctor(p: PseudoFun) -> reports.Report:
  """Scans functoriality, coherence naturality, associativity and units."""
  report = reports.Report(f'pseudofunctor {p.name}')
  dom = p.dom
  u = dom.underlying
  names = dom.one_cells
  cell_names = dom.cells.morphisms

  for f in range(dom.num_one_cells):
    fun = p.mor[f]
    ok = (fun.dom == p.obj[u.src[f]] and fun.cod == p.obj[u.tgt[f]])
    if ok:
      sub = fincat.check_functor(fun)
      ok = sub.passed
    report.record('functors', names[f], ok)
  for a in range(dom.num_cells):
    nat = p.cell[a]
    ok = (nat.source == p.mor[dom.cell_source(a)] and
          nat.target == p.mor[dom.cell_target(a)])
    report.record('cells', cell_names[a], ok and fincat.check_nat(nat).passed)
  if not report.passed:
    return report

  for f in range(dom.num_one_cells):
    report.expect_equal('cell_identities', names[f],
                        p.cell[dom.identity_cell(f)],
                        fincat.identity_nat(p.mor[f]))
  c = dom.cells
  for b, a in zip(*np.nonzero(c.compose >= 0)):
    if c.is_identity(a) or c.is_identity(b):
      continue
    report.expect_equal(
        'cell_composites', f'{cell_names[b]}∘{cell_names[a]}',
        p.cell[c.compose[b, a]], fincat.vcompose_nat(p.cell[b], p.cell[a]))

  for (g, f), nat in sorted(p.phi2.items()):
    key = f'{names[g]},{names[f]}'
    ok = (nat.source == fincat.compose_fun(p.mor[g], p.mor[f]) and
          nat.target == p.mor[dom.compose(g, f)])
    report.record('phi_boundaries', key,
                  ok and fincat.is_invertible_nat(nat) and
                  fincat.check_nat(nat).passed)
  for x in range(dom.num_objects):
    nat = p.phi0[x]
    ok = (nat.source == p.mor[dom.identity(x)] and
          nat.target == fincat.identity_fun(p.obj[x]))
    report.record('phi_boundaries', dom.objects[x],
                  ok and fincat.is_invertible_nat(nat) and
                  fincat.check_nat(nat).passed)
  if not report.passed:
    return report

  # P(β∗α)∘φ_{g,f} = φ_{g',f'}∘(P(β)∗P(α)).
  h = dom.hcomp
  for b, a in zip(*np.nonzero(h >= 0)):
    if c.is_identity(a) and c.is_identity(b):
      continue
    g, f = dom.cell_source(b), dom.cell_source(a)
    g2, f2 = dom.cell_target(b), dom.cell_target(a)
    lhs = fincat.vcompose_nat(p.cell[h[b, a]], p.phi2[(g, f)])
    rhs = fincat.vcompose_nat(p.phi2[(g2, f2)],
                              fincat.hcompose_nat(p.cell[b], p.cell[a]))
    report.expect_equal('phi_naturality', f'{cell_names[b]}*{cell_names[a]}',
                        lhs, rhs)

  for k, g, f in dom.composable_triples():
    gf, kg = dom.compose(g, f), dom.compose(k, g)
    lhs = fincat.vcompose_nat(
        p.phi2[(k, gf)], fincat.hwhisker_left(p.mor[k], p.phi2[(g, f)]))
    rhs = fincat.vcompose_nat(
        p.phi2[(kg, f)], fincat.hwhisker_right(p.phi2[(k, g)], p.mor[f]))
    report.expect_equal('associativity', f'{names[k]},{names[g]},{names[f]}',
                        lhs, rhs)

  for f in range(dom.num_one_cells):
    a, b = int(u.src[f]), int(u.tgt[f])
    report.expect_equal('left_unit', names[f],
                        p.phi2[(dom.identity(b), f)],
                        fincat.hwhisker_right(p.phi0[b], p.mor[f]))
    report.expect_equal('right_unit', names[f],
                        p.phi2[(f, dom.identity(a))],
                        fincat.hwhisker_left(p.mor[f], p.phi0[a]))
  logging.vlog(1, 'check_pseudofunctor %s: %s', p.name, report.counts())
  return report


def _strict_coherence(dom: twocat.Fin2Cat, mor: Sequence[fincat.Fun]):
  phi2 = {(g, f): fincat.identity_nat(fincat.compose_fun(mor[g], mor[f]))
          for g, f in dom.composable_pairs()}
  phi0 = tuple(fincat.identity_nat(mor[dom.identity(x)])
               for x in range(dom.num_objects))
  return phi2, phi0


def constant_pseudofunctor(x: fincat.FinCat,
                           dom: twocat.Fin2Cat,
                           name: Optional[str] = None) -> PseudoFun:
  """Every object to x, every 1-cell and 2-cell to an identity."""
  ident = fincat.identity_fun(x)
  obj = (x,) * dom.num_objects
  mor = (ident,) * dom.num_one_cells
  cell = (fincat.identity_nat(ident),) * dom.num_cells
  phi2, phi0 = _strict_coherence(dom, mor)
  return PseudoFun(name or f'const({x.name})', dom, obj, mor, cell, phi2,
                   phi0)


def is_constant(p: PseudoFun) -> bool:
  """Whether p is a constant pseudofunctor on the nose."""
  x = p.obj[0]
  ident = fincat.identity_fun(x)
  return (all(o is x or o == x for o in p.obj) and
          all(m == ident for m in p.mor) and
          all(fincat.is_identity_nat(n) for n in p.cell) and
          all(fincat.is_identity_nat(n) for n in p.phi2.values()) and
          all(fincat.is_identity_nat(n) for n in p.phi0))


def extend_strict(name: str,
                  dom: twocat.Fin2Cat,
                  obj: Sequence[fincat.FinCat],
                  mor: Mapping[int, fincat.Fun],
                  cell: Optional[Mapping[int, fincat.Nat]] = None,
                  phi2: Optional[Mapping[Pair, fincat.Nat]] = None,
                  phi0: Optional[Mapping[int, fincat.Nat]] = None) -> PseudoFun:
  """Completes partial data to a pseudofunctor.

  Unspecified 1-cells are filled by composites of specified ones, and
  unspecified 2-cells by whiskering and vertical composition conjugated by
  the coherence cells. Unspecified coherence cells are identities, which
  requires the corresponding functors to agree on the nose.

  Args:
    name: Name of the result.
    dom: Index 2-category.
    obj: Value at each object.
    mor: Functors for some 1-cells, typically generators.
    cell: Transformations for some 2-cells, typically generators.
    phi2: Coherence cells that are not identities.
    phi0: Unit coherence cells that are not identities.

  Returns:
    The pseudofunctor; it is not checked here.

  Raises:
    MalformedTables: if some value is not determined by the given data.
  """
  u = dom.underlying
  images: Dict[int, fincat.Fun] = dict(mor)
  for x in range(dom.num_objects):
    images.setdefault(dom.identity(x), fincat.identity_fun(obj[x]))
  pairs = dom.composable_pairs()
  changed = True
  while changed:
    changed = False
    for g, f in pairs:
      gf = dom.compose(g, f)
      if gf not in images and g in images and f in images:
        images[gf] = fincat.compose_fun(images[g], images[f])
        changed = True
  missing = [f for f in range(dom.num_one_cells) if f not in images]
  if missing:
    raise errors.MalformedTables(
        f'{name}: 1-cells {[dom.one_cells[f] for f in missing]} are not '
        'determined')
  funs = tuple(images[f] for f in range(dom.num_one_cells))

  coherence = dict(phi2 or {})
  for g, f in pairs:
    if (g, f) in coherence:
      continue
    composite = fincat.compose_fun(funs[g], funs[f])
    if not composite == funs[dom.compose(g, f)]:
      raise errors.MalformedTables(
          f'{name}: coherence cell for {dom.one_cells[g]} after '
          f'{dom.one_cells[f]} is required')
    coherence[(g, f)] = fincat.identity_nat(composite)
  units = dict(phi0 or {})
  for x in range(dom.num_objects):
    if x not in units:
      ident = funs[dom.identity(x)]
      if not ident == fincat.identity_fun(obj[x]):
        raise errors.MalformedTables(
            f'{name}: unit coherence cell at {dom.objects[x]} is required')
      units[x] = fincat.identity_nat(ident)

  cells: Dict[int, fincat.Nat] = dict(cell or {})
  for f in range(dom.num_one_cells):
    cells.setdefault(dom.identity_cell(f), fincat.identity_nat(funs[f]))
  c = dom.cells
  changed = True
  while changed:
    changed = False
    for a in list(cells):
      f, g = dom.cell_source(a), dom.cell_target(a)
      # k∗a and a∗k conjugated by the coherence cells.
      for k in np.flatnonzero(u.src == u.tgt[f]):
        k = int(k)
        target = dom.whisker_left(k, a)
        if target not in cells:
          cells[target] = fincat.vchain(
              fincat.inverse_nat(coherence[(k, f)]),
              fincat.hwhisker_left(funs[k], cells[a]), coherence[(k, g)])
          changed = True
      for k in np.flatnonzero(u.tgt == u.src[f]):
        k = int(k)
        target = dom.whisker_right(a, k)
        if target not in cells:
          cells[target] = fincat.vchain(
              fincat.inverse_nat(coherence[(f, k)]),
              fincat.hwhisker_right(cells[a], funs[k]), coherence[(g, k)])
          changed = True
    for a in list(cells):
      for b in list(cells):
        ba = c.compose[b, a]
        if ba >= 0 and ba not in cells:
          cells[ba] = fincat.vcompose_nat(cells[b], cells[a])
          changed = True
  missing = [a for a in range(dom.num_cells) if a not in cells]
  if missing:
    raise errors.MalformedTables(
        f'{name}: 2-cells {[c.morphisms[a] for a in missing]} are not '
        'determined')
  return PseudoFun(name, dom, tuple(obj), funs,
                   tuple(cells[a] for a in range(dom.num_cells)), coherence,
                   tuple(units[x] for x in range(dom.num_objects)))


def reindex(p: PseudoFun, along: twocat.TwoFun,
            name: Optional[str] = None) -> PseudoFun:
  """The composite p∘along for a strict 2-functor `along`."""
  if not along.cod == p.dom:
    raise errors.BoundaryMismatch(
        f'cannot reindex {p!r} along a 2-functor into {along.cod.name}')
  dom = along.dom
  phi2 = {(g, f): p.phi2[(int(along.mor[g]), int(along.mor[f]))]
          for g, f in dom.composable_pairs()}
  return PseudoFun(
      name or p.name, dom, tuple(p.obj[x] for x in along.obj),
      tuple(p.mor[f] for f in along.mor), tuple(p.cell[a] for a in along.cell),
      phi2, tuple(p.phi0[x] for x in along.obj))


def _leaf_spans(t: twocat.Fin2Cat) -> list:
  spans, start = [], 0
  for factor in t.factor_list:
    n = len(factor.leaves)
    spans.append(list(range(start, start + n)))
    start += n
  return spans


def regroup(p: PseudoFun, grouping: Sequence[Any],
            name: Optional[str] = None) -> PseudoFun:
  """Reorders and regroups the top-level factors of p's domain.

  Args:
    p: A pseudofunctor on a product shape.
    grouping: Each entry is a factor position or a tuple of positions; the
      new domain is the product of those groups, e.g. ((0, 2), 1, 3).
    name: Name of the result.

  Returns:
    The reindexed pseudofunctor.
  """
  factors = p.dom.factor_list
  groups = [g if isinstance(g, tuple) else (g,) for g in grouping]
  flat = [i for g in groups for i in g]
  if sorted(flat) != list(range(len(factors))):
    raise errors.BoundaryMismatch(f'{grouping} does not regroup '
                                  f'{len(factors)} factors')
  new_dom = twocat.product_2cat(
      *[twocat.product_2cat(*[factors[i] for i in g]) for g in groups])
  spans = _leaf_spans(p.dom)
  new_leaf = {}
  position = 0
  for i in flat:
    for leaf in spans[i]:
      new_leaf[leaf] = position
      position += 1
  along = twocat.coordinate_map(new_dom, p.dom,
                                [new_leaf[j] for j in range(position)])
  return reindex(p, along, name)


def flatten(p: PseudoFun, name: Optional[str] = None) -> PseudoFun:
  """p on the product of the leaves of its domain, e.g. (A×B)^op × (A×B)."""
  leaves = p.dom.leaves
  if len(leaves) == len(p.dom.factor_list):
    return p
  along = twocat.coordinate_map(
      twocat.product_2cat(*leaves), p.dom, list(range(len(leaves))))
  return reindex(p, along, name)


def parameter_map(shape: twocat.Fin2Cat,
                  dom: twocat.Fin2Cat) -> twocat.TwoFun:
  """The projection shape × dom → dom that forgets a leading factor."""
  new_dom = twocat.product_2cat(shape, *dom.factor_list)
  offset = len(shape.leaves)
  return twocat.coordinate_map(
      new_dom, dom, [offset + j for j in range(len(dom.leaves))])


def add_parameter(p: PseudoFun, shape: twocat.Fin2Cat,
                  name: Optional[str] = None) -> PseudoFun:
  """p as a pseudofunctor on shape × dom(p), constant in the new factor."""
  return reindex(p, parameter_map(shape, p.dom), name)


def fixing_map(dom: twocat.Fin2Cat,
               assignment: Mapping[int, int]) -> twocat.TwoFun:
  """The inclusion of the remaining factors with some factors held fixed.

  Args:
    dom: A product shape.
    assignment: Factor position to object index of that factor.

  Returns:
    A TwoFun into dom from the product of the unassigned factors (the
    factor itself when one remains, the terminal 2-category when none does).
  """
  factors = dom.factor_list
  remaining = [i for i in range(len(factors)) if i not in assignment]
  new_dom = twocat.product_2cat(*[factors[i] for i in remaining])
  spans = _leaf_spans(dom)
  coords = [None] * len(dom.leaves)
  position = 0
  for i in remaining:
    for leaf in spans[i]:
      coords[leaf] = position
      position += 1
  for i, x in assignment.items():
    factor = factors[i]
    leaf_objects = twocat.leaf_coordinates(factor, 'object')[int(x)]
    for leaf, y in zip(spans[i], leaf_objects):
      coords[leaf] = ('object', int(y))
  return twocat.coordinate_map(new_dom, dom, coords)


def fix_arguments(p: PseudoFun,
                  assignment: Mapping[int, int],
                  name: Optional[str] = None) -> PseudoFun:
  """Holds some top-level arguments at given objects; see fixing_map."""
  if not assignment:
    return p
  factors = p.dom.factor_list
  along = fixing_map(p.dom, assignment)
  label = ','.join(
      f'{i}={factors[i].objects[x]}' for i, x in sorted(assignment.items()))
  return reindex(p, along, name or f'{p.name}[{label}]')


def composite_coherence(p: PseudoFun, path: Sequence[int]) -> fincat.Nat:
  """The cell P(f_n)∘…∘P(f_1) ⇒ P(f_n·…·f_1) for a path in application order."""
  current = path[0]
  nat = fincat.identity_nat(p.mor[current])
  for f in path[1:]:
    if p.dom.compose(f, current) < 0:
      raise errors.BoundaryMismatch(f'{p.name}: path does not compose')
    nat = fincat.vcompose_nat(p.phi2[(f, current)],
                              fincat.hwhisker_left(p.mor[f], nat))
    current = p.dom.compose(f, current)
  return nat


def coherence_iso(p: PseudoFun, path: Sequence[int],
                  other: Sequence[int]) -> fincat.Nat:
  """The invertible cell between two paths with the same composite.

  Args:
    p: The pseudofunctor.
    path: 1-cells in application order.
    other: 1-cells in application order, with the same composite.

  Returns:
    The cell P(path) ⇒ P(other) built from coherence cells.
  """
  there = composite_coherence(p, path)
  back = composite_coherence(p, other)
  return fincat.vcompose_nat(fincat.inverse_nat(back), there)


def _pair_fun(f: fincat.Fun, g: fincat.Fun, dom: fincat.FinCat,
              cod: fincat.FinCat) -> fincat.Fun:
  obj = (f.obj[:, None] * g.cod.num_objects + g.obj[None, :]).reshape(-1)
  mor = (f.mor[:, None] * g.cod.num_morphisms + g.mor[None, :]).reshape(-1)
  return fincat.Fun(dom, cod, obj, mor)


def pointwise_product(p: PseudoFun, q: PseudoFun,
                      name: Optional[str] = None) -> PseudoFun:
  """x ↦ P(x) × Q(x) on a common domain."""
  if not p.dom == q.dom:
    raise errors.BoundaryMismatch(f'{p!r} and {q!r} have different domains')
  dom = p.dom
  u = dom.underlying
  obj = tuple(
      fincat.product_cat(a, b) for a, b in zip(p.obj, q.obj))

  def fun(pf, qf, x, y):
    return _pair_fun(pf, qf, obj[x], obj[y])

  def nat(alpha, beta, source, target):
    m = beta.cod.num_morphisms
    comps = (alpha.comps[:, None] * m + beta.comps[None, :]).reshape(-1)
    return fincat.Nat(source, target, comps)

  mor = tuple(
      fun(p.mor[f], q.mor[f], u.src[f], u.tgt[f])
      for f in range(dom.num_one_cells))
  cell = tuple(
      nat(p.cell[a], q.cell[a], mor[dom.cell_source(a)],
          mor[dom.cell_target(a)]) for a in range(dom.num_cells))
  phi2 = {(g, f): nat(p.phi2[(g, f)], q.phi2[(g, f)],
                      fincat.compose_fun(mor[g], mor[f]),
                      mor[dom.compose(g, f)])
          for g, f in dom.composable_pairs()}
  phi0 = tuple(
      nat(p.phi0[x], q.phi0[x], mor[dom.identity(x)],
          fincat.identity_fun(obj[x])) for x in range(dom.num_objects))
  return PseudoFun(name or f'{p.name}x{q.name}', dom, obj, mor, cell, phi2,
                   phi0)


def hom_functor(a: twocat.Fin2Cat) -> PseudoFun:
  """The strict pseudofunctor (x, y) ↦ a(x, y) on a^op × a.

  A 1-cell (k, h) acts by φ ↦ h·φ·k and a 2-cell (κ, η) has component
  η∗1_φ∗κ at φ.
  """
  dom = twocat.product_2cat(twocat.opposite_2cat(a), a)
  homs = {}
  positions = {}
  for x in range(a.num_objects):
    for y in range(a.num_objects):
      sub, inclusion = twocat.hom(a, x, y)
      homs[(x, y)] = sub
      positions[(x, y)] = ({int(f): i for i, f in enumerate(inclusion.obj)},
                           {int(m): i for i, m in enumerate(inclusion.mor)},
                           inclusion)
  obj = tuple(homs[dom.unpack('object', z)] for z in range(dom.num_objects))
  u = a.underlying

  def action(k, h):
    x, y = int(u.tgt[k]), int(u.src[h])
    x2, y2 = int(u.src[k]), int(u.tgt[h])
    _, _, inclusion = positions[(x, y)]
    obj_pos, mor_pos, _ = positions[(x2, y2)]
    one = [obj_pos[a.compose(h, a.compose(int(f), k))] for f in inclusion.obj]
    two = [
        mor_pos[a.hcompose(a.identity_cell(h),
                           a.hcompose(int(m), a.identity_cell(k)))]
        for m in inclusion.mor
    ]
    return fincat.Fun(homs[(x, y)], homs[(x2, y2)],
                      np.asarray(one, dtype=np.int64),
                      np.asarray(two, dtype=np.int64))

  mor = tuple(action(*dom.unpack('one_cell', f))
              for f in range(dom.num_one_cells))
  cells = []
  for c in range(dom.num_cells):
    kappa, eta = dom.unpack('cell', c)
    source = mor[dom.cell_source(c)]
    target = mor[dom.cell_target(c)]
    k, h = a.cell_source(kappa), a.cell_source(eta)
    x, y = int(u.tgt[k]), int(u.src[h])
    x2, y2 = int(u.src[k]), int(u.tgt[h])
    _, _, inclusion = positions[(x, y)]
    _, mor_pos, _ = positions[(x2, y2)]
    comps = [
        mor_pos[a.hcompose(eta, a.hcompose(a.identity_cell(int(f)), kappa))]
        for f in inclusion.obj
    ]
    cells.append(fincat.Nat(source, target, np.asarray(comps,
                                                       dtype=np.int64)))
  phi2, phi0 = _strict_coherence(dom, mor)
  return PseudoFun(f'{a.name}(-,-)', dom, obj, mor, tuple(cells), phi2, phi0)


def representable(a: twocat.Fin2Cat, c: int) -> PseudoFun:
  """x ↦ a(x, c) as a pseudofunctor on a^op."""
  return fix_arguments(
      hom_functor(a), {1: c}, name=f'{a.name}(-,{a.objects[c]})')
