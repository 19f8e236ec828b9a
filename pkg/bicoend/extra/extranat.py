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
"""Extrapseudonatural transformations and their axiom checker.

An `ExtraPseudoNat` β: P ⇏ Q relates P on A × B^op × B and Q on
A × C^op × C. Its data are

  families[(b, c)]: P(-, b, b) ⇒ Q(-, c, c)          pseudonatural in A,
  left[(a, g, c)]:  β_abc∘P(a, g, 1) ⇒ β_ab'c∘P(a, 1, g)   for g: b → b',
  right[(a, b, h)]: Q(a, h, 1)∘β_abc' ⇒ Q(a, 1, h)∘β_abc   for h: c → c'.

Objects and 1-cells are indices into the factors of the two shapes; an
argument written 1 is the identity 1-cell of the relevant object.
"""

import dataclasses
from typing import Any, Dict, Mapping, Optional, Tuple

from absl import logging

from bicoend.cat import fincat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import reports

Key = Tuple[int, int, int]


@dataclasses.dataclass(frozen=True, eq=False)
class ExtraPseudoNat:
  """β: P ⇏ Q, pseudonatural in the parameter and extra in both variables.

  Attributes:
    name: Display name.
    source: P on Par × B^op × B.
    target: Q on Par × C^op × C.
    families: β_{-bc} for each object pair (b, c).
    left: β_{agc} for each object a, 1-cell g of B and object c.
    right: β_{abh} for each objects a, b and 1-cell h of C.
  """
  name: str
  source: pseudofunctor.PseudoFun
  target: pseudofunctor.PseudoFun
  families: Mapping[Tuple[int, int], pseudonat.PseudoNat]
  left: Mapping[Key, fincat.Nat]
  right: Mapping[Key, fincat.Nat]

  def __post_init__(self):
    for side in (self.source, self.target):
      if len(side.dom.factor_list) != 3:
        raise errors.BoundaryMismatch(
            f'{self.name}: {side!r} is not on a three-factor shape')
    if not self.parameter == self.target.dom.factor_list[0]:
      raise errors.BoundaryMismatch(
          f'{self.name}: source and target parameters differ')
    par, b, c = self.parameter, self.variable, self.covariable
    expected = {(x, y) for x in range(b.num_objects)
                for y in range(c.num_objects)}
    if set(self.families) != expected:
      raise errors.MalformedTables(f'{self.name}: incomplete families')
    if set(self.left) != {(a, g, y) for a in range(par.num_objects)
                          for g in range(b.num_one_cells)
                          for y in range(c.num_objects)}:
      raise errors.MalformedTables(f'{self.name}: incomplete left cells')
    if set(self.right) != {(a, x, h) for a in range(par.num_objects)
                           for x in range(b.num_objects)
                           for h in range(c.num_one_cells)}:
      raise errors.MalformedTables(f'{self.name}: incomplete right cells')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, ExtraPseudoNat):
      return NotImplemented
    return (self.source == other.source and self.target == other.target and
            all(self.families[k] == other.families[k] for k in self.families)
            and all(self.left[k] == other.left[k] for k in self.left) and
            all(self.right[k] == other.right[k] for k in self.right))

  def __hash__(self) -> int:
    return hash((self.source, self.target))

  def __repr__(self) -> str:
    return f'ExtraPseudoNat({self.source.name} =/=> {self.target.name})'

  @property
  def parameter(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[0]

  @property
  def variable(self) -> twocat.Fin2Cat:
    """The shape B whose two occurrences are in the source."""
    return self.source.dom.factor_list[2]

  @property
  def covariable(self) -> twocat.Fin2Cat:
    return self.target.dom.factor_list[2]

  def comp(self, a: int, b: int, c: int) -> fincat.Fun:
    return self.families[(b, c)].comps[a]


def lift(p: pseudofunctor.PseudoFun) -> pseudofunctor.PseudoFun:
  """A pseudofunctor on B^op × B as one on 1 × B^op × B."""
  if len(p.dom.factor_list) == 3:
    return p
  return pseudofunctor.add_parameter(p, twocat.terminal_2cat(), p.name)


def constant_on(x: fincat.FinCat,
                parameter: Optional[twocat.Fin2Cat] = None
               ) -> pseudofunctor.PseudoFun:
  """The constant pseudofunctor at x on Par × 1 × 1."""
  t = twocat.terminal_2cat()
  shape = twocat.product_2cat(parameter or t, t, t)
  return pseudofunctor.constant_pseudofunctor(x, shape, x.name)


class _Reader:
  """Evaluates P(x, y, z) on 1-cells and objects of a three-factor shape."""

  def __init__(self, p: pseudofunctor.PseudoFun):
    self.p = p
    self.factors = p.dom.factor_list

  def one(self, i: int, x: int) -> int:
    return self.factors[i].identity(x)

  def cell_id(self, i: int, f: int) -> int:
    return self.factors[i].identity_cell(f)

  def fun(self, f0: int, f1: int, f2: int) -> fincat.Fun:
    return self.p.fun(f0, f1, f2)

  def path(self, *steps: Tuple[int, int, int]) -> list:
    return [self.p.one_cell(*s) for s in steps]

  def coh(self, path, other) -> fincat.Nat:
    return pseudofunctor.coherence_iso(self.p, self.path(*path),
                                       self.path(*other))

  def cell(self, c0: int, c1: int, c2: int) -> fincat.Nat:
    return self.p.cell[self.p.dom.pack('cell', (c0, c1, c2))]

  def unit(self, x0: int, x1: int, x2: int) -> fincat.Nat:
    return self.p.phi0[self.p.dom.pack('object', (x0, x1, x2))]


def left_boundary(beta: ExtraPseudoNat, a: int, g: int,
                  c: int) -> Tuple[fincat.Fun, fincat.Fun]:
  p = _Reader(beta.source)
  bu = beta.variable.underlying
  b, b2 = int(bu.src[g]), int(bu.tgt[g])
  one_a = p.one(0, a)
  return (fincat.compose_fun(beta.comp(a, b, c),
                             p.fun(one_a, g, p.one(2, b))),
          fincat.compose_fun(beta.comp(a, b2, c),
                             p.fun(one_a, p.one(1, b2), g)))


def right_boundary(beta: ExtraPseudoNat, a: int, b: int,
                   h: int) -> Tuple[fincat.Fun, fincat.Fun]:
  q = _Reader(beta.target)
  cu = beta.covariable.underlying
  c, c2 = int(cu.src[h]), int(cu.tgt[h])
  one_a = q.one(0, a)
  return (fincat.compose_fun(q.fun(one_a, h, q.one(2, c2)),
                             beta.comp(a, b, c2)),
          fincat.compose_fun(q.fun(one_a, q.one(1, c), h),
                             beta.comp(a, b, c)))


def _check_boundaries(beta: ExtraPseudoNat, report: reports.Report):
  """Raises BoundaryMismatch on mistyped data, records the rest."""
  par, bshape, cshape = beta.parameter, beta.variable, beta.covariable
  for (b, c), family in sorted(beta.families.items()):
    expected_source = pseudofunctor.fix_arguments(beta.source, {1: b, 2: b})
    expected_target = pseudofunctor.fix_arguments(beta.target, {1: c, 2: c})
    if not (family.source == expected_source and
            family.target == expected_target):
      raise errors.BoundaryMismatch(
          f'{beta.name}: family at ({bshape.objects[b]},{cshape.objects[c]}) '
          'has the wrong source or target')
    report.extend(pseudonat.check_pseudonat(family),
                  prefix=f'{bshape.objects[b]},{cshape.objects[c]}:')
  for (a, g, c), nat in sorted(beta.left.items()):
    source, target = left_boundary(beta, a, g, c)
    key = f'{par.objects[a]},{bshape.one_cells[g]},{cshape.objects[c]}'
    if not (nat.source == source and nat.target == target):
      raise errors.BoundaryMismatch(f'{beta.name}: left cell at {key}')
    report.record('left_cells', key,
                  fincat.is_invertible_nat(nat) and
                  fincat.check_nat(nat).passed)
  for (a, b, h), nat in sorted(beta.right.items()):
    source, target = right_boundary(beta, a, b, h)
    key = f'{par.objects[a]},{bshape.objects[b]},{cshape.one_cells[h]}'
    if not (nat.source == source and nat.target == target):
      raise errors.BoundaryMismatch(f'{beta.name}: right cell at {key}')
    report.record('right_cells', key,
                  fincat.is_invertible_nat(nat) and
                  fincat.check_nat(nat).passed)


def _all_identities(cells) -> bool:
  return all(fincat.is_identity_nat(n) for n in cells)


def _is_terminal(t: twocat.Fin2Cat) -> bool:
  return t.num_objects == 1 and t.num_one_cells == 1 and t.num_cells == 1


def constant_side(beta: ExtraPseudoNat) -> Optional[str]:
  """Names the side on which half of the axioms hold without evaluation.

  'target' requires a terminal covariable, a constant target and identity
  right cells. 'source' is the mirror condition on the variable. A side that
  is constant over a larger shape returns None: the families at different
  objects still meet in EP3 or EP4.

  Returns:
    'target', 'source' or None.
  """
  if (_is_terminal(beta.covariable) and
      pseudofunctor.is_constant(beta.target) and
      _all_identities(beta.right.values())):
    return 'target'
  if (_is_terminal(beta.variable) and
      pseudofunctor.is_constant(beta.source) and
      _all_identities(beta.left.values())):
    return 'source'
  return None


def check_extrapseudonat(beta: ExtraPseudoNat,
                         use_constant_shortcut: bool = True
                        ) -> reports.Report:
  """Evaluates both sides of every instance of EP1 to EP7.

  Args:
    beta: The candidate.
    use_constant_shortcut: Whether to pass the axioms that only involve
      the constant side without evaluating them.

  Returns:
    The Report; each failure carries both evaluated cells.

  Raises:
    BoundaryMismatch: if a component or cell has the wrong type.
  """
  report = reports.Report(f'extrapseudonatural transformation {beta.name}')
  _check_boundaries(beta, report)
  if not report.passed:
    return report
  shortcut = constant_side(beta) if use_constant_shortcut else None
  trivial = {
      'target': ('EP2', 'EP4', 'EP5', 'EP7'),
      'source': ('EP1', 'EP3', 'EP5', 'EP6'),
  }.get(shortcut, ())
  for axiom in trivial:
    report.record(axiom, f'constant {shortcut}', True)
  if shortcut != 'source':
    _check_variable_axioms(beta, report)
  if shortcut != 'target':
    _check_covariable_axioms(beta, report)
  _check_units(beta, report, shortcut)
  logging.vlog(1, 'check_extrapseudonat %s: %s', beta.name, report.counts())
  return report


def _check_variable_axioms(beta: ExtraPseudoNat, report: reports.Report):
  """EP1, EP3 and EP6, which involve the source variable."""
  p = _Reader(beta.source)
  q = _Reader(beta.target)
  par, bshape, cshape = beta.parameter, beta.variable, beta.covariable
  bu, pu = bshape.underlying, par.underlying
  hwl, hwr = fincat.hwhisker_left, fincat.hwhisker_right

  for a in range(par.num_objects):
    one_a = p.one(0, a)
    for c in range(cshape.num_objects):
      for g, f in bshape.composable_pairs():
        b, b1, b2 = int(bu.src[f]), int(bu.tgt[f]), int(bu.tgt[g])
        gf = bshape.compose(g, f)
        lhs = fincat.vchain(
            hwl(beta.comp(a, b, c),
                p.coh([(one_a, g, p.one(2, b)), (one_a, f, p.one(2, b))],
                      [(one_a, gf, p.one(2, b))])),
            beta.left[(a, gf, c)],
            hwl(beta.comp(a, b2, c),
                p.coh([(one_a, p.one(1, b2), gf)],
                      [(one_a, p.one(1, b2), f), (one_a, p.one(1, b2), g)])))
        rhs = fincat.vchain(
            hwr(beta.left[(a, f, c)], p.fun(one_a, g, p.one(2, b))),
            hwl(beta.comp(a, b1, c),
                p.coh([(one_a, g, p.one(2, b)), (one_a, p.one(1, b1), f)],
                      [(one_a, p.one(1, b2), f), (one_a, g, p.one(2, b1))])),
            hwr(beta.left[(a, g, c)], p.fun(one_a, p.one(1, b2), f)))
        report.expect_equal(
            'EP1', f'{par.objects[a]},{bshape.one_cells[g]},'
            f'{bshape.one_cells[f]},{cshape.objects[c]}', lhs, rhs)

  for f in range(par.num_one_cells):
    a, a2 = int(pu.src[f]), int(pu.tgt[f])
    for g in range(bshape.num_one_cells):
      b, b2 = int(bu.src[g]), int(bu.tgt[g])
      for c in range(cshape.num_objects):
        d1 = fincat.vchain(
            hwr(beta.left[(a2, g, c)], p.fun(f, p.one(1, b2), p.one(2, b))),
            hwl(beta.comp(a2, b2, c),
                p.coh([(f, p.one(1, b2), p.one(2, b)),
                       (p.one(0, a2), p.one(1, b2), g)],
                      [(p.one(0, a), p.one(1, b2), g),
                       (f, p.one(1, b2), p.one(2, b2))])),
            hwr(beta.families[(b2, c)].cells[f],
                p.fun(p.one(0, a), p.one(1, b2), g)))
        d2 = fincat.vchain(
            hwl(beta.comp(a2, b, c),
                p.coh([(f, p.one(1, b2), p.one(2, b)),
                       (p.one(0, a2), g, p.one(2, b))],
                      [(p.one(0, a), g, p.one(2, b)),
                       (f, p.one(1, b), p.one(2, b))])),
            hwr(beta.families[(b, c)].cells[f],
                p.fun(p.one(0, a), g, p.one(2, b))),
            hwl(q.fun(f, q.one(1, c), q.one(2, c)), beta.left[(a, g, c)]))
        report.expect_equal(
            'EP3', f'{par.one_cells[f]},{bshape.one_cells[g]},'
            f'{cshape.objects[c]}', d1, d2)

  for theta in bshape.nonidentity_cells():
    g, g2 = bshape.cell_source(theta), bshape.cell_target(theta)
    b, b2 = int(bu.src[g]), int(bu.tgt[g])
    for a in range(par.num_objects):
      id_a = p.cell_id(0, p.one(0, a))
      for c in range(cshape.num_objects):
        lhs = fincat.vcompose_nat(
            beta.left[(a, g2, c)],
            hwl(beta.comp(a, b, c),
                p.cell(id_a, theta, p.cell_id(2, p.one(2, b)))))
        rhs = fincat.vcompose_nat(
            hwl(beta.comp(a, b2, c),
                p.cell(id_a, p.cell_id(1, p.one(1, b2)), theta)),
            beta.left[(a, g, c)])
        report.expect_equal(
            'EP6', f'{par.objects[a]},{bshape.cells.morphisms[theta]},'
            f'{cshape.objects[c]}', lhs, rhs)


def _check_covariable_axioms(beta: ExtraPseudoNat, report: reports.Report):
  """EP2, EP4 and EP7, which involve the target variable."""
  q = _Reader(beta.target)
  p = _Reader(beta.source)
  par, bshape, cshape = beta.parameter, beta.variable, beta.covariable
  cu, pu = cshape.underlying, par.underlying
  hwl, hwr = fincat.hwhisker_left, fincat.hwhisker_right

  for a in range(par.num_objects):
    one_a = q.one(0, a)
    for b in range(bshape.num_objects):
      for i, h in cshape.composable_pairs():
        c, c1, c2 = int(cu.src[h]), int(cu.tgt[h]), int(cu.tgt[i])
        ih = cshape.compose(i, h)
        lhs = fincat.vchain(
            hwr(q.coh([(one_a, i, q.one(2, c2)), (one_a, h, q.one(2, c2))],
                      [(one_a, ih, q.one(2, c2))]), beta.comp(a, b, c2)),
            beta.right[(a, b, ih)],
            hwr(q.coh([(one_a, q.one(1, c), ih)],
                      [(one_a, q.one(1, c), h), (one_a, q.one(1, c), i)]),
                beta.comp(a, b, c)))
        rhs = fincat.vchain(
            hwl(q.fun(one_a, h, q.one(2, c2)), beta.right[(a, b, i)]),
            hwr(q.coh([(one_a, q.one(1, c1), i), (one_a, h, q.one(2, c2))],
                      [(one_a, h, q.one(2, c1)), (one_a, q.one(1, c), i)]),
                beta.comp(a, b, c1)),
            hwl(q.fun(one_a, q.one(1, c), i), beta.right[(a, b, h)]))
        report.expect_equal(
            'EP2', f'{par.objects[a]},{bshape.objects[b]},'
            f'{cshape.one_cells[i]},{cshape.one_cells[h]}', lhs, rhs)

  for f in range(par.num_one_cells):
    a, a2 = int(pu.src[f]), int(pu.tgt[f])
    for h in range(cshape.num_one_cells):
      c, c2 = int(cu.src[h]), int(cu.tgt[h])
      for b in range(bshape.num_objects):
        d1 = fincat.vchain(
            hwr(beta.right[(a2, b, h)], p.fun(f, p.one(1, b), p.one(2, b))),
            hwl(q.fun(q.one(0, a2), q.one(1, c), h),
                beta.families[(b, c)].cells[f]),
            hwr(q.coh([(f, q.one(1, c), q.one(2, c)),
                       (q.one(0, a2), q.one(1, c), h)],
                      [(q.one(0, a), q.one(1, c), h),
                       (f, q.one(1, c), q.one(2, c2))]), beta.comp(a, b, c)))
        d2 = fincat.vchain(
            hwl(q.fun(q.one(0, a2), h, q.one(2, c2)),
                beta.families[(b, c2)].cells[f]),
            hwr(q.coh([(f, q.one(1, c2), q.one(2, c2)),
                       (q.one(0, a2), h, q.one(2, c2))],
                      [(q.one(0, a), h, q.one(2, c2)),
                       (f, q.one(1, c), q.one(2, c2))]), beta.comp(a, b, c2)),
            hwl(q.fun(f, q.one(1, c), q.one(2, c2)), beta.right[(a, b, h)]))
        report.expect_equal(
            'EP4', f'{par.one_cells[f]},{bshape.objects[b]},'
            f'{cshape.one_cells[h]}', d1, d2)

  for delta in cshape.nonidentity_cells():
    h, h2 = cshape.cell_source(delta), cshape.cell_target(delta)
    c, c2 = int(cu.src[h]), int(cu.tgt[h])
    for a in range(par.num_objects):
      id_a = q.cell_id(0, q.one(0, a))
      for b in range(bshape.num_objects):
        lhs = fincat.vcompose_nat(
            hwr(q.cell(id_a, q.cell_id(1, q.one(1, c)), delta),
                beta.comp(a, b, c)), beta.right[(a, b, h)])
        rhs = fincat.vcompose_nat(
            beta.right[(a, b, h2)],
            hwr(q.cell(id_a, delta, q.cell_id(2, q.one(2, c2))),
                beta.comp(a, b, c2)))
        report.expect_equal(
            'EP7', f'{par.objects[a]},{bshape.objects[b]},'
            f'{cshape.cells.morphisms[delta]}', lhs, rhs)


def _check_units(beta: ExtraPseudoNat, report: reports.Report,
                 shortcut: Optional[str]):
  """EP5: cells at identity 1-cells are literal identities."""
  par, bshape, cshape = beta.parameter, beta.variable, beta.covariable
  for a in range(par.num_objects):
    for c in range(cshape.num_objects):
      for b in range(bshape.num_objects):
        if shortcut != 'source':
          nat = beta.left[(a, bshape.identity(b), c)]
          report.expect_equal(
              'EP5', f'{par.objects[a]},{bshape.one_cells[bshape.identity(b)]}'
              f',{cshape.objects[c]}', nat, fincat.identity_nat(nat.source))
        if shortcut != 'target':
          nat = beta.right[(a, b, cshape.identity(c))]
          report.expect_equal(
              'EP5', f'{par.objects[a]},{bshape.objects[b]},'
              f'{cshape.one_cells[cshape.identity(c)]}', nat,
              fincat.identity_nat(nat.source))


def into_constant(name: str, source: pseudofunctor.PseudoFun,
                  x: fincat.FinCat, comps: Mapping[int, fincat.Fun],
                  cells: Mapping[int, fincat.Nat]) -> ExtraPseudoNat:
  """β: P ⇏ x over the terminal parameter from its components and cells.

  Args:
    name: Name of the result.
    source: P on B^op × B or on 1 × B^op × B.
    x: The constant target.
    comps: β_b: P(b, b) → x for each object b.
    cells: β_g: β_b∘P(g, 1) ⇒ β_b'∘P(1, g) for each 1-cell g.

  Returns:
    The transformation, with the parameter cells forced by the unit axiom
    and identity cells on the constant side. It is not checked here.
  """
  p = lift(source)
  target = constant_on(x, p.dom.factor_list[0])
  b_shape = p.dom.factor_list[2]
  families = {}
  for b in range(b_shape.num_objects):
    family_source = pseudofunctor.fix_arguments(p, {1: b, 2: b})
    family_target = pseudofunctor.fix_arguments(target, {1: 0, 2: 0})
    comp = comps[b]
    unit = fincat.hwhisker_left(comp, p.phi0[p.dom.pack('object', (0, b, b))])
    families[(b, 0)] = pseudonat.PseudoNat(f'{name}[{b_shape.objects[b]}]',
                                           family_source, family_target,
                                           (comp,), (unit,))
  left = {(0, g, 0): cells[g] for g in range(b_shape.num_one_cells)}
  ident = target.mor[0]
  right = {(0, b, 0): fincat.identity_nat(fincat.compose_fun(ident, comps[b]))
           for b in range(b_shape.num_objects)}
  return ExtraPseudoNat(name, p, target, families, left, right)


def out_of_constant(name: str, x: fincat.FinCat,
                    target: pseudofunctor.PseudoFun,
                    comps: Mapping[int, fincat.Fun],
                    cells: Mapping[int, fincat.Nat]) -> ExtraPseudoNat:
  """β: x ⇏ Q over the terminal parameter; dual of into_constant."""
  q = lift(target)
  source = constant_on(x, q.dom.factor_list[0])
  c_shape = q.dom.factor_list[2]
  families = {}
  for c in range(c_shape.num_objects):
    family_source = pseudofunctor.fix_arguments(source, {1: 0, 2: 0})
    family_target = pseudofunctor.fix_arguments(q, {1: c, 2: c})
    comp = comps[c]
    unit = fincat.inverse_nat(
        fincat.hwhisker_right(q.phi0[q.dom.pack('object', (0, c, c))], comp))
    families[(0, c)] = pseudonat.PseudoNat(f'{name}[{c_shape.objects[c]}]',
                                           family_source, family_target,
                                           (comp,), (unit,))
  ident = source.mor[0]
  left = {(0, 0, c): fincat.identity_nat(fincat.compose_fun(comps[c], ident))
          for c in range(c_shape.num_objects)}
  right = {(0, 0, h): cells[h] for h in range(c_shape.num_one_cells)}
  return ExtraPseudoNat(name, source, q, families, left, right)


def with_cells(beta: ExtraPseudoNat,
               left: Optional[Mapping[Key, fincat.Nat]] = None,
               right: Optional[Mapping[Key, fincat.Nat]] = None,
               name: Optional[str] = None) -> ExtraPseudoNat:
  """A copy of β with some cells replaced."""
  new_left: Dict[Key, fincat.Nat] = dict(beta.left)
  new_left.update(left or {})
  new_right: Dict[Key, fincat.Nat] = dict(beta.right)
  new_right.update(right or {})
  return ExtraPseudoNat(name or beta.name, beta.source, beta.target,
                        beta.families, new_left, new_right)
