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
"""Restricting and pairing extrapseudonatural transformations in two variables.

A transformation γ: P ⇏ X in the pair (a, b) lives on the shape
1 × (A × B)^op × (A × B). Holding a fixed gives one in b alone and vice
versa; conversely a row family over a and a column family over b that share
their components combine into one in the pair, provided the two ways of
splitting each (f, g) into a row cell and a column cell agree.
"""

from typing import Dict, Mapping, Optional, Tuple

from absl import logging

from bicoend.cat import fincat
from bicoend.extra import extranat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import reports


def joint_form(p: pseudofunctor.PseudoFun) -> pseudofunctor.PseudoFun:
  """P on A^op × B^op × A × B as a pseudofunctor on 1 × (A×B)^op × (A×B)."""
  if len(p.dom.factor_list) != 4:
    raise errors.BoundaryMismatch(f'{p!r} is not on a four-factor shape')
  return pseudofunctor.add_parameter(
      pseudofunctor.regroup(p, ((0, 1), (2, 3))), twocat.terminal_2cat(),
      p.name)


def _pair_shapes(p: pseudofunctor.PseudoFun
                ) -> Tuple[twocat.Fin2Cat, twocat.Fin2Cat]:
  variable = p.dom.factor_list[2]
  parts = variable.factor_list
  if len(parts) != 2:
    raise errors.BoundaryMismatch(
        f'{p!r} is not a pseudofunctor in a pair of variables')
  return parts[0], parts[1]


def restriction_map(p: pseudofunctor.PseudoFun, side: int,
                    x: int) -> twocat.TwoFun:
  """The 2-functor 1 × S^op × S → 1 × (A×B)^op × (A×B) holding one side at x.

  Args:
    p: A pseudofunctor in the pair, as returned by joint_form.
    side: 0 to hold the A variable, 1 to hold the B variable.
    x: Object of the held shape.

  Returns:
    The TwoFun, where S is the shape left free.
  """
  shapes = _pair_shapes(p)
  held, free = shapes[side], shapes[1 - side]
  new_dom = twocat.product_2cat(twocat.terminal_2cat(),
                                twocat.opposite_2cat(free), free)
  held_leaves = [('object', int(y))
                 for y in twocat.leaf_coordinates(held, 'object')[x]]
  n_free = len(free.leaves)
  contravariant = list(range(1, 1 + n_free))
  covariant = list(range(1 + n_free, 1 + 2 * n_free))
  if side == 0:
    coords = [0] + held_leaves + contravariant + held_leaves + covariant
  else:
    coords = [0] + contravariant + held_leaves + covariant + held_leaves
  return twocat.coordinate_map(new_dom, p.dom, coords)


def _pack(side: int, held: int, free: int, kind: str,
          pair_shape: twocat.Fin2Cat) -> int:
  coords = [0, 0]
  coords[side] = held
  coords[1 - side] = free
  return pair_shape.pack(kind, coords)


def restrict(gamma: extranat.ExtraPseudoNat, side: int, x: int,
             name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """γ with one of its two variables held at an object.

  Args:
    gamma: A transformation into a constant category, in a pair of
      variables.
    side: 0 to hold the A variable at x, 1 to hold the B variable.
    x: Object of the held shape.
    name: Name of the result.

  Returns:
    The restricted transformation, which has passed its checker.

  Raises:
    BoundaryMismatch: if γ's target is not constant.
    CheckFailed: if the restriction fails its checker.
  """
  if extranat.constant_side(gamma) != 'target':
    raise errors.BoundaryMismatch(f'{gamma!r} does not have a constant target')
  shapes = _pair_shapes(gamma.source)
  held, free = shapes[side], shapes[1 - side]
  pair_shape = gamma.variable
  along = restriction_map(gamma.source, side, x)
  source = pseudofunctor.reindex(gamma.source, along,
                                 f'{gamma.source.name}[{held.objects[x]}]')
  comps = {}
  for y in range(free.num_objects):
    joint = _pack(side, x, y, 'object', pair_shape)
    comps[y] = gamma.comp(0, joint, 0)
  cells = {}
  for g in range(free.num_one_cells):
    joint = _pack(side, held.identity(x), g, 'one_cell', pair_shape)
    cells[g] = gamma.left[(0, joint, 0)]
  x_cat = gamma.target.obj[0]
  result = extranat.into_constant(name or f'{gamma.name}[{held.objects[x]}]',
                                  source, x_cat, comps, cells)
  extranat.check_extrapseudonat(result).raise_if_failed(
      f'restriction of {gamma.name}')
  return result


def composite_left_cell(p: pseudofunctor.PseudoFun,
                        comps: Mapping[int, fincat.Fun], g: int, f: int,
                        cell_g: fincat.Nat, cell_f: fincat.Nat,
                        a: int = 0) -> fincat.Nat:
  """The cell at g·f forced by EP1 from the cells at f and at g.

  Args:
    p: Source on Par × B^op × B.
    comps: β_{a x c} for each object x of B, at fixed a and c.
    g: 1-cell x' → x''.
    f: 1-cell x → x'.
    cell_g: The cell at g.
    cell_f: The cell at f.
    a: Parameter object.

  Returns:
    The cell at g·f.
  """
  factors = p.dom.factor_list
  bu = factors[2].underlying
  x, x1, x2 = int(bu.src[f]), int(bu.tgt[f]), int(bu.tgt[g])
  gf = factors[2].compose(g, f)
  one_a = factors[0].identity(a)

  def one(i, y):
    return factors[i].identity(y)

  def coh(path, other):
    return pseudofunctor.coherence_iso(
        p, [p.one_cell(*s) for s in path], [p.one_cell(*s) for s in other])

  hwl, hwr = fincat.hwhisker_left, fincat.hwhisker_right
  rhs = fincat.vchain(
      hwr(cell_f, p.fun(one_a, g, one(2, x))),
      hwl(comps[x1],
          coh([(one_a, g, one(2, x)), (one_a, one(1, x1), f)],
              [(one_a, one(1, x2), f), (one_a, g, one(2, x1))])),
      hwr(cell_g, p.fun(one_a, one(1, x2), f)))
  before = coh([(one_a, g, one(2, x)), (one_a, f, one(2, x))],
               [(one_a, gf, one(2, x))])
  after = coh([(one_a, one(1, x2), gf)],
              [(one_a, one(1, x2), f), (one_a, one(1, x2), g)])
  return fincat.vchain(
      hwl(comps[x], fincat.inverse_nat(before)), rhs,
      hwl(comps[x2], fincat.inverse_nat(after)))


def _shared_components(p, rows, cols) -> Dict[int, fincat.Fun]:
  a_shape, b_shape = _pair_shapes(p)
  comps = {}
  for a in range(a_shape.num_objects):
    for b in range(b_shape.num_objects):
      row = rows[a].comp(0, b, 0)
      col = cols[b].comp(0, a, 0)
      if not row == col:
        raise errors.ComponentMismatch(
            f'row {a_shape.objects[a]} and column {b_shape.objects[b]} '
            'disagree on their shared component')
      comps[p.dom.factor_list[2].pack('object', (a, b))] = row
  return comps


def _split_cells(p, rows, cols, comps, f: int, g: int):
  """The cell at (f, g) split with (f, 1) first, then with (1, g) first."""
  a_shape, b_shape = _pair_shapes(p)
  pair = p.dom.factor_list[2]
  au, bu = a_shape.underlying, b_shape.underlying
  a, a2 = int(au.src[f]), int(au.tgt[f])
  b, b2 = int(bu.src[g]), int(bu.tgt[g])
  across = pair.pack('one_cell', (f, b_shape.identity(b)))
  up = pair.pack('one_cell', (a_shape.identity(a2), g))
  first = composite_left_cell(p, comps, up, across, rows[a2].left[(0, g, 0)],
                              cols[b].left[(0, f, 0)])
  up = pair.pack('one_cell', (a_shape.identity(a), g))
  across = pair.pack('one_cell', (f, b_shape.identity(b2)))
  second = composite_left_cell(p, comps, across, up, cols[b2].left[(0, f, 0)],
                               rows[a].left[(0, g, 0)])
  return first, second


def compatibility_report(p: pseudofunctor.PseudoFun,
                         rows: Mapping[int, extranat.ExtraPseudoNat],
                         cols: Mapping[int, extranat.ExtraPseudoNat]
                        ) -> reports.Report:
  """Compares the two splittings of every (f, g) into row and column cells."""
  p = extranat.lift(p)
  a_shape, b_shape = _pair_shapes(p)
  comps = _shared_components(p, rows, cols)
  report = reports.Report(f'compatibility of rows and columns of {p.name}')
  for f in range(a_shape.num_one_cells):
    for g in range(b_shape.num_one_cells):
      first, second = _split_cells(p, rows, cols, comps, f, g)
      report.expect_equal('compatibility',
                          f'{a_shape.one_cells[f]},{b_shape.one_cells[g]}',
                          first, second)
  return report


def assemble_pair(p: pseudofunctor.PseudoFun, x: fincat.FinCat,
                  rows: Mapping[int, extranat.ExtraPseudoNat],
                  cols: Mapping[int, extranat.ExtraPseudoNat],
                  name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """Combines a row family and a column family into one transformation.

  Args:
    p: The source in the pair, as returned by joint_form.
    x: The constant target.
    rows: γ_{a-}: P(a, -, a, -) ⇏ x for each object a of A.
    cols: γ_{-b}: P(-, b, -, b) ⇏ x for each object b of B.
    name: Name of the result.

  Returns:
    γ: P ⇏ x, which has passed its checker.

  Raises:
    ComponentMismatch: if a row and a column disagree on a component.
    CompatibilityFailure: at the first (f, g) whose two splittings differ.
    CheckFailed: if the combined transformation fails its checker.
  """
  p = extranat.lift(p)
  a_shape, b_shape = _pair_shapes(p)
  pair = p.dom.factor_list[2]
  comps = _shared_components(p, rows, cols)
  cells = {}
  for f in range(a_shape.num_one_cells):
    for g in range(b_shape.num_one_cells):
      first, second = _split_cells(p, rows, cols, comps, f, g)
      if not first == second:
        key = (a_shape.one_cells[f], b_shape.one_cells[g])
        raise errors.CompatibilityFailure(
            f'row and column cells disagree at {key}', key)
      cells[pair.pack('one_cell', (f, g))] = first
  result = extranat.into_constant(name or f'<{p.name}>', p, x, comps, cells)
  extranat.check_extrapseudonat(result).raise_if_failed(
      f'assembled transformation {result.name}')
  logging.vlog(1, 'assembled %s from %d rows and %d columns', result.name,
               len(rows), len(cols))
  return result


def postcompose(k: fincat.Fun, gamma: extranat.ExtraPseudoNat,
                name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """k∘γ for γ into a constant category X and a functor k out of X."""
  if extranat.constant_side(gamma) != 'target':
    raise errors.BoundaryMismatch(f'{gamma!r} does not have a constant target')
  if not k.dom == gamma.target.obj[0]:
    raise errors.BoundaryMismatch(
        f'cannot postcompose {gamma!r} with a functor out of {k.dom.name}')
  b_shape = gamma.variable
  comps = {b: fincat.compose_fun(k, gamma.comp(0, b, 0))
           for b in range(b_shape.num_objects)}
  cells = {g: fincat.hwhisker_left(k, gamma.left[(0, g, 0)])
           for g in range(b_shape.num_one_cells)}
  return extranat.into_constant(name or f'{k.cod.name}.{gamma.name}',
                                gamma.source, k.cod, comps, cells)
