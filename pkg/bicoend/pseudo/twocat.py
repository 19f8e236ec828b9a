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
"""Finite strict 2-categories used as index shapes.

A `Fin2Cat` keeps its 1-cells in an underlying FinCat and its 2-cells in a
second FinCat whose objects are the 1-cells, so vertical composition is the
composition of that category. Horizontal composition is a dense table over
pairs of 2-cells.

Products are built by folding `product_cat` from the left, so every index is
the mixed-radix encoding of its coordinates in the factors.
"""

import dataclasses
import functools
import itertools
import re
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from bicoend.cat import fincat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports


@dataclasses.dataclass(frozen=True, eq=False)
class Fin2Cat:
  """A finite strict 2-category.

  Attributes:
    name: Display name.
    underlying: Objects and 1-cells.
    cells: A FinCat whose objects are the 1-cells of `underlying`, in the
      same order, and whose morphisms are the 2-cells.
    hcomp: hcomp[b, a] is the horizontal composite b∗a, or -1.
    factors: The factors when this is a product, else empty.
  """
  name: str
  underlying: fincat.FinCat
  cells: fincat.FinCat
  hcomp: np.ndarray
  factors: Tuple['Fin2Cat', ...] = ()

  def __post_init__(self):
    if self.cells.num_objects != self.underlying.num_morphisms:
      raise errors.MalformedTables(
          f'{self.name}: 2-cells must be indexed over the 1-cells')
    n = self.cells.num_morphisms
    if self.hcomp.shape != (n, n):
      raise errors.MalformedTables(
          f'{self.name}: bad horizontal composition table')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, Fin2Cat):
      return NotImplemented
    return (self.underlying == other.underlying and
            self.cells == other.cells and
            np.array_equal(self.hcomp, other.hcomp))

  def __hash__(self) -> int:
    return hash((self.underlying, self.cells))

  def __repr__(self) -> str:
    return (f'Fin2Cat({self.name!r}, {self.num_objects} objects, '
            f'{self.num_one_cells} 1-cells, {self.num_cells} 2-cells)')

  @property
  def num_objects(self) -> int:
    return self.underlying.num_objects

  @property
  def num_one_cells(self) -> int:
    return self.underlying.num_morphisms

  @property
  def num_cells(self) -> int:
    return self.cells.num_morphisms

  @property
  def objects(self) -> Tuple[str, ...]:
    return self.underlying.objects

  @property
  def one_cells(self) -> Tuple[str, ...]:
    return self.underlying.morphisms

  @property
  def factor_list(self) -> Tuple['Fin2Cat', ...]:
    return self.factors if self.factors else (self,)

  @functools.cached_property
  def leaves(self) -> Tuple['Fin2Cat', ...]:
    """Non-product factors, depth first."""
    if not self.factors:
      return (self,)
    return tuple(leaf for f in self.factors for leaf in f.leaves)

  def obj(self, name: str) -> int:
    return self.underlying.obj(name)

  def one_cell(self, name: str) -> int:
    return self.underlying.mor(name)

  def cell(self, name: str) -> int:
    return self.cells.mor(name)

  def identity(self, x: int) -> int:
    return int(self.underlying.identity[x])

  def identity_cell(self, f: int) -> int:
    return int(self.cells.identity[f])

  def cell_source(self, a: int) -> int:
    return int(self.cells.src[a])

  def cell_target(self, a: int) -> int:
    return int(self.cells.tgt[a])

  def compose(self, g: int, f: int) -> int:
    """The 1-cell g·f, or -1."""
    return int(self.underlying.compose[g, f])

  def hcompose(self, b: int, a: int) -> int:
    h = int(self.hcomp[b, a])
    if h < 0:
      raise errors.BoundaryMismatch(
          f'{self.name}: {self.cells.morphisms[b]} and '
          f'{self.cells.morphisms[a]} do not compose horizontally')
    return h

  def whisker_left(self, g: int, a: int) -> int:
    """g∗a for a 1-cell g and a 2-cell a."""
    return self.hcompose(self.identity_cell(g), a)

  def whisker_right(self, a: int, f: int) -> int:
    return self.hcompose(a, self.identity_cell(f))

  def two_cells(self, f: int, g: int) -> np.ndarray:
    return self.cells.hom(f, g)

  def composable_pairs(self) -> List[Tuple[int, int]]:
    """(g, f) with g·f defined, in table order."""
    return list(fincat.iter_composable_pairs(self.underlying))

  def composable_triples(self) -> Iterable[Tuple[int, int, int]]:
    u = self.underlying
    for g, f in self.composable_pairs():
      for h in np.flatnonzero(u.src == u.tgt[g]):
        yield int(h), g, f

  def nonidentity_cells(self) -> List[int]:
    return [
        a for a in range(self.num_cells)
        if not self.cells.is_identity(a)
    ]

  # Coordinates in the top-level factors.

  def _sizes(self, kind: str) -> Tuple[int, ...]:
    if kind == 'object':
      return tuple(f.num_objects for f in self.factor_list)
    if kind == 'one_cell':
      return tuple(f.num_one_cells for f in self.factor_list)
    return tuple(f.num_cells for f in self.factor_list)

  def pack(self, kind: str, coords: Sequence[int]) -> int:
    """Index of the object, 1-cell or 2-cell with the given coordinates."""
    sizes = self._sizes(kind)
    if len(coords) != len(sizes):
      raise errors.BoundaryMismatch(
          f'{self.name}: expected {len(sizes)} coordinates, got {coords}')
    return int(np.ravel_multi_index(tuple(int(c) for c in coords), sizes))

  def unpack(self, kind: str, index: int) -> Tuple[int, ...]:
    return tuple(
        int(c) for c in np.unravel_index(int(index), self._sizes(kind)))

  def describe(self) -> Dict[str, Any]:
    return {
        'name': self.name,
        'objects': list(self.objects),
        'one_cells': self.underlying.describe()['morphisms'],
        'two_cells': [{
            'name': name,
            'source': self.one_cells[self.cells.src[a]],
            'target': self.one_cells[self.cells.tgt[a]],
        } for a, name in enumerate(self.cells.morphisms)],
    }


def locally_discrete(c: fincat.FinCat, name: Optional[str] = None) -> Fin2Cat:
  """A category viewed as a 2-category with identity 2-cells only."""
  cells = fincat.discrete_cat(f'{c.name}|cells', c.morphisms)
  return Fin2Cat(name or c.name, c, cells, c.compose.copy())


def terminal_2cat() -> Fin2Cat:
  return locally_discrete(fincat.terminal_cat())


def locally_preordered(c: fincat.FinCat,
                       generators: Sequence[Tuple[str, str, str]],
                       name: Optional[str] = None) -> Fin2Cat:
  """The 2-category with at most one 2-cell between parallel 1-cells.

  The 2-cells are the closure of `generators` under whiskering, identities
  and vertical composition.

  Args:
    c: The underlying category.
    generators: (name, source 1-cell, target 1-cell).
    name: Name of the result.

  Returns:
    The locally preordered Fin2Cat.

  Raises:
    MalformedTables: if a generator relates non-parallel 1-cells.
  """
  n = c.num_morphisms
  leq = np.eye(n, dtype=bool)
  labels = {}
  for label, f_name, g_name in generators:
    f, g = c.mor(f_name), c.mor(g_name)
    if c.src[f] != c.src[g] or c.tgt[f] != c.tgt[g]:
      raise errors.MalformedTables(
          f'{c.name}: 2-cell {label} relates non-parallel 1-cells')
    leq[f, g] = True
    labels[(f, g)] = label
  changed = True
  while changed:
    before = leq.sum()
    for f, g in zip(*np.nonzero(leq)):
      for k in np.flatnonzero(c.src == c.tgt[f]):
        leq[c.compose[k, f], c.compose[k, g]] = True
      for k in np.flatnonzero(c.tgt == c.src[f]):
        leq[c.compose[f, k], c.compose[g, k]] = True
    for k in range(n):
      leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    changed = leq.sum() != before
  pairs = [(int(f), int(g)) for f, g in zip(*np.nonzero(leq))]
  index = {pair: i for i, pair in enumerate(pairs)}
  names = []
  for f, g in pairs:
    if f == g:
      names.append(fincat.identity_name(c.morphisms[f]))
    else:
      names.append(labels.get((f, g), f'{c.morphisms[f]}=>{c.morphisms[g]}'))
  m = len(pairs)
  compose = np.full((m, m), -1, dtype=np.int64)
  hcomp = np.full((m, m), -1, dtype=np.int64)
  for (i, (f, g)), (j, (f2, g2)) in itertools.product(
      enumerate(pairs), repeat=2):
    if g == f2:
      compose[j, i] = index[(f, g2)]
    if c.tgt[f2] == c.src[f]:
      hcomp[i, j] = index[(int(c.compose[f, f2]), int(c.compose[g, g2]))]
  identity = np.asarray([index[(f, f)] for f in range(n)], dtype=np.int64)
  cells = fincat.FinCat(f'{c.name}|cells', c.morphisms, tuple(names),
                        np.asarray([f for f, _ in pairs], dtype=np.int64),
                        np.asarray([g for _, g in pairs], dtype=np.int64),
                        identity, compose)
  return Fin2Cat(name or c.name, c, cells, hcomp)


def walking_two_cell() -> Fin2Cat:
  """Two objects, two parallel 1-cells f, g and one 2-cell t: f ⇒ g."""
  c = fincat.from_tables('W2', ['x', 'y'], [('id(x)', 'x', 'x'),
                                           ('id(y)', 'y', 'y'),
                                           ('f', 'x', 'y'), ('g', 'x', 'y')],
                         {
                             'x': 'id(x)',
                             'y': 'id(y)'
                         }, {
                             ('id(x)', 'id(x)'): 'id(x)',
                             ('id(y)', 'id(y)'): 'id(y)',
                             ('f', 'id(x)'): 'f',
                             ('g', 'id(x)'): 'g',
                             ('id(y)', 'f'): 'f',
                             ('id(y)', 'g'): 'g',
                         })
  return locally_preordered(c, [('t', 'f', 'g')], name='W2')


def _flat_names(parts: Sequence[Sequence[str]]) -> Tuple[str, ...]:
  if len(parts) == 1:
    return tuple(parts[0])
  return tuple('(' + ','.join(combo) + ')' for combo in itertools.product(*parts))


def _pair_hcomp(left: np.ndarray, right: np.ndarray) -> np.ndarray:
  n, m = left.shape[0], right.shape[0]
  h1 = left[:, None, :, None]
  h2 = right[None, :, None, :]
  table = np.where((h1 >= 0) & (h2 >= 0), h1 * m + h2, -1)
  return table.reshape(n * m, n * m)


def product_2cat(*factors: Fin2Cat, name: Optional[str] = None) -> Fin2Cat:
  """The product of any number of factors; no factors gives the terminal."""
  if not factors:
    return terminal_2cat()
  if len(factors) == 1:
    return factors[0]
  underlying, cells, hcomp = (factors[0].underlying, factors[0].cells,
                              factors[0].hcomp)
  for factor in factors[1:]:
    hcomp = _pair_hcomp(hcomp, factor.hcomp)
    underlying = fincat.product_cat(underlying, factor.underlying)
    cells = fincat.product_cat(cells, factor.cells)
  name = name or ' x '.join(f.name for f in factors)
  objects = _flat_names([f.objects for f in factors])
  one_cells = _flat_names([f.one_cells for f in factors])
  two_cells = _flat_names([f.cells.morphisms for f in factors])
  underlying = fincat.FinCat(name, objects, one_cells, underlying.src,
                             underlying.tgt, underlying.identity,
                             underlying.compose)
  cells = fincat.FinCat(f'{name}|cells', one_cells, two_cells, cells.src,
                        cells.tgt, cells.identity, cells.compose)
  return Fin2Cat(name, underlying, cells, hcomp, tuple(factors))


def opposite_2cat(t: Fin2Cat) -> Fin2Cat:
  """Reverses 1-cells only; 2-cells keep their direction."""
  if t.factors:
    return product_2cat(*[opposite_2cat(f) for f in t.factors])
  underlying = fincat.opposite_cat(t.underlying)
  return Fin2Cat(underlying.name, underlying, t.cells, t.hcomp.T.copy())


def hom(t: Fin2Cat, x: int, y: int) -> Tuple[fincat.FinCat, fincat.Fun]:
  """The hom-category t(x, y) with its inclusion into the 2-cell category."""
  one_cells = np.flatnonzero((t.underlying.src == x) & (t.underlying.tgt == y))
  return fincat.full_subcategory(
      t.cells, one_cells, name=f'{t.name}({t.objects[x]},{t.objects[y]})')


_SHAPE_SEPARATOR = re.compile(r'\s+(?:x|×)\s+|\s*×\s*')


def shape(expression: str, env: Mapping[str, Fin2Cat]) -> Fin2Cat:
  """Evaluates a product-of-opposites expression such as 'A^op x B'.

  Args:
    expression: Factor names joined by ' x ', each optionally suffixed by
      '^op'; '1' is the terminal 2-category.
    env: Named 2-categories.

  Returns:
    The factor itself for a single term, else the product.

  Raises:
    MalformedTables: if a name is not defined.
  """
  terms = [t.strip() for t in _SHAPE_SEPARATOR.split(expression.strip())]
  factors = []
  for term in terms:
    opposite = False
    while term.endswith('^op'):
      opposite = not opposite
      term = term[:-3].strip()
    if term == constants.TERMINAL_NAME:
      factor = terminal_2cat()
    elif term in env:
      factor = env[term]
    else:
      raise errors.MalformedTables(f'unknown 2-category {term!r}')
    factors.append(opposite_2cat(factor) if opposite else factor)
  if len(factors) == 1:
    return factors[0]
  return product_2cat(*factors)


def check_two_category(t: Fin2Cat) -> reports.Report:
  """Scans category laws, 2-cell boundaries, hcomp laws and interchange."""
  report = reports.Report(f'2-category {t.name}')
  report.extend(fincat.check_category(t.underlying), prefix='1-cells/')
  report.extend(fincat.check_category(t.cells), prefix='2-cells/')
  if not report.passed:
    return report
  u, c, h = t.underlying, t.cells, t.hcomp
  cell_names = c.morphisms

  def scan(axiom, violations):
    if not violations:
      report.record(axiom, 'all', True)
    for instance, counterexample in violations:
      report.record(axiom, instance, False, counterexample)

  parallel = ((u.src[c.src] == u.src[c.tgt]) & (u.tgt[c.src] == u.tgt[c.tgt]))
  scan('parallel', [(cell_names[a], {}) for a in np.flatnonzero(~parallel)])

  # hcomp[b, a] must be defined exactly when the 1-cell boundaries meet.
  meets = u.src[c.src][:, None] == u.tgt[c.src][None, :]
  typing = []
  for b, a in zip(*np.nonzero(meets != (h >= 0))):
    typing.append((f'{cell_names[b]}*{cell_names[a]}', {
        'reason': 'defined' if h[b, a] >= 0 else 'undefined'
    }))
  for b, a in zip(*np.nonzero(meets & (h >= 0))):
    ab = h[b, a]
    if (c.src[ab] != u.compose[c.src[b], c.src[a]] or
        c.tgt[ab] != u.compose[c.tgt[b], c.tgt[a]]):
      typing.append((f'{cell_names[b]}*{cell_names[a]}', {
          'reason': 'wrong boundary',
          'result': cell_names[ab]
      }))
  scan('horizontal_boundaries', typing)
  if typing:
    return report

  ident = c.identity
  units = []
  for g, f in t.composable_pairs():
    if h[ident[g], ident[f]] != ident[u.compose[g, f]]:
      units.append((f'id({u.morphisms[g]})*id({u.morphisms[f]})', {}))
  for a in range(c.num_morphisms):
    left = h[ident[u.identity[u.tgt[c.src[a]]]], a]
    right = h[a, ident[u.identity[u.src[c.src[a]]]]]
    if left != a or right != a:
      units.append((cell_names[a], {
          'left': cell_names[left],
          'right': cell_names[right]
      }))
  scan('horizontal_units', units)

  assoc = []
  for b in range(c.num_morphisms):
    lefts = np.flatnonzero(h[:, b] >= 0)
    rights = np.flatnonzero(h[b, :] >= 0)
    if not lefts.size or not rights.size:
      continue
    lhs = h[lefts[:, None], h[b, rights][None, :]]
    rhs = h[h[lefts, b][:, None], rights[None, :]]
    for i, j in zip(*np.nonzero(lhs != rhs)):
      assoc.append((f'({cell_names[lefts[i]]},{cell_names[b]},'
                    f'{cell_names[rights[j]]})', {
                        'lhs': cell_names[lhs[i, j]],
                        'rhs': cell_names[rhs[i, j]]
                    }))
  scan('horizontal_associativity', assoc)

  vertical = [(int(b2), int(b1))
              for b2, b1 in zip(*np.nonzero(c.compose >= 0))]
  interchange = []
  for (b2, b1), (a2, a1) in itertools.product(vertical, repeat=2):
    if h[b1, a1] < 0:
      continue
    lhs = h[c.compose[b2, b1], c.compose[a2, a1]]
    rhs = c.compose[h[b2, a2], h[b1, a1]]
    if lhs != rhs:
      interchange.append(
          (f'({cell_names[b2]},{cell_names[b1]},{cell_names[a2]},'
           f'{cell_names[a1]})', {
               'lhs': cell_names[lhs] if lhs >= 0 else None,
               'rhs': cell_names[rhs] if rhs >= 0 else None,
           }))
  scan('interchange', interchange)
  logging.vlog(1, 'check_two_category %s: %s', t.name, report.counts())
  return report


def leaf_coordinates(t: Fin2Cat, kind: str) -> np.ndarray:
  """Row i holds the coordinates of cell i in every leaf factor."""
  if kind == 'object':
    sizes = [leaf.num_objects for leaf in t.leaves]
  elif kind == 'one_cell':
    sizes = [leaf.num_one_cells for leaf in t.leaves]
  else:
    sizes = [leaf.num_cells for leaf in t.leaves]
  n = int(np.prod(sizes))
  return np.stack(np.unravel_index(np.arange(n), sizes), axis=1)


@dataclasses.dataclass(frozen=True, eq=False)
class TwoFun:
  """A strict 2-functor given by index maps on all three levels."""
  dom: Fin2Cat
  cod: Fin2Cat
  obj: np.ndarray
  mor: np.ndarray
  cell: np.ndarray


def coordinate_map(dom: Fin2Cat, cod: Fin2Cat,
                   coords: Sequence[Any]) -> TwoFun:
  """The strict 2-functor that rearranges or fixes leaf coordinates.

  Args:
    dom: Source shape.
    cod: Target shape.
    coords: One entry per leaf of `cod`: either the index of a leaf of `dom`
      to copy, or ('object', x) to hold that leaf at its object x.

  Returns:
    The TwoFun.

  Raises:
    BoundaryMismatch: if a copied leaf differs from its target leaf.
  """
  if len(coords) != len(cod.leaves):
    raise errors.BoundaryMismatch(
        f'{cod.name} has {len(cod.leaves)} leaves, got {len(coords)} entries')
  columns = {kind: [] for kind in ('object', 'one_cell', 'cell')}
  tables = {kind: leaf_coordinates(dom, kind) for kind in columns}
  for j, (leaf, entry) in enumerate(zip(cod.leaves, coords)):
    if isinstance(entry, tuple):
      x = int(entry[1])
      constant = {
          'object': x,
          'one_cell': leaf.identity(x),
          'cell': leaf.identity_cell(leaf.identity(x)),
      }
      for kind in columns:
        columns[kind].append(
            np.full(tables[kind].shape[0], constant[kind], dtype=np.int64))
    else:
      if not dom.leaves[entry] == leaf:
        raise errors.BoundaryMismatch(
            f'leaf {entry} of {dom.name} is not leaf {j} of {cod.name}')
      for kind in columns:
        columns[kind].append(tables[kind][:, entry])
  sizes = {
      'object': [leaf.num_objects for leaf in cod.leaves],
      'one_cell': [leaf.num_one_cells for leaf in cod.leaves],
      'cell': [leaf.num_cells for leaf in cod.leaves],
  }
  packed = {
      kind: np.ravel_multi_index(tuple(columns[kind]), sizes[kind]).astype(
          np.int64) for kind in columns
  }
  return TwoFun(dom, cod, packed['object'], packed['one_cell'],
                packed['cell'])
