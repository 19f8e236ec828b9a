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
"""Finite categories, functors and natural transformations as dense tables.

A `FinCat` stores its composition as a dense integer table:
`compose[g, f]` is the index of g∘f, or -1 when g and f are not composable.
Functors and natural transformations are index arrays into those tables, so
every equality decided here is a literal table comparison.
"""

import dataclasses
import functools
import itertools
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from absl import logging
import networkx as nx
import numpy as np

from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports

_SPECIAL_CHARS = frozenset('.[]() ,')


def identity_name(obj: str) -> str:
  return f'id({obj})'


def quote_name(name: str) -> str:
  """Brackets a name that would not survive splitting a word on dots."""
  if _needs_quoting(name):
    return f'[{name}]'
  return name


def _needs_quoting(name: str) -> bool:
  if name.startswith('id(') and name.endswith(')'):
    return False
  if name.startswith('[') and name.endswith(']') and _balanced(name):
    return False
  return any(char in _SPECIAL_CHARS for char in name)


def _balanced(text: str) -> bool:
  depth = 0
  for index, char in enumerate(text):
    if char in '[(':
      depth += 1
    elif char in '])':
      depth -= 1
      if depth == 0 and index != len(text) - 1:
        return False
  return depth == 0


def split_word(text: str) -> List[str]:
  """Splits a dotted word into atoms, respecting brackets and parentheses.

  Args:
    text: A word such as 'g.f' or '[x:g.f].h'.

  Returns:
    The atoms left to right, i.e. outermost first; brackets are removed.
  """
  atoms = []
  depth = 0
  current = []
  for char in text:
    if char in '[(':
      depth += 1
    elif char in '])':
      depth -= 1
    if char == constants.WORD_SEPARATOR and depth == 0:
      atoms.append(''.join(current))
      current = []
    else:
      current.append(char)
  atoms.append(''.join(current))
  return [_unquote(atom.strip()) for atom in atoms if atom.strip()]


def _unquote(atom: str) -> str:
  if atom.startswith('[') and atom.endswith(']') and _balanced(atom):
    return atom[1:-1]
  return atom


def join_word(names_outer_first: Sequence[str]) -> str:
  return constants.WORD_SEPARATOR.join(quote_name(n) for n in names_outer_first)


def _as_index_array(values: Iterable[int]) -> np.ndarray:
  return np.asarray(list(values), dtype=np.int64)


@dataclasses.dataclass(frozen=True, eq=False)
class FinCat:
  """A finite category.

  Attributes:
    name: Display name; ignored by equality.
    objects: Object identifiers in interned order.
    morphisms: Morphism identifiers in interned order.
    src: Source object index per morphism.
    tgt: Target object index per morphism.
    identity: Identity morphism index per object.
    compose: Dense table, compose[g, f] = g∘f or -1.
    aliases: Extra names resolving to morphisms, e.g. reducible generators.
  """
  name: str
  objects: Tuple[str, ...]
  morphisms: Tuple[str, ...]
  src: np.ndarray
  tgt: np.ndarray
  identity: np.ndarray
  compose: np.ndarray
  aliases: Mapping[str, int] = dataclasses.field(default_factory=dict)

  def __post_init__(self):
    num_obj = len(self.objects)
    num_mor = len(self.morphisms)
    if self.src.shape != (num_mor,) or self.tgt.shape != (num_mor,):
      raise errors.MalformedTables(f'{self.name}: bad source/target tables')
    if self.identity.shape != (num_obj,):
      raise errors.MalformedTables(f'{self.name}: bad identity table')
    if self.compose.shape != (num_mor, num_mor):
      raise errors.MalformedTables(f'{self.name}: bad composition table')
    for table, bound, label in ((self.src, num_obj, 'source'),
                                (self.tgt, num_obj, 'target'),
                                (self.identity, num_mor, 'identity')):
      if table.size and (table.min() < 0 or table.max() >= bound):
        raise errors.MalformedTables(
            f'{self.name}: {label} table references an undeclared identifier')
    if self.compose.size and (self.compose.min() < -1 or
                              self.compose.max() >= num_mor):
      raise errors.MalformedTables(
          f'{self.name}: composition table references an undeclared morphism')
    if len(set(self.objects)) != num_obj or len(set(
        self.morphisms)) != num_mor:
      raise errors.MalformedTables(f'{self.name}: duplicate identifiers')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, FinCat):
      return NotImplemented
    return (self.objects == other.objects and
            self.morphisms == other.morphisms and
            np.array_equal(self.src, other.src) and
            np.array_equal(self.tgt, other.tgt) and
            np.array_equal(self.identity, other.identity) and
            np.array_equal(self.compose, other.compose))

  def __hash__(self) -> int:
    return hash((self.objects, self.morphisms))

  def __repr__(self) -> str:
    return (f'FinCat({self.name!r}, {self.num_objects} objects, '
            f'{self.num_morphisms} morphisms)')

  @property
  def num_objects(self) -> int:
    return len(self.objects)

  @property
  def num_morphisms(self) -> int:
    return len(self.morphisms)

  @functools.cached_property
  def object_ids(self) -> Dict[str, int]:
    return {name: i for i, name in enumerate(self.objects)}

  @functools.cached_property
  def morphism_ids(self) -> Dict[str, int]:
    ids = dict(self.aliases)
    ids.update({name: i for i, name in enumerate(self.morphisms)})
    return ids

  @functools.cached_property
  def inverses(self) -> np.ndarray:
    """Index of the two-sided inverse of each morphism, or -1."""
    out = np.full(self.num_morphisms, -1, dtype=np.int64)
    for m in range(self.num_morphisms):
      left = self.compose[:, m] == self.identity[self.src[m]]
      right = self.compose[m, :] == self.identity[self.tgt[m]]
      both = np.flatnonzero(left & right)
      if both.size:
        out[m] = both[0]
    return out

  def obj(self, name: str) -> int:
    try:
      return self.object_ids[name]
    except KeyError:
      raise errors.MalformedTables(
          f'{self.name}: unknown object {name!r}') from None

  def mor(self, name: str) -> int:
    if name.startswith('id(') and name.endswith(')') and (
        name not in self.morphism_ids):
      return int(self.identity[self.obj(name[3:-1])])
    try:
      return self.morphism_ids[name]
    except KeyError:
      raise errors.MalformedTables(
          f'{self.name}: unknown morphism {name!r}') from None

  def is_identity(self, m: int) -> bool:
    return bool(self.identity[self.src[m]] == m)

  def is_iso(self, m: int) -> bool:
    return bool(self.inverses[m] >= 0)

  def hom(self, x: int, y: int) -> np.ndarray:
    return np.flatnonzero((self.src == x) & (self.tgt == y))

  def then(self, *path: int) -> int:
    """Composes morphisms given in application order."""
    result = path[0]
    for m in path[1:]:
      composite = self.compose[m, result]
      if composite < 0:
        raise errors.BoundaryMismatch(
            f'{self.name}: {self.morphisms[m]} does not compose after '
            f'{self.morphisms[result]}')
      result = int(composite)
    return result

  def evaluate_word(self, word: str) -> int:
    atoms = split_word(word)
    if not atoms:
      raise errors.BoundaryMismatch(f'{self.name}: empty word')
    return self.then(*[self.mor(atom) for atom in reversed(atoms)])

  def describe(self) -> Dict[str, Any]:
    return {
        'name': self.name,
        'objects': list(self.objects),
        'morphisms': [{
            'name': name,
            'source': self.objects[self.src[i]],
            'target': self.objects[self.tgt[i]],
        } for i, name in enumerate(self.morphisms)],
    }


def from_tables(name: str,
                objects: Sequence[str],
                arrows: Sequence[Tuple[str, str, str]],
                identity: Mapping[str, str],
                compose: Mapping[Tuple[str, str], str],
                aliases: Optional[Mapping[str, int]] = None) -> FinCat:
  """Builds a FinCat from named tables.

  Args:
    name: Category name.
    objects: Object names.
    arrows: (name, source, target) per morphism, identities included.
    identity: Object name to identity morphism name.
    compose: (g, f) to the name of g∘f for every composable pair.
    aliases: Optional extra names.

  Returns:
    The FinCat. Law violations are not detected here; see check_category.

  Raises:
    MalformedTables: if any table references an undeclared identifier.
  """
  obj_ids = {o: i for i, o in enumerate(objects)}
  mor_ids = {a[0]: i for i, a in enumerate(arrows)}

  def lookup(table, key, what):
    if key not in table:
      raise errors.MalformedTables(f'{name}: undeclared {what} {key!r}')
    return table[key]

  src = _as_index_array(lookup(obj_ids, a[1], 'object') for a in arrows)
  tgt = _as_index_array(lookup(obj_ids, a[2], 'object') for a in arrows)
  ident = _as_index_array(
      lookup(mor_ids, lookup(identity, o, 'identity for'), 'morphism')
      for o in objects)
  table = np.full((len(arrows), len(arrows)), -1, dtype=np.int64)
  for (g, f), h in compose.items():
    table[lookup(mor_ids, g, 'morphism'),
          lookup(mor_ids, f, 'morphism')] = lookup(mor_ids, h, 'morphism')
  return FinCat(name, tuple(objects), tuple(a[0] for a in arrows), src, tgt,
                ident, table, dict(aliases or {}))


def discrete_cat(name: str, objects: Sequence[str]) -> FinCat:
  n = len(objects)
  compose = np.full((n, n), -1, dtype=np.int64)
  compose[np.arange(n), np.arange(n)] = np.arange(n)
  return FinCat(name, tuple(objects),
                tuple(identity_name(o) for o in objects), np.arange(n),
                np.arange(n), np.arange(n), compose)


def terminal_cat() -> FinCat:
  return discrete_cat(constants.TERMINAL_NAME, [constants.TERMINAL_OBJECT])


def product_name(left: str, right: str) -> str:
  return f'({left},{right})'


def product_cat(c: FinCat, d: FinCat) -> FinCat:
  """Product category; (i, j) is stored at index i * |D| + j."""
  n_d, m_d = d.num_objects, d.num_morphisms
  objects = tuple(product_name(x, y) for x in c.objects for y in d.objects)
  morphisms = tuple(product_name(f, g) for f in c.morphisms for g in d.morphisms)
  src = (c.src[:, None] * n_d + d.src[None, :]).reshape(-1)
  tgt = (c.tgt[:, None] * n_d + d.tgt[None, :]).reshape(-1)
  identity = (c.identity[:, None] * m_d + d.identity[None, :]).reshape(-1)
  left = c.compose[:, None, :, None]
  right = d.compose[None, :, None, :]
  compose = np.where((left >= 0) & (right >= 0), left * m_d + right, -1)
  compose = compose.reshape(c.num_morphisms * m_d, c.num_morphisms * m_d)
  return FinCat(f'{c.name}*{d.name}', objects, morphisms, src, tgt, identity,
                compose)


def opposite_cat(c: FinCat) -> FinCat:
  name = c.name[:-3] if c.name.endswith('^op') else f'{c.name}^op'
  return FinCat(name, c.objects, c.morphisms, c.tgt.copy(), c.src.copy(),
                c.identity.copy(), c.compose.T.copy(), dict(c.aliases))


def full_subcategory(c: FinCat, objects: Sequence[int],
                     name: Optional[str] = None) -> Tuple[FinCat, 'Fun']:
  """Full subcategory on the given objects, with its inclusion functor."""
  objects = sorted(int(o) for o in objects)
  keep = np.isin(c.src, objects) & np.isin(c.tgt, objects)
  mor_index = np.flatnonzero(keep)
  obj_pos = -np.ones(c.num_objects, dtype=np.int64)
  obj_pos[objects] = np.arange(len(objects))
  mor_pos = -np.ones(c.num_morphisms, dtype=np.int64)
  mor_pos[mor_index] = np.arange(len(mor_index))
  sub_compose = c.compose[np.ix_(mor_index, mor_index)]
  sub_compose = np.where(sub_compose >= 0, mor_pos[sub_compose], -1)
  sub = FinCat(name or f'{c.name}|sub',
               tuple(c.objects[o] for o in objects),
               tuple(c.morphisms[m] for m in mor_index),
               obj_pos[c.src[mor_index]], obj_pos[c.tgt[mor_index]],
               mor_pos[c.identity[objects]], sub_compose)
  return sub, Fun(sub, c, np.asarray(objects, dtype=np.int64), mor_index)


def check_category(candidate: Any) -> reports.Report:
  """Exhaustively scans closure, unit and associativity laws.

  Args:
    candidate: A FinCat, or a mapping with keys 'name', 'objects', 'arrows',
      'identity' and 'compose' as accepted by `from_tables`.

  Returns:
    A Report with one entry per law that holds and one per violation.

  Raises:
    MalformedTables: if identifiers dangle.
  """
  if isinstance(candidate, FinCat):
    c = candidate
  else:
    c = from_tables(candidate.get('name', 'C'), candidate['objects'],
                    candidate['arrows'], candidate['identity'],
                    candidate['compose'])
  report = reports.Report(f'category {c.name}')
  names = c.morphisms

  def scan(axiom, violations):
    if not violations:
      report.record(axiom, 'all', True)
    for instance, counterexample in violations:
      report.record(axiom, instance, False, counterexample)

  composable = c.tgt[None, :] == c.src[:, None]  # [g, f]
  closure = []
  for g, f in zip(*np.nonzero(composable & (c.compose < 0))):
    closure.append((f'{names[g]}∘{names[f]}', {'reason': 'undefined'}))
  for g, f in zip(*np.nonzero(~composable & (c.compose >= 0))):
    closure.append((f'{names[g]}∘{names[f]}',
                    {'reason': 'defined on a non-composable pair'}))
  defined = composable & (c.compose >= 0)
  for g, f in zip(*np.nonzero(defined)):
    h = c.compose[g, f]
    if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
      closure.append((f'{names[g]}∘{names[f]}', {
          'reason': 'wrong boundary',
          'result': names[h],
          'source': c.objects[c.src[h]],
          'target': c.objects[c.tgt[h]],
      }))
  scan('closure', closure)

  units = []
  for x, i in enumerate(c.identity):
    if c.src[i] != x or c.tgt[i] != x:
      units.append((f'id({c.objects[x]})', {'reason': 'not an endomorphism'}))
  for f in range(c.num_morphisms):
    left = c.compose[c.identity[c.tgt[f]], f]
    right = c.compose[f, c.identity[c.src[f]]]
    if left != f or right != f:
      units.append((names[f], {
          'left': names[left] if left >= 0 else None,
          'right': names[right] if right >= 0 else None,
      }))
  scan('unit', units)

  assoc = []
  for g in range(c.num_morphisms):
    fs = np.flatnonzero(c.tgt == c.src[g])
    hs = np.flatnonzero(c.src == c.tgt[g])
    if not fs.size or not hs.size:
      continue
    gf = c.compose[g, fs]
    hg = c.compose[hs, g]
    if (gf < 0).any() or (hg < 0).any():
      continue
    lhs = c.compose[hs[:, None], gf[None, :]]
    rhs = c.compose[hg[:, None], fs[None, :]]
    for hi, fi in zip(*np.nonzero(lhs != rhs)):
      h, f = hs[hi], fs[fi]
      assoc.append((f'({names[h]},{names[g]},{names[f]})', {
          'lhs': names[lhs[hi, fi]] if lhs[hi, fi] >= 0 else None,
          'rhs': names[rhs[hi, fi]] if rhs[hi, fi] >= 0 else None,
      }))
  scan('associativity', assoc)
  logging.vlog(1, 'check_category %s: %s', c.name, report.counts())
  return report


@dataclasses.dataclass(frozen=True, eq=False)
class Fun:
  """A functor given by object and morphism index maps."""
  dom: FinCat
  cod: FinCat
  obj: np.ndarray
  mor: np.ndarray

  def __post_init__(self):
    if self.obj.shape != (self.dom.num_objects,) or self.mor.shape != (
        self.dom.num_morphisms,):
      raise errors.MalformedTables('functor tables do not match its domain')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, Fun):
      return NotImplemented
    return (np.array_equal(self.obj, other.obj) and
            np.array_equal(self.mor, other.mor) and self.dom == other.dom and
            self.cod == other.cod)

  def __hash__(self) -> int:
    return hash((self.dom, self.cod, self.obj.tobytes(), self.mor.tobytes()))

  def __repr__(self) -> str:
    return f'Fun({self.dom.name} -> {self.cod.name})'

  def describe(self) -> Dict[str, Any]:
    return {
        'dom': self.dom.name,
        'cod': self.cod.name,
        'objects': {
            self.dom.objects[i]: self.cod.objects[o]
            for i, o in enumerate(self.obj)
        },
        'morphisms': {
            self.dom.morphisms[i]: self.cod.morphisms[m]
            for i, m in enumerate(self.mor)
        },
    }


def identity_fun(c: FinCat) -> Fun:
  return Fun(c, c, np.arange(c.num_objects), np.arange(c.num_morphisms))


def compose_fun(g: Fun, f: Fun) -> Fun:
  """Returns g∘f."""
  if not f.cod == g.dom:
    raise errors.BoundaryMismatch(
        f'cannot compose {g!r} after {f!r}: {f.cod.name} != {g.dom.name}')
  return Fun(f.dom, g.cod, g.obj[f.obj], g.mor[f.mor])


def compose_funs(*funs: Fun) -> Fun:
  """Composes functors given in application order."""
  result = funs[0]
  for fun in funs[1:]:
    result = compose_fun(fun, result)
  return result


def constant_fun(dom: FinCat, cod: FinCat, obj: int) -> Fun:
  return Fun(dom, cod, np.full(dom.num_objects, obj, dtype=np.int64),
             np.full(dom.num_morphisms, cod.identity[obj], dtype=np.int64))


def product_fun(f: Fun, g: Fun) -> Fun:
  dom = product_cat(f.dom, g.dom)
  cod = product_cat(f.cod, g.cod)
  obj = (f.obj[:, None] * g.cod.num_objects + g.obj[None, :]).reshape(-1)
  mor = (f.mor[:, None] * g.cod.num_morphisms + g.mor[None, :]).reshape(-1)
  return Fun(dom, cod, obj, mor)


def check_functor(f: Fun) -> reports.Report:
  report = reports.Report(f'functor {f.dom.name} -> {f.cod.name}')
  dom, cod = f.dom, f.cod
  bad = np.flatnonzero((cod.src[f.mor] != f.obj[dom.src]) |
                       (cod.tgt[f.mor] != f.obj[dom.tgt]))
  if not bad.size:
    report.record('boundaries', 'all', True)
  for m in bad:
    report.record('boundaries', dom.morphisms[m], False,
                  {'image': cod.morphisms[f.mor[m]]})
  bad = np.flatnonzero(f.mor[dom.identity] != cod.identity[f.obj])
  if not bad.size:
    report.record('identities', 'all', True)
  for x in bad:
    report.record('identities', dom.objects[x], False,
                  {'image': cod.morphisms[f.mor[dom.identity[x]]]})
  g_idx, f_idx = np.nonzero(dom.compose >= 0)
  images = cod.compose[f.mor[g_idx], f.mor[f_idx]]
  expected = f.mor[dom.compose[g_idx, f_idx]]
  bad = np.flatnonzero(images != expected)
  if not bad.size:
    report.record('composites', 'all', True)
  for k in bad:
    g, h = g_idx[k], f_idx[k]
    report.record(
        'composites', f'{dom.morphisms[g]}∘{dom.morphisms[h]}', False, {
            'composite_of_images':
                cod.morphisms[images[k]] if images[k] >= 0 else None,
            'image_of_composite': cod.morphisms[expected[k]],
        })
  return report


def extend_functor(dom: FinCat, cod: FinCat, obj: Sequence[int],
                   partial: Mapping[int, int]) -> Fun:
  """Extends a partial morphism map to a functor by closing under composites.

  Args:
    dom: Domain category.
    cod: Codomain category.
    obj: Object map.
    partial: Images of some morphisms of dom, typically generators.

  Returns:
    The functor; it is not checked here. Conflicting decompositions show up
    as failures of check_functor.

  Raises:
    MalformedTables: if some morphism is not a composite of given ones.
  """
  obj = np.asarray(obj, dtype=np.int64)
  image = np.full(dom.num_morphisms, -1, dtype=np.int64)
  image[dom.identity] = cod.identity[obj]
  for m, n in partial.items():
    image[m] = n
  while True:
    known = np.flatnonzero(image >= 0)
    sub = dom.compose[np.ix_(known, known)]
    gi, fi = np.nonzero(sub >= 0)
    targets = sub[gi, fi]
    fresh = image[targets] < 0
    if not fresh.any():
      break
    for g, f, t in zip(known[gi[fresh]], known[fi[fresh]], targets[fresh]):
      if image[t] < 0:
        image[t] = cod.compose[image[g], image[f]]
        if image[t] < 0:
          raise errors.BoundaryMismatch(
              f'images of {dom.morphisms[g]} and {dom.morphisms[f]} do not '
              'compose')
  missing = np.flatnonzero(image < 0)
  if missing.size:
    raise errors.MalformedTables(
        f'functor {dom.name} -> {cod.name} is underdetermined on '
        f'{[dom.morphisms[m] for m in missing]}')
  return Fun(dom, cod, obj, image)


@dataclasses.dataclass(frozen=True, eq=False)
class Nat:
  """A natural transformation source ⇒ target with components `comps`."""
  source: Fun
  target: Fun
  comps: np.ndarray

  def __post_init__(self):
    if not (self.source.dom == self.target.dom and
            self.source.cod == self.target.cod):
      raise errors.BoundaryMismatch(
          f'{self.source!r} and {self.target!r} are not parallel')
    if self.comps.shape != (self.source.dom.num_objects,):
      raise errors.MalformedTables('component table does not match domain')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, Nat):
      return NotImplemented
    return (np.array_equal(self.comps, other.comps) and
            self.source == other.source and self.target == other.target)

  def __hash__(self) -> int:
    return hash((self.source, self.target, self.comps.tobytes()))

  def __repr__(self) -> str:
    return f'Nat({self.source!r} => {self.target!r})'

  @property
  def dom(self) -> FinCat:
    return self.source.dom

  @property
  def cod(self) -> FinCat:
    return self.source.cod

  def describe(self) -> Dict[str, Any]:
    return {
        'dom': self.dom.name,
        'cod': self.cod.name,
        'components': {
            self.dom.objects[i]: self.cod.morphisms[m]
            for i, m in enumerate(self.comps)
        },
    }


def identity_nat(f: Fun) -> Nat:
  return Nat(f, f, f.cod.identity[f.obj])


def is_identity_nat(alpha: Nat) -> bool:
  return alpha.source == alpha.target and np.array_equal(
      alpha.comps, alpha.cod.identity[alpha.source.obj])


def vcompose_nat(beta: Nat, alpha: Nat) -> Nat:
  """Returns β∘α for α: F ⇒ G and β: G ⇒ H."""
  if not alpha.target == beta.source:
    raise errors.BoundaryMismatch(
        f'cannot compose {beta!r} after {alpha!r} vertically')
  return Nat(alpha.source, beta.target,
             alpha.cod.compose[beta.comps, alpha.comps])


def vchain(*cells: Nat) -> Nat:
  """Vertical composite of 2-cells given in application order."""
  result = cells[0]
  for cell in cells[1:]:
    result = vcompose_nat(cell, result)
  return result


def hwhisker_left(f: Fun, alpha: Nat) -> Nat:
  """Returns F∗α: F∘G ⇒ F∘H for α: G ⇒ H."""
  if not alpha.cod == f.dom:
    raise errors.BoundaryMismatch(f'cannot whisker {alpha!r} by {f!r}')
  return Nat(
      compose_fun(f, alpha.source), compose_fun(f, alpha.target),
      f.mor[alpha.comps])


def hwhisker_right(alpha: Nat, f: Fun) -> Nat:
  """Returns α∗F: G∘F ⇒ H∘F for α: G ⇒ H."""
  if not f.cod == alpha.dom:
    raise errors.BoundaryMismatch(f'cannot whisker {alpha!r} by {f!r}')
  return Nat(
      compose_fun(alpha.source, f), compose_fun(alpha.target, f),
      alpha.comps[f.obj])


def hcompose_nat(beta: Nat, alpha: Nat) -> Nat:
  """Horizontal composite β∗α: H∘F ⇒ K∘G for α: F ⇒ G, β: H ⇒ K."""
  return vcompose_nat(
      hwhisker_left(beta.target, alpha), hwhisker_right(beta, alpha.source))


def inverse_nat(alpha: Nat) -> Nat:
  inverses = alpha.cod.inverses[alpha.comps]
  if (inverses < 0).any():
    bad = alpha.dom.objects[int(np.flatnonzero(inverses < 0)[0])]
    raise errors.NotInvertible(f'{alpha!r} is not invertible at {bad}')
  return Nat(alpha.target, alpha.source, inverses)


def is_invertible_nat(alpha: Nat) -> bool:
  return bool((alpha.cod.inverses[alpha.comps] >= 0).all())


def product_nat(alpha: Nat, beta: Nat) -> Nat:
  m_d = beta.cod.num_morphisms
  comps = (alpha.comps[:, None] * m_d + beta.comps[None, :]).reshape(-1)
  return Nat(
      product_fun(alpha.source, beta.source),
      product_fun(alpha.target, beta.target), comps)


def check_nat(alpha: Nat) -> reports.Report:
  """Checks component typing and every naturality square."""
  report = reports.Report(f'natural transformation {alpha!r}')
  dom, cod = alpha.dom, alpha.cod
  bad = np.flatnonzero((cod.src[alpha.comps] != alpha.source.obj) |
                       (cod.tgt[alpha.comps] != alpha.target.obj))
  if not bad.size:
    report.record('components', 'all', True)
  for x in bad:
    report.record('components', dom.objects[x], False,
                  {'component': cod.morphisms[alpha.comps[x]]})
  if bad.size:
    return report
  lhs = cod.compose[alpha.target.mor, alpha.comps[dom.src]]
  rhs = cod.compose[alpha.comps[dom.tgt], alpha.source.mor]
  bad = np.flatnonzero(lhs != rhs)
  if not bad.size:
    report.record('naturality', 'all', True)
  for m in bad:
    report.record('naturality', dom.morphisms[m], False, {
        'lhs': cod.morphisms[lhs[m]] if lhs[m] >= 0 else None,
        'rhs': cod.morphisms[rhs[m]] if rhs[m] >= 0 else None,
    })
  return report


def connected_components(c: FinCat) -> List[List[int]]:
  """Connected components of the underlying graph, smallest index first."""
  graph = nx.Graph()
  graph.add_nodes_from(range(c.num_objects))
  graph.add_edges_from(zip(c.src.tolist(), c.tgt.tolist()))
  components = [sorted(component) for component in nx.connected_components(graph)]
  return sorted(components, key=lambda component: component[0])


def pi0(c: FinCat) -> int:
  return len(connected_components(c))


def pi0_map(f: Fun) -> Dict[int, int]:
  """The map induced by a functor on connected components."""
  dom_components = connected_components(f.dom)
  cod_label = {}
  for label, component in enumerate(connected_components(f.cod)):
    for x in component:
      cod_label[x] = label
  return {
      label: cod_label[int(f.obj[component[0]])]
      for label, component in enumerate(dom_components)
  }


def iter_composable_pairs(c: FinCat) -> Iterable[Tuple[int, int]]:
  """Yields (g, f) with g∘f defined, in table order."""
  for g, f in itertools.product(range(c.num_morphisms), repeat=2):
    if c.tgt[f] == c.src[g]:
      yield g, f


def poset_cat(name: str, objects: Sequence[str],
              leq: Iterable[Tuple[str, str]]) -> FinCat:
  """The thin category of the preorder generated by `leq`."""
  index = {o: i for i, o in enumerate(objects)}
  n = len(objects)
  reach = np.eye(n, dtype=bool)
  for a, b in leq:
    reach[index[a], index[b]] = True
  for k in range(n):
    reach |= reach[:, k:k + 1] & reach[k:k + 1, :]
  pairs = [(i, j) for i in range(n) for j in range(n) if reach[i, j]]
  arrows = []
  for i, j in pairs:
    arrow = identity_name(objects[i]) if i == j else (
        f'{objects[i]}<{objects[j]}')
    arrows.append((arrow, objects[i], objects[j]))
  by_pair = {pair: arrows[k][0] for k, pair in enumerate(pairs)}
  compose = {}
  for (i, j), (j2, k) in itertools.product(pairs, repeat=2):
    if j == j2:
      compose[(by_pair[(j, k)], by_pair[(i, j)])] = by_pair[(i, k)]
  identity = {o: by_pair[(i, i)] for i, o in enumerate(objects)}
  return from_tables(name, objects, arrows, identity, compose)


def chain_cat(n: int) -> FinCat:
  """The ordinal 0 < 1 < ... < n-1."""
  names = [str(i) for i in range(n)]
  return poset_cat(f'chain{n}', names, zip(names, names[1:]))


def walking_arrow() -> FinCat:
  return chain_cat(2)


def cyclic_group_cat(order: int, generator: str = 's') -> FinCat:
  """One object with the cyclic group of the given order as endomorphisms."""
  obj = constants.TERMINAL_OBJECT
  names = [identity_name(obj)] + [
      join_word([generator] * k) for k in range(1, order)
  ]
  arrows = [(name, obj, obj) for name in names]
  compose = {(names[a], names[b]): names[(a + b) % order]
             for a in range(order) for b in range(order)}
  return from_tables(f'C{order}', [obj], arrows, {obj: names[0]}, compose)
