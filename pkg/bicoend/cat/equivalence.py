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
"""Adjoint equivalences between finite categories."""

import dataclasses
import itertools
from typing import Dict, List, Optional, Tuple

from absl import logging
import numpy as np

from bicoend.cat import fincat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports


@dataclasses.dataclass(frozen=True)
class EquivalenceWitness:
  """An equivalence forward: C ⇄ D: backward.

  Attributes:
    forward: F: C -> D.
    backward: G: D -> C.
    unit: η: id_C ⇒ G∘F.
    counit: ε: F∘G ⇒ id_D.
    adjoint: Whether the triangle identities are claimed.
  """
  forward: fincat.Fun
  backward: fincat.Fun
  unit: fincat.Nat
  counit: fincat.Nat
  adjoint: bool = True

  @property
  def left(self) -> fincat.FinCat:
    return self.forward.dom

  @property
  def right(self) -> fincat.FinCat:
    return self.forward.cod


def identity_equivalence(c: fincat.FinCat) -> EquivalenceWitness:
  ident = fincat.identity_fun(c)
  return EquivalenceWitness(ident, ident, fincat.identity_nat(ident),
                            fincat.identity_nat(ident))


def invert_equivalence(w: EquivalenceWitness) -> EquivalenceWitness:
  return EquivalenceWitness(w.backward, w.forward, fincat.inverse_nat(w.counit),
                            fincat.inverse_nat(w.unit), w.adjoint)


def compose_equivalences(first: EquivalenceWitness,
                         second: EquivalenceWitness) -> EquivalenceWitness:
  """Composite C ⇄ E of C ⇄ D and D ⇄ E."""
  f1, g1, f2, g2 = first.forward, first.backward, second.forward, second.backward
  unit = fincat.vcompose_nat(
      fincat.hwhisker_right(fincat.hwhisker_left(g1, second.unit), f1),
      first.unit)
  counit = fincat.vcompose_nat(
      second.counit,
      fincat.hwhisker_right(fincat.hwhisker_left(f2, first.counit), g2))
  return EquivalenceWitness(
      fincat.compose_fun(f2, f1), fincat.compose_fun(g1, g2), unit, counit,
      first.adjoint and second.adjoint)


def verify_adjoint_equivalence(w: EquivalenceWitness) -> reports.Report:
  """Checks boundaries, invertibility and both triangle identities."""
  report = reports.Report(
      f'equivalence {w.forward.dom.name} <-> {w.forward.cod.name}')
  f, g = w.forward, w.backward
  c, d = f.dom, f.cod
  boundaries = (
      g.dom == d and g.cod == c and
      w.unit.source == fincat.identity_fun(c) and
      w.unit.target == fincat.compose_fun(g, f) and
      w.counit.source == fincat.compose_fun(f, g) and
      w.counit.target == fincat.identity_fun(d))
  report.record('boundaries', 'unit/counit', boundaries)
  if not boundaries:
    return report
  report.record('naturality', 'unit', fincat.check_nat(w.unit).passed)
  report.record('naturality', 'counit', fincat.check_nat(w.counit).passed)
  report.record('invertible', 'unit', fincat.is_invertible_nat(w.unit))
  report.record('invertible', 'counit', fincat.is_invertible_nat(w.counit))
  if w.adjoint:
    # (ε∗F)∘(F∗η) = 1_F and (G∗ε)∘(η∗G) = 1_G.
    report.expect_equal(
        'triangle', 'forward',
        fincat.vcompose_nat(
            fincat.hwhisker_right(w.counit, f),
            fincat.hwhisker_left(f, w.unit)), fincat.identity_nat(f))
    report.expect_equal(
        'triangle', 'backward',
        fincat.vcompose_nat(
            fincat.hwhisker_left(g, w.counit),
            fincat.hwhisker_right(w.unit, g)), fincat.identity_nat(g))
  return report


@dataclasses.dataclass(frozen=True)
class Skeleton:
  """A skeleton S of C with inclusion i, retraction r and ε: i∘r ⇒ id."""
  category: fincat.FinCat
  inclusion: fincat.Fun
  retraction: fincat.Fun
  counit: fincat.Nat


def iso_classes(c: fincat.FinCat) -> List[List[int]]:
  isos = np.flatnonzero(c.inverses >= 0)
  label = list(range(c.num_objects))

  def find(x):
    while label[x] != x:
      label[x] = label[label[x]]
      x = label[x]
    return x

  for m in isos:
    a, b = find(int(c.src[m])), find(int(c.tgt[m]))
    if a != b:
      label[max(a, b)] = min(a, b)
  classes: Dict[int, List[int]] = {}
  for x in range(c.num_objects):
    classes.setdefault(find(x), []).append(x)
  return [classes[k] for k in sorted(classes)]


def skeleton(c: fincat.FinCat) -> Skeleton:
  """Full subcategory on the least object of each isomorphism class."""
  classes = iso_classes(c)
  reps = [members[0] for members in classes]
  sub, inclusion = fincat.full_subcategory(c, reps, name=f'{c.name}|skeleton')
  rep_of = np.empty(c.num_objects, dtype=np.int64)
  position = np.empty(c.num_objects, dtype=np.int64)
  for k, members in enumerate(classes):
    rep_of[members] = members[0]
    position[members] = k
  # to_rep[x]: an isomorphism x -> rep(x), the identity on representatives.
  to_rep = np.empty(c.num_objects, dtype=np.int64)
  for x in range(c.num_objects):
    if rep_of[x] == x:
      to_rep[x] = c.identity[x]
    else:
      candidates = [
          m for m in c.hom(x, int(rep_of[x])) if c.inverses[m] >= 0
      ]
      to_rep[x] = candidates[0]
  sub_index = {int(m): k for k, m in enumerate(inclusion.mor)}
  mor = np.empty(c.num_morphisms, dtype=np.int64)
  for m in range(c.num_morphisms):
    x, y = int(c.src[m]), int(c.tgt[m])
    moved = c.then(int(c.inverses[to_rep[x]]), m, int(to_rep[y]))
    mor[m] = sub_index[moved]
  retraction = fincat.Fun(c, sub, position, mor)
  counit = fincat.Nat(
      fincat.compose_fun(inclusion, retraction), fincat.identity_fun(c),
      c.inverses[to_rep])
  return Skeleton(sub, inclusion, retraction, counit)


def _hom_signature(c: fincat.FinCat, x: int) -> Tuple[int, ...]:
  return tuple(sorted(
      [len(c.hom(x, y)) for y in range(c.num_objects)] +
      [-len(c.hom(y, x)) for y in range(c.num_objects)]))


def _find_isomorphism(s1: fincat.FinCat, s2: fincat.FinCat,
                      budget: int) -> Optional[fincat.Fun]:
  """Backtracking search for an isomorphism of skeletal categories."""
  steps = 0
  if sorted(_hom_signature(s1, x) for x in range(s1.num_objects)) != sorted(
      _hom_signature(s2, x) for x in range(s2.num_objects)):
    return None
  order = sorted(range(s1.num_morphisms), key=lambda m: (s1.is_identity(m), m))

  def search_objects(assignment):
    nonlocal steps
    x = len(assignment)
    if x == s1.num_objects:
      return search_morphisms(assignment)
    for y in range(s2.num_objects):
      steps += 1
      if steps > budget:
        raise errors.BudgetExhausted('equivalence', steps)
      if y in assignment or _hom_signature(s1, x) != _hom_signature(s2, y):
        continue
      if any(
          len(s1.hom(x, x2)) != len(s2.hom(y, assignment[x2])) or
          len(s1.hom(x2, x)) != len(s2.hom(assignment[x2], y))
          for x2 in range(x)) or len(s1.hom(x, x)) != len(s2.hom(y, y)):
        continue
      found = search_objects(assignment + [y])
      if found is not None:
        return found
    return None

  def search_morphisms(obj):
    nonlocal steps
    obj = np.asarray(obj, dtype=np.int64)
    image = np.full(s1.num_morphisms, -1, dtype=np.int64)
    image[s1.identity] = s2.identity[obj]
    free = [m for m in order if not s1.is_identity(m)]

    def consistent(m):
      for n in np.flatnonzero(image >= 0):
        for g, f in ((m, n), (n, m)):
          h = s1.compose[g, f]
          if h >= 0 and image[h] >= 0 and s2.compose[image[g],
                                                      image[f]] != image[h]:
            return False
      return True

    def assign(k):
      nonlocal steps
      if k == len(free):
        return fincat.Fun(s1, s2, obj, image.copy())
      m = free[k]
      used = set(image[image >= 0].tolist())
      for n in s2.hom(int(obj[s1.src[m]]), int(obj[s1.tgt[m]])):
        steps += 1
        if steps > budget:
          raise errors.BudgetExhausted('equivalence', steps)
        if int(n) in used:
          continue
        image[m] = n
        if consistent(m):
          found = assign(k + 1)
          if found is not None:
            return found
        image[m] = -1
      return None

    return assign(0)

  return search_objects([])


def _invert_isomorphism(iso: fincat.Fun) -> fincat.Fun:
  obj = np.empty_like(iso.obj)
  obj[iso.obj] = np.arange(len(iso.obj))
  mor = np.empty_like(iso.mor)
  mor[iso.mor] = np.arange(len(iso.mor))
  return fincat.Fun(iso.cod, iso.dom, obj, mor)


def find_equivalence(
    c: fincat.FinCat,
    d: fincat.FinCat,
    budget: int = constants.DEFAULT_EQUIVALENCE_BUDGET
) -> Optional[EquivalenceWitness]:
  """Searches for an adjoint equivalence C ⇄ D through skeleta.

  Args:
    c: Left category.
    d: Right category.
    budget: Cap on search steps.

  Returns:
    A verified witness, or None when the categories are provably not
    equivalent.

  Raises:
    BudgetExhausted: if the search is inconclusive within budget.
  """
  if c == d:
    return identity_equivalence(c)
  sk1, sk2 = skeleton(c), skeleton(d)
  if sk1.category.num_objects != sk2.category.num_objects:
    logging.vlog(1, 'find_equivalence: iso-class counts differ (%d vs %d)',
                 sk1.category.num_objects, sk2.category.num_objects)
    return None
  if sk1.category.num_morphisms != sk2.category.num_morphisms:
    return None
  iso = _find_isomorphism(sk1.category, sk2.category, budget)
  if iso is None:
    return None
  inverse = _invert_isomorphism(iso)
  forward = fincat.compose_funs(sk1.retraction, iso, sk2.inclusion)
  backward = fincat.compose_funs(sk2.retraction, inverse, sk1.inclusion)
  witness = EquivalenceWitness(forward, backward,
                               fincat.inverse_nat(sk1.counit), sk2.counit)
  verify_adjoint_equivalence(witness).raise_if_failed(
      'equivalence found by search')
  return witness


def all_functors(c: fincat.FinCat, d: fincat.FinCat,
                 limit: int = 10000) -> List[fincat.Fun]:
  """Enumerates functors C -> D by brute force; used as a test oracle."""
  out = []
  for obj in itertools.product(range(d.num_objects), repeat=c.num_objects):
    choices = [
        d.hom(obj[c.src[m]], obj[c.tgt[m]]).tolist()
        for m in range(c.num_morphisms)
    ]
    for mor in itertools.product(*choices):
      f = fincat.Fun(c, d, np.asarray(obj, dtype=np.int64),
                     np.asarray(mor, dtype=np.int64))
      if fincat.check_functor(f).passed:
        out.append(f)
        if len(out) >= limit:
          return out
  return out
