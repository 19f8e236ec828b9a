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
"""Independent brute-force oracles used by the tests.

Nothing here shares code with the constructions it checks: quotients are
computed by union-find over explicitly enumerated elements or words.
"""

import itertools
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from bicoend.utils import random_instances


class UnionFind:
  """Union by rank with path compression.

  Attributes:
    num_clusters: The number of classes.
  """

  def __init__(self, elements: Iterable[Hashable]):
    elements = list(elements)
    self._leader = {s: s for s in elements}
    self._rank = {s: 0 for s in elements}
    self.num_clusters = len(elements)

  def find(self, s):
    path = [s]
    parent = self._leader[s]
    while parent != self._leader[parent]:
      path.append(parent)
      parent = self._leader[parent]
    for a in path:
      self._leader[a] = parent
    return parent

  def union(self, a, b) -> None:
    s1, s2 = self.find(a), self.find(b)
    if s1 == s2:
      return
    r1, r2 = self._rank[s1], self._rank[s2]
    if r2 > r1:
      s1, s2 = s2, s1
    if r1 == r2:
      self._rank[s1] += 1
    self._leader[s2] = s1
    self.num_clusters -= 1

  def classes(self) -> List[List[Hashable]]:
    groups: Dict[Hashable, List[Hashable]] = {}
    for s in self._leader:
      groups.setdefault(self.find(s), []).append(s)
    return list(groups.values())


def typed_words(objects: Sequence[str], arrows: Sequence[Tuple[str, str, str]],
                max_length: int) -> List[Tuple[str, Tuple[str, ...]]]:
  """All composable generator paths of length <= max_length."""
  words = [(o, ()) for o in objects]
  frontier = [(o, (), o) for o in objects]
  for _ in range(max_length):
    nxt = []
    for src, word, here in frontier:
      for name, a, b in arrows:
        if a == here:
          words.append((src, word + (name,)))
          nxt.append((src, word + (name,), b))
    frontier = nxt
  return words


def word_classes(objects: Sequence[str], arrows: Sequence[Tuple[str, str,
                                                                 str]],
                 relations: Sequence[Tuple[Tuple[str, ...], Tuple[str, ...]]],
                 max_length: int) -> int:
  """Counts classes of bounded words under relation substitution.

  Relations are pairs of letter tuples in application order. A substitution
  is applied wherever one side occurs as a factor and the result stays
  within the length bound.

  Args:
    objects: Object names.
    arrows: (name, source, target).
    relations: Pairs of letter tuples.
    max_length: Word length bound.

  Returns:
    The number of classes.
  """
  words = typed_words(objects, arrows, max_length)
  found = set(words)
  classes = UnionFind(words)
  for src, word in words:
    for left, right in relations:
      for side, other in ((left, right), (right, left)):
        n = len(side)
        for i in range(len(word) - n + 1):
          if word[i:i + n] != side:
            continue
          new = (src, word[:i] + other + word[i + n:])
          if new in found:
            classes.union((src, word), new)
  return classes.num_clusters


def set_coend(elements: Dict[Hashable, Iterable[Hashable]],
              identifications: Iterable[Tuple[Hashable, Hashable]]) -> int:
  """Size of a quotient of a disjoint union of sets.

  Args:
    elements: Diagonal index to its set of elements.
    identifications: Pairs of (index, element) to identify.

  Returns:
    The number of classes.
  """
  universe = [(b, x) for b, xs in elements.items() for x in xs]
  classes = UnionFind(universe)
  for left, right in identifications:
    classes.union(left, right)
  return classes.num_clusters


def translation_coend(vectors: Sequence[int], k: int) -> int:
  """Classes of (Z/2)^k under x ~ x + v0 + v2 and x ~ x + v1 + v3."""
  elements = {0: range(2**k)}
  identifications = [((0, x), (0, x ^ vectors[0] ^ vectors[2]))
                     for x in range(2**k)]
  identifications += [((0, x), (0, x ^ vectors[1] ^ vectors[3]))
                      for x in range(2**k)]
  return set_coend(elements, identifications)


def product_pairs(*sizes: int) -> List[Tuple[int, ...]]:
  return list(itertools.product(*[range(n) for n in sizes]))


def mixed_coend(g, h) -> int:
  """Size of the coend of (x, y) ↦ G(x) × H(y) for set-valued G and H.

  Args:
    g: Contravariant SetFunctor.
    h: Covariant SetFunctor on the same category.

  Returns:
    The number of classes of ⊔_b G(b) × H(b) under (G(f)x, y) ~ (x, H(f)y).
  """
  c = g.category
  elements = {
      b: product_pairs(g.sizes[b], h.sizes[b]) for b in range(c.num_objects)
  }
  identifications = []
  for m in range(c.num_morphisms):
    a, b = int(c.src[m]), int(c.tgt[m])
    for x in range(g.sizes[b]):
      for y in range(h.sizes[a]):
        identifications.append(((a, (g.maps[m][x], y)),
                                (b, (x, h.maps[m][y]))))
  return set_coend(elements, identifications)


def corepresented(c, b: int):
  """C(b, −) as a covariant set functor, morphisms listed in table order."""
  homs = [[m for m in range(c.num_morphisms)
           if int(c.src[m]) == b and int(c.tgt[m]) == y]
          for y in range(c.num_objects)]
  maps = []
  for m in range(c.num_morphisms):
    targets = homs[int(c.tgt[m])]
    maps.append(tuple(targets.index(int(c.compose[m, h]))
                      for h in homs[int(c.src[m])]))
  return random_instances.SetFunctor(c, tuple(len(h) for h in homs),
                                     tuple(maps))


def coyoneda_quotient(f, b: int) -> int:
  """Size of ∫ᵃ F(a) × C(b, a) for a contravariant set functor F."""
  return mixed_coend(f, corepresented(f.category, b))
