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
"""Bounded Knuth-Bendix completion and normal-form enumeration.

Words are tuples of generator indices in application order, so (f, g) is the
path "first f, then g" and is printed as 'g.f'. Rules are oriented by the
length-lexicographic order induced by generator ranks.
"""

import collections
import dataclasses
from typing import Deque, Dict, Iterable, List, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from bicoend.cat import fincat
from bicoend.utils import errors

Word = Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Generator:
  name: str
  src: int
  tgt: int


class RewriteSystem:
  """A string rewriting system over typed generators.

  Attributes:
    objects: Object names.
    generators: Typed generators.
    ranks: Rank of each generator in the reduction order.
    rules: Oriented rules lhs -> rhs with lhs greater than rhs.
  """

  def __init__(self, objects: Sequence[str], generators: Sequence[Generator],
               ranks: Optional[Sequence[int]] = None):
    self.objects = tuple(objects)
    self.generators = tuple(generators)
    if ranks is None:
      ranks = range(len(self.generators))
    self.ranks = tuple(int(r) for r in ranks)
    self.rules: Dict[Word, Word] = {}
    self._max_lhs = 0
    self.confluent = False

  def key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
    return len(word), tuple(self.ranks[g] for g in word)

  def reduce(self, word: Iterable[int]) -> Word:
    """Rewrites to the irreducible form; the prefix stack stays irreducible."""
    out: List[int] = []
    todo = list(reversed(tuple(word)))
    while todo:
      out.append(todo.pop())
      for k in range(1, min(len(out), self._max_lhs) + 1):
        rhs = self.rules.get(tuple(out[-k:]))
        if rhs is not None:
          del out[-k:]
          todo.extend(reversed(rhs))
          break
    return tuple(out)

  def is_irreducible(self, word: Word) -> bool:
    return all(
        word[i:j] not in self.rules
        for i in range(len(word))
        for j in range(i + 1, min(len(word), i + self._max_lhs) + 1))

  def boundary(self, src: int, word: Word) -> Tuple[int, int]:
    """Source and target of a typed word, checking composability."""
    here = src
    for g in word:
      gen = self.generators[g]
      if gen.src != here:
        raise errors.BoundaryMismatch(
            f'generator {gen.name} does not start at {self.objects[here]}')
      here = gen.tgt
    return src, here

  def _add_rule(self, lhs: Word, rhs: Word, pending: Deque[Tuple[Word, Word]]):
    # Interreduce: rules whose lhs contains the new lhs go back to the queue.
    for old_lhs in list(self.rules):
      if _contains(old_lhs, lhs):
        pending.append((old_lhs, self.rules.pop(old_lhs)))
    self.rules[lhs] = rhs
    self._max_lhs = max((len(l) for l in self.rules), default=0)
    for old_lhs, old_rhs in list(self.rules.items()):
      if _contains(old_rhs, lhs):
        self.rules[old_lhs] = self.reduce(old_rhs)

  def seed_rules(self, rules: Iterable[Tuple[Word, Word]]) -> None:
    """Installs rules known to be oriented and mutually reduced."""
    for lhs, rhs in rules:
      if self.key(lhs) <= self.key(rhs):
        raise ValueError(f'rule {lhs} -> {rhs} does not decrease')
      self.rules[lhs] = rhs
    self._max_lhs = max((len(l) for l in self.rules), default=0)

  def complete(self, equations: Iterable[Tuple[Word, Word]],
               budget: int) -> 'RewriteSystem':
    """Completes the system with `equations` into a confluent one.

    Args:
      equations: Pairs of parallel words.
      budget: Cap on processed equations plus critical pairs.

    Returns:
      self, now confluent.

    Raises:
      BudgetExhausted: if completion does not finish within budget.
    """
    pending: Deque[Tuple[Word, Word]] = collections.deque(equations)
    steps = 0
    checked = set()
    while True:
      while pending:
        steps += 1
        if steps > budget:
          raise errors.BudgetExhausted('completion', steps)
        left, right = pending.popleft()
        left, right = self.reduce(left), self.reduce(right)
        if left == right:
          continue
        if self.key(left) < self.key(right):
          left, right = right, left
        self._add_rule(left, right, pending)
      prefix_index: Dict[Word, List[Word]] = collections.defaultdict(list)
      for lhs in self.rules:
        for k in range(1, len(lhs)):
          prefix_index[lhs[:k]].append(lhs)
      for l1 in list(self.rules):
        for k in range(1, len(l1)):
          for l2 in prefix_index.get(l1[-k:], ()):
            if (l1, l2, k) in checked:
              continue
            checked.add((l1, l2, k))
            steps += 1
            if steps > budget:
              raise errors.BudgetExhausted('completion', steps)
            # l1 = x.o and l2 = o.y with overlap o of length k.
            one = self.reduce(self.rules[l1] + l2[k:])
            two = self.reduce(l1[:-k] + self.rules[l2])
            if one != two:
              pending.append((one, two))
      if not pending:
        break
    self.confluent = True
    logging.vlog(1, 'completion finished with %d rules after %d steps',
                 len(self.rules), steps)
    return self

  def enumerate_normal_forms(self, limit: int) -> List[Tuple[int, Word]]:
    """All irreducible typed words, breadth first from each object.

    Args:
      limit: Cap on the number of normal forms.

    Returns:
      (source object, word) pairs sorted by length, ranks and source.

    Raises:
      BudgetExhausted: if more than `limit` normal forms exist.
    """
    out = [(x, ()) for x in range(len(self.objects))]
    by_src = collections.defaultdict(list)
    for g, gen in enumerate(self.generators):
      by_src[gen.src].append(g)
    frontier = [(x, (), x) for x in range(len(self.objects))]
    while frontier:
      nxt = []
      for src, word, tgt in frontier:
        for g in by_src[tgt]:
          new = word + (g,)
          if any(new[-k:] in self.rules
                 for k in range(1, min(len(new), self._max_lhs) + 1)):
            continue
          out.append((src, new))
          if len(out) > limit:
            raise errors.BudgetExhausted('enumeration', len(out))
          nxt.append((src, new, self.generators[g].tgt))
      frontier = nxt
    out.sort(key=lambda item: (self.key(item[1]), item[0]))
    return out


def _contains(word: Word, sub: Word) -> bool:
  n = len(sub)
  return any(word[i:i + n] == sub for i in range(len(word) - n + 1))


@dataclasses.dataclass(frozen=True)
class Realization:
  """A quotient category with the normal form of each of its morphisms.

  Attributes:
    category: The realized FinCat.
    system: The confluent rewrite system.
    words: Normal-form word of each morphism, by morphism index.
    sources: Source object of each morphism word.
    word_index: Morphism index of each (source, normal form) pair.
  """
  category: fincat.FinCat
  system: RewriteSystem
  words: Tuple[Word, ...]
  sources: Tuple[int, ...]
  word_index: Dict[Tuple[int, Word], int] = dataclasses.field(
      compare=False, repr=False)

  def morphism_of(self, src: int, word: Sequence[int]) -> int:
    """Index of the morphism presented by a typed word."""
    self.system.boundary(src, tuple(word))
    return self.word_index[(src, self.system.reduce(word))]


def realize_system(name: str, system: RewriteSystem,
                   equations: Iterable[Tuple[Word, Word]], budget: int,
                   enumeration_limit: int) -> Realization:
  """Completes, enumerates and tabulates a presented category."""
  system.complete(equations, budget)
  forms = system.enumerate_normal_forms(enumeration_limit)
  index = {form: i for i, form in enumerate(forms)}
  gens = system.generators
  num = len(forms)
  src = np.asarray([s for s, _ in forms], dtype=np.int64)
  tgt = np.asarray(
      [gens[w[-1]].tgt if w else s for s, w in forms], dtype=np.int64)
  names = []
  for s, w in forms:
    if w:
      names.append(fincat.join_word([gens[g].name for g in reversed(w)]))
    else:
      names.append(fincat.identity_name(system.objects[s]))
  # Right multiplication by one generator, through the rewrite system.
  right = np.full((num, len(gens)), -1, dtype=np.int64)
  for i, (s, w) in enumerate(forms):
    for g, gen in enumerate(gens):
      if gen.src == tgt[i]:
        right[i, g] = index[(s, system.reduce(w + (g,)))]
  compose = np.full((num, num), -1, dtype=np.int64)
  for gi, (gs, gw) in enumerate(forms):
    fs = np.flatnonzero(tgt == gs)
    current = fs.copy()
    for letter in gw:
      current = right[current, letter]
    compose[gi, fs] = current
  identity = np.arange(len(system.objects), dtype=np.int64)
  aliases = {}
  for g, gen in enumerate(gens):
    key = (gen.src, system.reduce((g,)))
    aliases[gen.name] = index[key]
  category = fincat.FinCat(name, system.objects, tuple(names), src, tgt,
                           identity, compose, aliases)
  logging.vlog(1, 'realized %s: %d objects, %d morphisms, %d rules', name,
               category.num_objects, category.num_morphisms,
               len(system.rules))
  return Realization(category, system, tuple(w for _, w in forms),
                     tuple(s for s, _ in forms), index)


def seeded_ranks(num_generators: int, seed: Optional[int]) -> List[int]:
  """Declaration order for seed 0 or None, else a seeded permutation."""
  if not seed:
    return list(range(num_generators))
  return np.random.default_rng(seed).permutation(num_generators).tolist()
