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
"""Category presentations by typed generators and relations."""

import dataclasses
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from bicoend.cat import fincat
from bicoend.presentations import rewriting
from bicoend.utils import errors


@dataclasses.dataclass(frozen=True)
class TypedWord:
  """A composable path of generators starting at `source`.

  Attributes:
    source: Name of the starting object.
    letters: Generator names in application order; identity names such as
      'id(a)' are allowed and contribute nothing.
    line: Source line in the DSL, 0 when built programmatically.
    column: Source column in the DSL.
  """
  source: str
  letters: Tuple[str, ...]
  line: int = dataclasses.field(default=0, compare=False)
  column: int = dataclasses.field(default=0, compare=False)

  def text(self) -> str:
    if not self.letters:
      return fincat.identity_name(self.source)
    return fincat.join_word(list(reversed(self.letters)))


@dataclasses.dataclass(frozen=True)
class CatPresentation:
  """Objects, typed generating arrows and relations between typed words."""
  name: str
  objects: Tuple[str, ...]
  arrows: Tuple[Tuple[str, str, str], ...]
  relations: Tuple[Tuple[TypedWord, TypedWord], ...] = ()

  def __post_init__(self):
    if len(set(self.objects)) != len(self.objects):
      raise errors.MalformedTables(f'{self.name}: duplicate object')
    names = [a[0] for a in self.arrows]
    if len(set(names)) != len(names):
      raise errors.MalformedTables(f'{self.name}: duplicate arrow')
    declared = set(self.objects)
    for arrow, src, tgt in self.arrows:
      for end in (src, tgt):
        if end not in declared:
          raise errors.MalformedTables(
              f'{self.name}: arrow {arrow} uses undeclared object {end}')
    for left, right in self.relations:
      left_bounds = self.boundary(left)
      right_bounds = self.boundary(right)
      if left_bounds != right_bounds:
        raise errors.BoundaryError(
            f'{self.name}: relation {left.text()} = {right.text()} relates '
            f'{left_bounds[0]} -> {left_bounds[1]} to '
            f'{right_bounds[0]} -> {right_bounds[1]}', left.line,
            left.column)

  @property
  def arrow_types(self) -> Dict[str, Tuple[str, str]]:
    return {a[0]: (a[1], a[2]) for a in self.arrows}

  def boundary(self, word: TypedWord) -> Tuple[str, str]:
    """Source and target of a word, checking that it composes."""
    types = self.arrow_types
    if word.source not in self.objects:
      raise errors.BoundaryError(
          f'{self.name}: unknown object {word.source!r}', word.line,
          word.column)
    here = word.source
    for letter in word.letters:
      if letter in types:
        src, tgt = types[letter]
      elif _identity_object(letter) in self.objects:
        src = tgt = _identity_object(letter)
      else:
        raise errors.BoundaryError(
            f'{self.name}: unknown arrow {letter!r}', word.line, word.column)
      if src != here:
        raise errors.BoundaryError(
            f'{self.name}: {letter} starts at {src}, not at {here}',
            word.line, word.column)
      here = tgt
    return word.source, here

  def encode(self, word: TypedWord) -> rewriting.Word:
    index = {a[0]: i for i, a in enumerate(self.arrows)}
    self.boundary(word)
    return tuple(index[l] for l in word.letters if l in index)


def _identity_object(letter: str) -> Optional[str]:
  if letter.startswith('id(') and letter.endswith(')'):
    return letter[3:-1]
  return None


def typed_word(presentation: CatPresentation,
               text: str,
               source: Optional[str] = None,
               line: int = 0,
               column: int = 0) -> TypedWord:
  """Parses 'g.f' (read right to left) into a typed word.

  Args:
    presentation: Supplies the arrow typing.
    text: Dotted word; 'id(a)' alone denotes the empty word at a.
    source: Starting object, needed only when it cannot be inferred.
    line: DSL line for error messages.
    column: DSL column for error messages.

  Returns:
    The TypedWord, not yet boundary-checked.
  """
  letters = tuple(reversed(fincat.split_word(text)))
  if source is None:
    if not letters:
      raise errors.BoundaryError('empty word', line, column)
    first = letters[0]
    types = presentation.arrow_types
    if first in types:
      source = types[first][0]
    elif _identity_object(first) is not None:
      source = _identity_object(first)
    else:
      raise errors.BoundaryError(f'unknown arrow {first!r}', line, column)
  return TypedWord(source, letters, line, column)


def realize(p: CatPresentation,
            budget: int,
            enumeration_limit: int,
            seed: Optional[int] = 0) -> rewriting.Realization:
  """Realizes a presentation as a FinCat.

  Args:
    p: The presentation.
    budget: Completion step cap.
    enumeration_limit: Cap on normal forms.
    seed: Interning seed; 0 keeps declaration order.

  Returns:
    The Realization, whose category passes check_category.

  Raises:
    BudgetExhausted: if completion or enumeration does not finish.
  """
  obj_index = {o: i for i, o in enumerate(p.objects)}
  generators = [
      rewriting.Generator(name, obj_index[src], obj_index[tgt])
      for name, src, tgt in p.arrows
  ]
  system = rewriting.RewriteSystem(
      p.objects, generators, rewriting.seeded_ranks(len(generators), seed))
  equations = [(p.encode(left), p.encode(right)) for left, right in p.relations]
  try:
    realization = rewriting.realize_system(p.name, system, equations, budget,
                                           enumeration_limit)
  except errors.BudgetExhausted as e:
    raise e.with_subject(p.name)
  logging.info('realized presentation %s: %d morphisms', p.name,
               realization.category.num_morphisms)
  return realization


def normal_form(system: rewriting.RewriteSystem,
                word: Sequence[int]) -> rewriting.Word:
  """The irreducible form of a word; unique once the system is confluent."""
  return system.reduce(word)


def presentation_of(c: fincat.FinCat) -> CatPresentation:
  """Presents a FinCat by its non-identity morphisms and its composition."""
  arrows = tuple((c.morphisms[m], c.objects[c.src[m]], c.objects[c.tgt[m]])
                 for m in range(c.num_morphisms)
                 if not c.is_identity(m))
  relations = []
  for g, f in fincat.iter_composable_pairs(c):
    if c.is_identity(g) or c.is_identity(f):
      continue
    h = c.compose[g, f]
    source = c.objects[c.src[f]]
    right = () if c.is_identity(h) else (c.morphisms[h],)
    relations.append((TypedWord(source, (c.morphisms[f], c.morphisms[g])),
                      TypedWord(source, right)))
  return CatPresentation(c.name, c.objects, arrows, tuple(relations))


class Adjoined(NamedTuple):
  """Result of adjoining generators to a FinCat."""
  category: fincat.FinCat
  inclusion: fincat.Fun
  realization: rewriting.Realization
  generator_index: Dict[str, int]

  def evaluate(self, source: int, letters: Sequence[str]) -> int:
    """Morphism presented by generator names in application order."""
    word = tuple(
        self.generator_index[l] for l in letters if l in self.generator_index)
    return self.realization.morphism_of(source, word)


def adjoin_generators(base: fincat.FinCat,
                      arrows: Sequence[Tuple[str, int, int]],
                      relations: Sequence[Tuple[Tuple[int, Sequence[str]],
                                                Tuple[int, Sequence[str]]]],
                      budget: int,
                      enumeration_limit: int,
                      seed: Optional[int] = 0,
                      name: Optional[str] = None) -> Adjoined:
  """Adjoins new arrows and relations to a finite category.

  Args:
    base: The category being extended.
    arrows: (name, source index, target index) for each new generator.
    relations: Pairs of (source index, letters) words; letters are names of
      base morphisms or new arrows in application order.
    budget: Completion step cap.
    enumeration_limit: Cap on normal forms.
    seed: Interning seed.
    name: Name of the result.

  Returns:
    The realized category with its inclusion functor from `base`. The
    inclusion need not be faithful.

  Raises:
    BudgetExhausted: if the quotient does not realize within budget.
    BoundaryError: if a relation word does not compose.
  """
  name = name or f'{base.name}+'
  base_gens = [m for m in range(base.num_morphisms) if not base.is_identity(m)]
  generators = [
      rewriting.Generator(base.morphisms[m], int(base.src[m]),
                          int(base.tgt[m])) for m in base_gens
  ]
  generators += [rewriting.Generator(n, int(s), int(t)) for n, s, t in arrows]
  generator_index = {gen.name: i for i, gen in enumerate(generators)}
  if len(generator_index) != len(generators):
    raise errors.MalformedTables(f'{name}: duplicate generator name')
  gen_of_base = {m: i for i, m in enumerate(base_gens)}
  identity_names = {base.morphisms[i]: x for x, i in enumerate(base.identity)}

  system = rewriting.RewriteSystem(
      base.objects, generators,
      rewriting.seeded_ranks(len(generators), seed))
  seeded = []
  for g, f in fincat.iter_composable_pairs(base):
    if g not in gen_of_base or f not in gen_of_base:
      continue
    h = base.compose[g, f]
    rhs = () if base.is_identity(h) else (gen_of_base[h],)
    seeded.append(((gen_of_base[f], gen_of_base[g]), rhs))
  system.seed_rules(seeded)

  def encode(source: int,
             letters: Sequence[str]) -> Tuple[rewriting.Word, int]:
    word = []
    here = source
    for letter in letters:
      if letter in generator_index:
        gen = generators[generator_index[letter]]
        if gen.src != here:
          raise errors.BoundaryError(
              f'{name}: {letter} does not start at {base.objects[here]}')
        word.append(generator_index[letter])
        here = gen.tgt
      elif letter in identity_names:
        if identity_names[letter] != here:
          raise errors.BoundaryError(
              f'{name}: {letter} does not start at {base.objects[here]}')
      else:
        raise errors.BoundaryError(f'{name}: unknown letter {letter!r}')
    return tuple(word), here

  equations = []
  for (ls, left), (rs, right) in relations:
    lw, lt = encode(ls, left)
    rw, rt = encode(rs, right)
    if ls != rs or lt != rt:
      raise errors.BoundaryError(f'{name}: relation sides are not parallel')
    equations.append((lw, rw))
  try:
    realization = rewriting.realize_system(name, system, equations, budget,
                                           enumeration_limit)
  except errors.BudgetExhausted as e:
    raise e.with_subject(name)
  category = realization.category
  mor = np.empty(base.num_morphisms, dtype=np.int64)
  for m in range(base.num_morphisms):
    if base.is_identity(m):
      mor[m] = category.identity[base.src[m]]
    else:
      mor[m] = realization.morphism_of(int(base.src[m]), (gen_of_base[m],))
  inclusion = fincat.Fun(base, category, np.arange(base.num_objects), mor)
  logging.vlog(1, 'adjoined %d generators to %s: %d -> %d morphisms',
               len(arrows), base.name, base.num_morphisms,
               category.num_morphisms)
  return Adjoined(category, inclusion, realization, generator_index)

