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
"""Indexed disjoint unions of finite categories."""

import dataclasses
from typing import Mapping, Sequence, Tuple

import numpy as np

from bicoend.cat import fincat
from bicoend.utils import constants
from bicoend.utils import errors


def tagged(tag: str, name: str) -> str:
  return f'{tag}{constants.TAG_SEPARATOR}{name}'


@dataclasses.dataclass(frozen=True, eq=False)
class TaggedUnion:
  """A coproduct of FinCats with its summand inclusions.

  Attributes:
    tags: Index tag of each summand.
    parts: The summands.
    category: The coproduct; names are 'tag:name'.
    inclusions: Inclusion functor of each summand.
    obj_offsets: First object index of each summand in `category`.
    mor_offsets: First morphism index of each summand in `category`.
  """
  tags: Tuple[str, ...]
  parts: Tuple[fincat.FinCat, ...]
  category: fincat.FinCat
  inclusions: Tuple[fincat.Fun, ...]
  obj_offsets: np.ndarray
  mor_offsets: np.ndarray

  @property
  def tag_index(self):
    return {tag: i for i, tag in enumerate(self.tags)}

  def summand_of_object(self, x: int) -> Tuple[int, int]:
    part = int(np.searchsorted(self.obj_offsets, x, side='right') - 1)
    return part, int(x - self.obj_offsets[part])

  def summand_of_morphism(self, m: int) -> Tuple[int, int]:
    part = int(np.searchsorted(self.mor_offsets, m, side='right') - 1)
    return part, int(m - self.mor_offsets[part])

  def object_at(self, part: int, x: int) -> int:
    return int(self.obj_offsets[part] + x)

  def morphism_at(self, part: int, m: int) -> int:
    return int(self.mor_offsets[part] + m)


def disjoint_union(name: str,
                   parts: Sequence[Tuple[str, fincat.FinCat]]) -> TaggedUnion:
  """The coproduct of tagged parts, with block-diagonal composition."""
  tags = tuple(tag for tag, _ in parts)
  if len(set(tags)) != len(tags):
    raise errors.MalformedTables(f'{name}: duplicate summand tag')
  cats = tuple(c for _, c in parts)
  obj_sizes = [c.num_objects for c in cats]
  mor_sizes = [c.num_morphisms for c in cats]
  obj_offsets = np.concatenate([[0], np.cumsum(obj_sizes)[:-1]]).astype(
      np.int64) if cats else np.zeros(0, dtype=np.int64)
  mor_offsets = np.concatenate([[0], np.cumsum(mor_sizes)[:-1]]).astype(
      np.int64) if cats else np.zeros(0, dtype=np.int64)
  num_mor = int(sum(mor_sizes))
  compose = np.full((num_mor, num_mor), -1, dtype=np.int64)
  src, tgt, identity = [], [], []
  objects, morphisms = [], []
  for (tag, c), obj_off, mor_off in zip(parts, obj_offsets, mor_offsets):
    objects.extend(tagged(tag, o) for o in c.objects)
    morphisms.extend(tagged(tag, m) for m in c.morphisms)
    src.append(c.src + obj_off)
    tgt.append(c.tgt + obj_off)
    identity.append(c.identity + mor_off)
    block = np.where(c.compose >= 0, c.compose + mor_off, -1)
    span = slice(mor_off, mor_off + c.num_morphisms)
    compose[span, span] = block
  empty = np.zeros(0, dtype=np.int64)
  category = fincat.FinCat(
      name, tuple(objects), tuple(morphisms),
      np.concatenate(src) if src else empty,
      np.concatenate(tgt) if tgt else empty,
      np.concatenate(identity) if identity else empty, compose)
  inclusions = tuple(
      fincat.Fun(c, category,
                 np.arange(c.num_objects, dtype=np.int64) + obj_off,
                 np.arange(c.num_morphisms, dtype=np.int64) + mor_off)
      for c, obj_off, mor_off in zip(cats, obj_offsets, mor_offsets))
  return TaggedUnion(tags, cats, category, inclusions, obj_offsets,
                     mor_offsets)


def copair(union: TaggedUnion, funs: Sequence[fincat.Fun]) -> fincat.Fun:
  """The functor out of a coproduct that restricts to `funs` on summands."""
  if len(funs) != len(union.parts):
    raise errors.BoundaryMismatch('one functor per summand is required')
  if not funs:
    raise errors.BoundaryMismatch('cannot copair an empty family')
  cod = funs[0].cod
  for part, fun in zip(union.parts, funs):
    if not (fun.dom == part and fun.cod == cod):
      raise errors.BoundaryMismatch(f'{fun!r} does not fit its summand')
  return fincat.Fun(union.category, cod,
                    np.concatenate([f.obj for f in funs]),
                    np.concatenate([f.mor for f in funs]))


def copair_nat(union: TaggedUnion, nats: Sequence[fincat.Nat]) -> fincat.Nat:
  """The transformation between copaired functors, summand by summand."""
  source = copair(union, [n.source for n in nats])
  target = copair(union, [n.target for n in nats])
  return fincat.Nat(source, target, np.concatenate([n.comps for n in nats]))


def union_isomorphism(source: TaggedUnion, target: TaggedUnion,
                      tag_map: Mapping[str, str]) -> fincat.Fun:
  """The isomorphism matching summands of equal categories by tag.

  Args:
    source: Domain union.
    target: Codomain union.
    tag_map: Source tag to target tag; must be a bijection.

  Returns:
    The isomorphism of coproduct categories.

  Raises:
    BoundaryMismatch: if matched summands differ.
  """
  index = target.tag_index
  funs = []
  for tag, part in zip(source.tags, source.parts):
    j = index[tag_map[tag]]
    if not part == target.parts[j]:
      raise errors.BoundaryMismatch(
          f'summands {tag} and {tag_map[tag]} are different categories')
    funs.append(target.inclusions[j])
  if len(set(tag_map.values())) != len(target.tags):
    raise errors.BoundaryMismatch('tag map is not a bijection')
  return copair(source, funs)
