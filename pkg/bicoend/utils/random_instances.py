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
"""Seeded generators of small index shapes and set-valued diagrams.

Set-valued functors are kept as plain lists in `SetFunctor`, so the oracles
can read them without going through any of the constructions under test.
"""

import dataclasses
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from bicoend.cat import fincat
from bicoend.extra import extranat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat


@dataclasses.dataclass(frozen=True)
class SetFunctor:
  """A functor from a finite category to finite sets.

  Attributes:
    category: The index category.
    sizes: Number of elements at each object.
    maps: Image list for each morphism. For a covariant functor and
      f: a → b, maps[f][i] is the image in S(b) of element i of S(a); for a
      contravariant one it maps S(b) to S(a).
    contravariant: Whether the functor is on the opposite category.
  """
  category: fincat.FinCat
  sizes: Tuple[int, ...]
  maps: Tuple[Tuple[int, ...], ...]
  contravariant: bool = False


def random_forest_poset(rng: np.random.Generator,
                        max_objects: int = 3) -> Tuple[fincat.FinCat, List[int]]:
  """A poset whose Hasse diagram is a forest, with each object's parent.

  Returns:
    The category and, per object, the parent index or -1. Arrows go from an
    object to its ancestors.
  """
  n = int(rng.integers(1, max_objects + 1))
  parent = [-1] * n
  for i in range(1, n):
    if rng.random() < 0.75:
      parent[i] = int(rng.integers(0, i))
  names = [str(i) for i in range(n)]
  leq = [(names[i], names[p]) for i, p in enumerate(parent) if p >= 0]
  return fincat.poset_cat(f'F{n}', names, leq), parent


def _ancestors(parent: Sequence[int], x: int) -> List[int]:
  path = [x]
  while parent[path[-1]] >= 0:
    path.append(parent[path[-1]])
  return path


def random_set_functor(rng: np.random.Generator,
                       c: fincat.FinCat,
                       parent: Optional[Sequence[int]] = None,
                       contravariant: bool = False,
                       max_size: int = 2) -> SetFunctor:
  """A random set-valued functor on a forest poset or a cyclic group.

  Args:
    rng: Random source.
    c: A category from random_forest_poset or cyclic_group_cat.
    parent: Parent table when c is a forest poset; None for a group.
    contravariant: Whether to build a functor on the opposite category.
    max_size: Largest set.

  Returns:
    The SetFunctor.
  """
  sizes = tuple(
      int(rng.integers(1, max_size + 1)) for _ in range(c.num_objects))
  if parent is None:
    # One object; a permutation whose order divides the group order.
    order = c.num_morphisms
    n = sizes[0]
    perm = np.arange(n)
    if order % 2 == 0 and n >= 2 and rng.random() < 0.7:
      perm[[0, 1]] = perm[[1, 0]]
    powers = [np.arange(n)]
    for _ in range(1, order):
      powers.append(perm[powers[-1]])
    maps = []
    for m in range(c.num_morphisms):
      k = len(fincat.split_word(c.morphisms[m])) if not c.is_identity(m) else 0
      maps.append(tuple(int(v) for v in powers[k % order]))
    return SetFunctor(c, sizes, tuple(maps), contravariant)
  step = {}
  for x, p in enumerate(parent):
    if p < 0:
      continue
    if contravariant:
      step[x] = tuple(int(v) for v in rng.integers(0, sizes[x], sizes[p]))
    else:
      step[x] = tuple(int(v) for v in rng.integers(0, sizes[p], sizes[x]))
  maps = []
  for m in range(c.num_morphisms):
    a, b = int(c.src[m]), int(c.tgt[m])
    chain = _ancestors(parent, a)
    chain = chain[:chain.index(b) + 1]
    if contravariant:
      image = list(range(sizes[b]))
      for x in reversed(chain[:-1]):
        image = [step[x][i] for i in image]
    else:
      image = list(range(sizes[a]))
      for x in chain[:-1]:
        image = [step[x][i] for i in image]
    maps.append(tuple(image))
  return SetFunctor(c, sizes, tuple(maps), contravariant)


def discrete_pseudofunctor(s: SetFunctor,
                           name: str = 'S') -> pseudofunctor.PseudoFun:
  """A set-valued functor as a strict pseudofunctor with discrete values."""
  c = s.category
  shape = twocat.locally_discrete(c)
  if s.contravariant:
    shape = twocat.opposite_2cat(shape)
  obj = [
      fincat.discrete_cat(f'{name}({o})', [f'e{i}' for i in range(n)])
      for o, n in zip(c.objects, s.sizes)
  ]
  mor = {}
  for m, image in enumerate(s.maps):
    a, b = int(c.src[m]), int(c.tgt[m])
    if s.contravariant:
      a, b = b, a
    image = np.asarray(image, dtype=np.int64).reshape(-1)
    mor[m] = fincat.Fun(obj[a], obj[b], image, image.copy())
  return pseudofunctor.extend_strict(name, shape, obj, mor)


def mixed_product(g: SetFunctor,
                  h: SetFunctor,
                  name: str = 'P') -> pseudofunctor.PseudoFun:
  """(x, y) ↦ G(x) × H(y) on B^op × B for G contravariant and H covariant."""
  left = discrete_pseudofunctor(g, 'G')
  right = discrete_pseudofunctor(h, 'H')
  shape = twocat.product_2cat(left.dom, right.dom)
  return pseudofunctor.pointwise_product(
      pseudofunctor.reindex(left, twocat.coordinate_map(shape, left.dom, [0])),
      pseudofunctor.reindex(right, twocat.coordinate_map(shape, right.dom,
                                                         [1])), name)


def random_index_category(
    rng: np.random.Generator,
    max_objects: int = 3) -> Tuple[fincat.FinCat, Optional[List[int]]]:
  """Z/2 a quarter of the time, else a forest poset with its parents."""
  if rng.random() < 0.25:
    return fincat.cyclic_group_cat(2), None
  return random_forest_poset(rng, max_objects)


def random_instance_on(
    rng: np.random.Generator,
    c: fincat.FinCat,
    parent: Optional[Sequence[int]],
    max_size: int = 2,
    name: str = 'P'
) -> Tuple[pseudofunctor.PseudoFun, SetFunctor, SetFunctor]:
  """A discrete-valued G × H on B^op × B for a given index category B."""
  g = random_set_functor(rng, c, parent, contravariant=True,
                         max_size=max_size)
  h = random_set_functor(rng, c, parent, contravariant=False,
                         max_size=max_size)
  return mixed_product(g, h, name=name), g, h


def random_mixed_instance(
    seed: int,
    max_objects: int = 3,
    max_size: int = 2
) -> Tuple[pseudofunctor.PseudoFun, SetFunctor, SetFunctor]:
  """A discrete-valued P on B^op × B with its two set-valued factors."""
  rng = np.random.default_rng(seed)
  c, parent = random_index_category(rng, max_objects)
  return random_instance_on(rng, c, parent, max_size, name=f'P{seed}')


def group_action_instance() -> pseudofunctor.PseudoFun:
  """Z/2 acting on itself from both sides, as the hom of its one object."""
  return pseudofunctor.hom_functor(
      twocat.locally_discrete(fincat.cyclic_group_cat(2)))


def mutate_nat(nat: fincat.Nat, x: int, component: int) -> fincat.Nat:
  """A copy of nat with the component at x replaced."""
  comps = nat.comps.copy()
  comps[x] = component
  return fincat.Nat(nat.source, nat.target, comps)


def mutate_compose(c: fincat.FinCat, g: int, f: int,
                   value: int) -> fincat.FinCat:
  table = c.compose.copy()
  table[g, f] = value
  return fincat.FinCat(c.name, c.objects, c.morphisms, c.src, c.tgt,
                       c.identity, table)


def perturb_nat(rng: np.random.Generator, nat: fincat.Nat) -> fincat.Nat:
  """mutate_nat at a random object, moved to a different morphism."""
  y = int(rng.integers(0, nat.comps.shape[0]))
  m = nat.source.cod.num_morphisms
  return mutate_nat(nat, y, (int(nat.comps[y]) + int(rng.integers(1, m))) % m)


def random_looped_instance(seed: int,
                           max_objects: int = 3,
                           max_size: int = 2) -> pseudofunctor.PseudoFun:
  """P × Z/n for a random mixed P, so that every value has loops."""
  rng = np.random.default_rng(seed)
  c, parent = random_index_category(rng, max_objects)
  p, _, _ = random_instance_on(rng, c, parent, max_size, name=f'P{seed}')
  loops = pseudofunctor.constant_pseudofunctor(
      fincat.cyclic_group_cat(int(rng.integers(2, 4))), p.dom, 'Z')
  return pseudofunctor.pointwise_product(p, loops)


def walking_arrow_set_functor(sizes: Tuple[int, int], image: Sequence[int],
                              contravariant: bool = False) -> SetFunctor:
  """A set-valued functor on 0 → 1 given by the image list of the arrow."""
  c = fincat.walking_arrow()
  maps = (tuple(range(sizes[0])), tuple(int(i) for i in image),
          tuple(range(sizes[1])))
  return SetFunctor(c, tuple(sizes), maps, contravariant)


def constant_instance(c: fincat.FinCat,
                      shape: Optional[twocat.Fin2Cat] = None
                     ) -> pseudofunctor.PseudoFun:
  """The constant pseudofunctor at c on B^op × B, B terminal by default."""
  shape = shape or twocat.terminal_2cat()
  return pseudofunctor.constant_pseudofunctor(
      c, twocat.product_2cat(twocat.opposite_2cat(shape), shape),
      f'const({c.name})')


def separable_instance(left: pseudofunctor.PseudoFun,
                       right: pseudofunctor.PseudoFun,
                       name: str = 'P') -> pseudofunctor.PseudoFun:
  """(a', b', a, b) ↦ L(a', a) × R(b', b) on A^op × B^op × A × B.

  Args:
    left: L on A^op × A.
    right: R on B^op × B.
    name: Name of the result.

  Returns:
    The product, reindexed onto the four-factor shape.
  """
  (a_op, a), (b_op, b) = left.dom.factor_list, right.dom.factor_list
  shape = twocat.product_2cat(a_op, b_op, a, b)
  return pseudofunctor.pointwise_product(
      pseudofunctor.reindex(left,
                            twocat.coordinate_map(shape, left.dom, [0, 2])),
      pseudofunctor.reindex(right,
                            twocat.coordinate_map(shape, right.dom, [1, 3])),
      name)


def projection(p: pseudofunctor.PseudoFun,
               q: pseudofunctor.PseudoFun) -> pseudonat.PseudoNat:
  """The strict projection P × Q ⇒ P."""
  source = pseudofunctor.pointwise_product(p, q)
  u = p.dom.underlying
  comps = []
  for x in range(p.dom.num_objects):
    pair = source.obj[x]
    comps.append(
        fincat.Fun(pair, p.obj[x],
                   np.arange(pair.num_objects) // q.obj[x].num_objects,
                   np.arange(pair.num_morphisms) // q.obj[x].num_morphisms))
  cells = tuple(
      fincat.identity_nat(
          fincat.compose_fun(comps[int(u.tgt[f])], source.mor[f]))
      for f in range(p.dom.num_one_cells))
  return pseudonat.PseudoNat(f'pr({source.name})', source, p, tuple(comps),
                             cells)


def _diagonal(p: pseudofunctor.PseudoFun):
  """The lifted P with its parameter identity and diagonal categories."""
  lifted = extranat.lift(p)
  one = lifted.dom.factor_list[0].identity(0)
  shape = lifted.dom.factor_list[2]
  diag = [lifted.at(0, b, b) for b in range(shape.num_objects)]
  return lifted, one, shape, diag


def random_wedge(rng: np.random.Generator,
                 p: pseudofunctor.PseudoFun,
                 num_colors: int = 2,
                 name: str = 'w') -> extranat.ExtraPseudoNat:
  """P ⇏ X into a discrete X by coloring the classes of the set coend.

  Args:
    rng: Random source.
    p: A discrete-valued pseudofunctor on B^op × B.
    num_colors: Number of objects of X.
    name: Name of the result.

  Returns:
    The wedge; every cell is an identity.
  """
  lifted, one, shape, diag = _diagonal(p)
  bu = shape.underlying
  op = lifted.dom.factor_list[1]
  graph = nx.Graph()
  for b, cat in enumerate(diag):
    graph.add_nodes_from((b, i) for i in range(cat.num_objects))
    graph.add_edges_from(((b, int(cat.src[m])), (b, int(cat.tgt[m])))
                         for m in range(cat.num_morphisms))
  for g in range(shape.num_one_cells):
    b, b2 = int(bu.src[g]), int(bu.tgt[g])
    back = lifted.fun(one, g, shape.identity(b))
    forth = lifted.fun(one, op.identity(b2), g)
    graph.add_edges_from(((b, int(back.obj[e])), (b2, int(forth.obj[e])))
                         for e in range(back.dom.num_objects))
  classes = sorted(sorted(c) for c in nx.connected_components(graph))
  color = {}
  for k, members in enumerate(classes):
    paint = int(rng.integers(0, num_colors)) if k else 0
    color.update((node, paint) for node in members)
  x = fincat.discrete_cat('X', [f'x{i}' for i in range(num_colors)])
  comps = {}
  for b, cat in enumerate(diag):
    obj = np.asarray([color[(b, i)] for i in range(cat.num_objects)],
                     dtype=np.int64)
    comps[b] = fincat.Fun(cat, x, obj, x.identity[obj[cat.src]])
  draft = extranat.into_constant(name, p, x, comps,
                                 {g: None for g in range(shape.num_one_cells)})
  cells = {
      g: fincat.identity_nat(extranat.left_boundary(draft, 0, g, 0)[0])
      for g in range(shape.num_one_cells)
  }
  return extranat.into_constant(name, p, x, comps, cells)


def _compatible_family(rng: np.random.Generator, diag, constraints
                      ) -> Optional[List[int]]:
  """A random choice of one object per diagonal meeting every constraint."""
  chosen: List[int] = []

  def consistent() -> bool:
    last = len(chosen) - 1
    for c, c2, down, up in constraints:
      if max(c, c2) == last and down.obj[chosen[c2]] != up.obj[chosen[c]]:
        return False
    return True

  def search() -> bool:
    if len(chosen) == len(diag):
      return True
    for e in rng.permutation(diag[len(chosen)].num_objects):
      chosen.append(int(e))
      if consistent() and search():
        return True
      chosen.pop()
    return False

  return chosen if search() else None


def random_cowedge(rng: np.random.Generator,
                   p: pseudofunctor.PseudoFun,
                   size: int = 2,
                   name: str = 'c') -> Optional[extranat.ExtraPseudoNat]:
  """X ⇏ P out of a discrete X, each element sent to a compatible family.

  Returns:
    The cowedge with identity cells, or None when P has no compatible
    family at all.
  """
  lifted, one, shape, diag = _diagonal(p)
  cu = shape.underlying
  op = lifted.dom.factor_list[1]
  constraints = []
  for h in range(shape.num_one_cells):
    c, c2 = int(cu.src[h]), int(cu.tgt[h])
    constraints.append((c, c2, lifted.fun(one, h, shape.identity(c2)),
                        lifted.fun(one, op.identity(c), h)))
  families = []
  for _ in range(size):
    family = _compatible_family(rng, diag, constraints)
    if family is None:
      return None
    families.append(family)
  x = fincat.discrete_cat('X', [f'x{i}' for i in range(size)])
  comps = {}
  for c, cat in enumerate(diag):
    obj = np.asarray([family[c] for family in families], dtype=np.int64)
    comps[c] = fincat.Fun(x, cat, obj, cat.identity[obj])
  draft = extranat.out_of_constant(
      name, x, p, comps, {h: None for h in range(shape.num_one_cells)})
  cells = {
      h: fincat.identity_nat(extranat.right_boundary(draft, 0, 0, h)[0])
      for h in range(shape.num_one_cells)
  }
  return extranat.out_of_constant(name, x, p, comps, cells)


def translation_instance(vectors: Sequence[int], k: int,
                         name: str = 'T') -> pseudofunctor.PseudoFun:
  """(Z/2)^k with each of four Z/2 arguments acting by a translation.

  The shape is A^op × B^op × A × B with A = B = Z/2, so the A and B
  actions share one set and do not separate.

  Args:
    vectors: Four k-bit masks; the generator in argument i adds vectors[i].
    k: Number of bits.
    name: Name of the result.

  Returns:
    The strict pseudofunctor with discrete values.
  """
  z2 = twocat.locally_discrete(fincat.cyclic_group_cat(2))
  z2_op = twocat.opposite_2cat(z2)
  shape = twocat.product_2cat(z2_op, z2_op, z2, z2)
  elements = fincat.discrete_cat(
      name, [format(x, f'0{k}b') for x in range(2**k)])
  mor = {}
  for t in range(shape.num_one_cells):
    shift = 0
    for factor, v, c in zip(shape.factor_list, vectors,
                            shape.unpack('one_cell', t)):
      if not factor.underlying.is_identity(c):
        shift ^= int(v)
    image = np.arange(2**k, dtype=np.int64) ^ shift
    mor[t] = fincat.Fun(elements, elements, image, image.copy())
  return pseudofunctor.extend_strict(name, shape, [elements], mor)
