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
"""Tests for composites."""

from absl import logging
from absl.testing import absltest
import numpy as np

from bicoend.cat import fincat
from bicoend.compose import composites
from bicoend.extra import extranat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _into_z2() -> extranat.ExtraPseudoNat:
  """Z/2 acting on itself, collapsed onto the one-object category Z/2."""
  p = random_instances.group_action_instance()
  x = fincat.cyclic_group_cat(2)
  comp = fincat.constant_fun(p.obj[0], x, 0)
  e = p.dom.factor_list[1].identity(0)
  cells = {
      g: fincat.Nat(
          fincat.compose_fun(comp, p.fun(g, e)),
          fincat.compose_fun(comp, p.fun(e, g)),
          np.full(p.obj[0].num_objects, g))
      for g in range(2)
  }
  return extranat.into_constant('z', p, x, {0: comp}, cells)


def _out_of_point(q: pseudofunctor.PseudoFun, obj: int
                 ) -> extranat.ExtraPseudoNat:
  """The constant point at obj of every Q(c, c), with identity cells."""
  point = fincat.terminal_cat()
  c_shape = extranat.lift(q).dom.factor_list[2]
  comps = {c: fincat.constant_fun(point, q.obj[0], obj)
           for c in range(c_shape.num_objects)}
  draft = extranat.out_of_constant('pt', point, q, comps,
                                   {h: None for h in range(
                                       c_shape.num_one_cells)})
  cells = {
      h: fincat.identity_nat(extranat.right_boundary(draft, 0, 0, h)[0])
      for h in range(c_shape.num_one_cells)
  }
  return extranat.out_of_constant('pt', point, q, comps, cells)


class StalactiteTest(absltest.TestCase):

  def test_identity_on_the_left(self):
    gamma = _into_z2()
    p = random_instances.group_action_instance()
    result = composites.stalactite(pseudonat.identity_pseudonat(p), gamma)
    self.assertEqual(result.comp(0, 0, 0), gamma.comp(0, 0, 0))
    for key, cell in gamma.left.items():
      self.assertEqual(result.left[key], cell)

  def test_rejects_a_different_source(self):
    other = random_instances.constant_instance(fincat.cyclic_group_cat(2))
    with self.assertRaises(errors.BoundaryMismatch):
      composites.stalactite(pseudonat.identity_pseudonat(other), _into_z2())


class StalagmiteTest(absltest.TestCase):

  def test_identity_on_the_right(self):
    q = random_instances.group_action_instance()
    beta = _out_of_point(q, 0)
    result = composites.stalagmite(beta, pseudonat.identity_pseudonat(q))
    for key, cell in beta.right.items():
      self.assertEqual(result.right[key], cell)

  def test_rejects_a_different_target(self):
    q = random_instances.group_action_instance()
    other = random_instances.constant_instance(fincat.cyclic_group_cat(2))
    with self.assertRaises(errors.BoundaryMismatch):
      composites.stalagmite(_out_of_point(q, 0),
                            pseudonat.identity_pseudonat(other))


def _discrete_map(rng: np.random.Generator, dom: fincat.FinCat,
                  cod: fincat.FinCat) -> fincat.Fun:
  obj = rng.integers(0, cod.num_objects, dom.num_objects)
  return fincat.Fun(dom, cod, obj, cod.identity[obj[dom.src]])


def _three_instances(seed: int):
  """P, Q and R on a common random B^op × B."""
  rng = np.random.default_rng(seed)
  c, parent = random_instances.random_index_category(rng)
  p, _, _ = random_instances.random_instance_on(rng, c, parent, name='P')
  q, _, _ = random_instances.random_instance_on(rng, c, parent, name='Q')
  r, _, _ = random_instances.random_instance_on(rng, c, parent, name='R')
  return rng, p, q, r


class RandomStalactiteTest(absltest.TestCase):

  def test_composites_pass_the_full_checker(self):
    for seed in range(60):
      rng, p, q, _ = _three_instances(seed)
      beta = random_instances.projection(p, q)
      gamma = random_instances.random_wedge(rng, p, 2)
      result = composites.stalactite(beta, gamma)
      report = extranat.check_extrapseudonat(result,
                                             use_constant_shortcut=False)
      self.assertTrue(report.passed, seed)
      for b in range(result.variable.num_objects):
        self.assertEqual(
            result.comp(0, b, 0),
            fincat.compose_fun(gamma.comp(0, b, 0),
                               beta.comps[p.dom.pack('object', (b, b))]),
            seed)

  def test_composing_the_transformations_first(self):
    for seed in range(30):
      rng, p, q, r = _three_instances(seed)
      inner = random_instances.projection(
          pseudofunctor.pointwise_product(p, q), r)
      outer = random_instances.projection(p, q)
      gamma = random_instances.random_wedge(rng, p, 2)
      self.assertEqual(
          composites.stalactite(pseudonat.compose_pseudonat(outer, inner),
                                gamma),
          composites.stalactite(inner, composites.stalactite(outer, gamma)),
          seed)


class RandomStalagmiteTest(absltest.TestCase):

  def test_composites_pass_the_full_checker(self):
    decided = 0
    for seed in range(400):
      rng, p, q, _ = _three_instances(seed)
      beta = random_instances.random_cowedge(
          rng, pseudofunctor.pointwise_product(p, q))
      if beta is None:
        continue
      gamma = random_instances.projection(p, q)
      result = composites.stalagmite(beta, gamma)
      report = extranat.check_extrapseudonat(result,
                                             use_constant_shortcut=False)
      self.assertTrue(report.passed, seed)
      decided += 1
      if decided == 50:
        break
    self.assertEqual(decided, 50)

  def test_composing_the_transformations_first(self):
    decided = 0
    for seed in range(200):
      rng, p, q, r = _three_instances(seed)
      pq = pseudofunctor.pointwise_product(p, q)
      beta = random_instances.random_cowedge(
          rng, pseudofunctor.pointwise_product(pq, r))
      if beta is None:
        continue
      inner = random_instances.projection(pq, r)
      outer = random_instances.projection(p, q)
      self.assertEqual(
          composites.stalagmite(beta,
                                pseudonat.compose_pseudonat(outer, inner)),
          composites.stalagmite(composites.stalagmite(beta, inner), outer),
          seed)
      decided += 1
      if decided == 20:
        break
    self.assertEqual(decided, 20)


class YankTest(absltest.TestCase):
  """S ⇏ G ⇏ T through a constant G on A × A^op × A, A the walking arrow."""

  def setUp(self):
    super().setUp()
    self.a = twocat.locally_discrete(fincat.walking_arrow())
    self.shape = twocat.product_2cat(self.a, twocat.opposite_2cat(self.a),
                                     self.a)

  def _nat(self, source, target, comp):
    comps = (comp,) * self.a.num_objects
    u = self.a.underlying
    cells = tuple(
        fincat.identity_nat(
            fincat.compose_fun(comps[int(u.tgt[f])], source.mor[f]))
        for f in range(self.a.num_one_cells))
    return pseudonat.PseudoNat(f'{source.name}=>{target.name}', source,
                               target, comps, cells)

  def _families(self, row: fincat.Fun, col: fincat.Fun, down: fincat.Fun):
    """Rows and columns for G = const D, from maps S → D and D → T."""
    s, d, t = row.dom, row.cod, down.cod
    g = pseudofunctor.constant_pseudofunctor(d, self.shape, 'G')
    f = pseudofunctor.constant_pseudofunctor(s, self.a, 'F')
    h = pseudofunctor.constant_pseudofunctor(t, self.a, 'H')
    objects = range(self.a.num_objects)
    beta_rows, beta_cols, gamma_rows, gamma_cols = {}, {}, {}, {}
    for x in objects:
      comps = {c: row for c in objects}
      draft = extranat.out_of_constant(
          'b', s, composites.row_target(g, x), comps,
          {k: None for k in range(self.a.num_one_cells)})
      beta_rows[x] = extranat.out_of_constant(
          'b', s, composites.row_target(g, x), comps, {
              k: fincat.identity_nat(
                  extranat.right_boundary(draft, 0, 0, k)[0])
              for k in range(self.a.num_one_cells)
          })
      beta_cols[x] = self._nat(
          f, pseudofunctor.fix_arguments(g, {0: x, 1: x}), col)
      down_comps = {b: down for b in objects}
      draft = extranat.into_constant(
          'g', composites.row_source(g, x), t, down_comps,
          {k: None for k in range(self.a.num_one_cells)})
      gamma_rows[x] = extranat.into_constant(
          'g', composites.row_source(g, x), t, down_comps, {
              k: fincat.identity_nat(
                  extranat.left_boundary(draft, 0, k, 0)[0])
              for k in range(self.a.num_one_cells)
          })
      gamma_cols[x] = self._nat(
          pseudofunctor.fix_arguments(g, {1: x, 2: x}), h, down)
    return f, (beta_rows, beta_cols, gamma_rows, gamma_cols)

  def _point_families(self, row_obj: int, col_obj: int):
    point = fincat.terminal_cat()
    d = fincat.discrete_cat('D', ['0', '1'])
    return self._families(fincat.constant_fun(point, d, row_obj),
                          fincat.constant_fun(point, d, col_obj),
                          fincat.constant_fun(d, point, 0))

  def test_agreeing_families(self):
    f, families = self._point_families(1, 1)
    self.assertEqual(composites.yank(*families),
                     pseudonat.identity_pseudonat(f))

  def test_disagreeing_families(self):
    _, families = self._point_families(0, 1)
    with self.assertRaises(errors.AgreementFailure):
      composites.yank(*families)

  def test_random_maps_compose(self):
    for seed in range(50):
      rng = np.random.default_rng(seed)
      s, d, t = (
          fincat.discrete_cat(name, [str(i) for i in range(
              int(rng.integers(1, 4)))]) for name in 'SDT')
      beta = _discrete_map(rng, s, d)
      gamma = _discrete_map(rng, d, t)
      _, families = self._families(beta, beta, gamma)
      result = composites.yank(*families)
      self.assertTrue(pseudonat.check_pseudonat(result).passed, seed)
      for comp in result.comps:
        self.assertEqual(comp, fincat.compose_fun(gamma, beta), seed)


if __name__ == '__main__':
  absltest.main()
