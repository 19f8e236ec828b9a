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
"""Tests for fincat."""

import itertools

from absl import logging
from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.utils import errors


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _categories():
  return [
      fincat.terminal_cat(),
      fincat.discrete_cat('D2', ['x', 'y']),
      fincat.walking_arrow(),
      fincat.chain_cat(3),
      fincat.cyclic_group_cat(2),
      fincat.cyclic_group_cat(3),
  ]


def _naive_law_scan(c):
  """Independent scan used to validate check_category verdicts."""
  for f in range(c.num_morphisms):
    if c.compose[c.identity[c.tgt[f]], f] != f:
      return False
    if c.compose[f, c.identity[c.src[f]]] != f:
      return False
  for g, f in itertools.product(range(c.num_morphisms), repeat=2):
    defined = c.compose[g, f] >= 0
    if defined != (c.tgt[f] == c.src[g]):
      return False
    if defined:
      h = c.compose[g, f]
      if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
        return False
  for h, g, f in itertools.product(range(c.num_morphisms), repeat=3):
    if c.tgt[f] == c.src[g] and c.tgt[g] == c.src[h]:
      if c.compose[h, c.compose[g, f]] != c.compose[c.compose[h, g], f]:
        return False
  return True


def _mutate(c, g, f, value):
  table = c.compose.copy()
  table[g, f] = value
  return fincat.FinCat(c.name, c.objects, c.morphisms, c.src, c.tgt,
                       c.identity, table)


class CheckCategoryTest(parameterized.TestCase):

  @parameterized.parameters(range(6))
  def test_valid_categories_pass(self, index):
    self.assertTrue(fincat.check_category(_categories()[index]).passed)

  def test_terminal(self):
    c = fincat.terminal_cat()
    self.assertEqual(c.num_objects, 1)
    self.assertEqual(c.num_morphisms, 1)
    self.assertTrue(fincat.check_category(c).passed)

  def test_wrong_target_names_the_pair(self):
    c = fincat.chain_cat(3)
    f = c.mor('0<1')
    g = c.mor('1<2')
    bad = _mutate(c, g, f, c.mor('1<2'))
    report = fincat.check_category(bad)
    self.assertFalse(report.passed)
    instances = [e.instance for e in report.failures() if e.axiom == 'closure']
    self.assertIn('1<2∘0<1', instances)

  def test_raw_tables(self):
    report = fincat.check_category({
        'name': 'arrow',
        'objects': ['a', 'b'],
        'arrows': [('id(a)', 'a', 'a'), ('id(b)', 'b', 'b'), ('f', 'a', 'b')],
        'identity': {'a': 'id(a)', 'b': 'id(b)'},
        'compose': {
            ('id(a)', 'id(a)'): 'id(a)',
            ('id(b)', 'id(b)'): 'id(b)',
            ('f', 'id(a)'): 'f',
            ('id(b)', 'f'): 'f',
        },
    })
    self.assertTrue(report.passed)

  def test_dangling_identifier(self):
    with self.assertRaises(errors.MalformedTables):
      fincat.check_category({
          'objects': ['a'],
          'arrows': [('id(a)', 'a', 'z')],
          'identity': {'a': 'id(a)'},
          'compose': {},
      })

  def test_single_entry_mutations_are_detected(self):
    rng = np.random.default_rng(7)
    mutations = 0
    for c in _categories()[2:]:
      for g, f in itertools.product(range(c.num_morphisms), repeat=2):
        for value in range(-1, c.num_morphisms):
          if value == c.compose[g, f]:
            continue
          if rng.random() > 0.5:
            continue
          mutated = _mutate(c, g, f, value)
          mutations += 1
          self.assertEqual(
              fincat.check_category(mutated).passed, _naive_law_scan(mutated))
    self.assertGreater(mutations, 100)


class ConstructionsTest(parameterized.TestCase):

  @parameterized.parameters(range(6))
  def test_opposite_is_involution(self, index):
    c = _categories()[index]
    self.assertEqual(fincat.opposite_cat(fincat.opposite_cat(c)), c)
    self.assertTrue(fincat.check_category(fincat.opposite_cat(c)).passed)

  def test_product_counts(self):
    c, d = fincat.chain_cat(3), fincat.cyclic_group_cat(2)
    p = fincat.product_cat(c, d)
    self.assertEqual(p.num_morphisms, c.num_morphisms * d.num_morphisms)
    self.assertEqual(p.num_objects, c.num_objects * d.num_objects)
    self.assertTrue(fincat.check_category(p).passed)

  def test_product_with_terminal(self):
    c = fincat.chain_cat(3)
    p = fincat.product_cat(c, fincat.terminal_cat())
    self.assertTrue(np.array_equal(p.compose, c.compose))
    self.assertTrue(np.array_equal(p.src, c.src))

  def test_evaluate_word(self):
    c = fincat.chain_cat(3)
    self.assertEqual(c.evaluate_word('1<2.0<1'), c.mor('0<2'))
    self.assertEqual(c.evaluate_word('id(1).0<1'), c.mor('0<1'))
    with self.assertRaises(errors.BoundaryMismatch):
      c.evaluate_word('0<1.1<2')

  def test_quoting(self):
    self.assertEqual(fincat.quote_name('x:g.f'), '[x:g.f]')
    self.assertEqual(fincat.split_word('[x:g.f].h'), ['x:g.f', 'h'])
    self.assertEqual(fincat.split_word('id(a).f'), ['id(a)', 'f'])

  def test_inverses(self):
    c = fincat.cyclic_group_cat(3)
    s = c.mor('s')
    self.assertEqual(c.inverses[s], c.mor('s.s'))
    arrow = fincat.walking_arrow()
    self.assertEqual(arrow.inverses[arrow.mor('0<1')], -1)

  def test_pi0(self):
    self.assertEqual(fincat.pi0(fincat.discrete_cat('D', ['a', 'b', 'c'])), 3)
    self.assertEqual(fincat.pi0(fincat.chain_cat(3)), 1)


def _random_endofunctors(c, count, seed):
  rng = np.random.default_rng(seed)
  functors = equivalence.all_functors(c, c)
  picks = rng.integers(0, len(functors), size=count)
  return [functors[i] for i in picks]


class FunctorAlgebraTest(parameterized.TestCase):

  def test_identity_laws(self):
    c = fincat.chain_cat(3)
    for f in _random_endofunctors(c, 5, 0):
      self.assertEqual(fincat.compose_fun(fincat.identity_fun(c), f), f)
      self.assertEqual(fincat.compose_fun(f, fincat.identity_fun(c)), f)

  def test_associativity(self):
    c = fincat.chain_cat(3)
    f, g, h = _random_endofunctors(c, 3, 1)
    self.assertEqual(
        fincat.compose_fun(fincat.compose_fun(h, g), f),
        fincat.compose_fun(h, fincat.compose_fun(g, f)))

  def test_boundary_mismatch(self):
    f = fincat.identity_fun(fincat.chain_cat(2))
    g = fincat.identity_fun(fincat.chain_cat(3))
    with self.assertRaises(errors.BoundaryMismatch):
      fincat.compose_fun(g, f)

  def test_identity_nats(self):
    f = fincat.identity_fun(fincat.chain_cat(3))
    ident = fincat.identity_nat(f)
    self.assertEqual(fincat.vcompose_nat(ident, ident), ident)
    self.assertEqual(
        fincat.hwhisker_left(f, ident), fincat.identity_nat(f))
    self.assertEqual(
        fincat.hwhisker_right(ident, f), fincat.identity_nat(f))

  def test_interchange(self):
    c = fincat.walking_arrow()
    # The two constant functors and the unique transformation between them.
    zero = fincat.constant_fun(c, c, 0)
    one = fincat.constant_fun(c, c, 1)
    alpha = fincat.Nat(zero, one, np.full(2, c.mor('0<1')))
    ident = fincat.identity_fun(c)
    self.assertTrue(fincat.check_nat(alpha).passed)
    # (β'∗β)∘(α'∗α) = (β'∘α')∗(β∘α).
    id_one = fincat.identity_nat(one)
    lhs = fincat.vcompose_nat(
        fincat.hcompose_nat(id_one, id_one), fincat.hcompose_nat(alpha, alpha))
    rhs = fincat.hcompose_nat(
        fincat.vcompose_nat(id_one, alpha), fincat.vcompose_nat(id_one, alpha))
    self.assertEqual(lhs, rhs)
    self.assertEqual(
        fincat.hwhisker_left(ident, alpha), alpha)

  def test_extend_functor(self):
    c = fincat.chain_cat(3)
    f = fincat.extend_functor(c, c, [0, 1, 2], {
        c.mor('0<1'): c.mor('0<1'),
        c.mor('1<2'): c.mor('1<2')
    })
    self.assertEqual(f, fincat.identity_fun(c))
    with self.assertRaises(errors.MalformedTables):
      fincat.extend_functor(c, c, [0, 1, 2], {c.mor('0<1'): c.mor('0<1')})

  def test_inverse_nat(self):
    c = fincat.cyclic_group_cat(2)
    ident = fincat.identity_fun(c)
    alpha = fincat.Nat(ident, ident, np.asarray([c.mor('s')]))
    self.assertEqual(
        fincat.vcompose_nat(fincat.inverse_nat(alpha), alpha),
        fincat.identity_nat(ident))
    arrow = fincat.walking_arrow()
    beta = fincat.Nat(
        fincat.constant_fun(arrow, arrow, 0),
        fincat.constant_fun(arrow, arrow, 1), np.full(2, arrow.mor('0<1')))
    with self.assertRaises(errors.NotInvertible):
      fincat.inverse_nat(beta)

  def test_check_nat_failure(self):
    c = fincat.cyclic_group_cat(3)
    ident = fincat.identity_fun(c)
    twist = fincat.Fun(c, c, np.asarray([0]),
                       np.asarray([0, c.mor('s.s'), c.mor('s')]))
    self.assertTrue(fincat.check_functor(twist).passed)
    alpha = fincat.Nat(ident, twist, np.asarray([0]))
    self.assertFalse(fincat.check_nat(alpha).passed)


if __name__ == '__main__':
  absltest.main()
