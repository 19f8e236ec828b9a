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
"""Tests for presentation."""

import dataclasses

from absl import logging
from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.presentations import presentation
from bicoend.utils import errors
from bicoend.utils import oracles


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _two_path():
  return presentation.CatPresentation('path', ('a', 'b', 'c'),
                                      (('f', 'a', 'b'), ('g', 'b', 'c')))


def _z2():
  p = presentation.CatPresentation('Z2', ('*',), (('s', '*', '*'),))
  return dataclasses.replace(
      p,
      relations=((presentation.typed_word(p, 's.s'),
                  presentation.typed_word(p, 'id(*)')),))


class CatPresentationTest(parameterized.TestCase):

  def test_terminal(self):
    p = presentation.CatPresentation('one', ('*',), ())
    c = presentation.realize(p, budget=10, enumeration_limit=10).category
    self.assertEqual(c.num_objects, 1)
    self.assertEqual(c.num_morphisms, 1)

  def test_relation_with_mismatched_boundaries(self):
    p = presentation.CatPresentation('bad', ('a', 'b', 'c'),
                                     (('f', 'a', 'b'), ('g', 'b', 'c'),
                                      ('h', 'a', 'b')))
    left = presentation.typed_word(p, 'g.f', line=3, column=5)
    right = presentation.typed_word(p, 'h')
    with self.assertRaises(errors.BoundaryError) as raised:
      dataclasses.replace(p, relations=((left, right),))
    self.assertEqual(raised.exception.line, 3)

  def test_word_that_does_not_compose(self):
    p = _two_path()
    with self.assertRaises(errors.BoundaryError):
      p.boundary(presentation.typed_word(p, 'f.g'))

  def test_undeclared_object(self):
    with self.assertRaises(errors.MalformedTables):
      presentation.CatPresentation('bad', ('a',), (('f', 'a', 'b'),))

  def test_typed_word_reads_right_to_left(self):
    p = _two_path()
    word = presentation.typed_word(p, 'g.f')
    self.assertEqual(word.source, 'a')
    self.assertEqual(word.letters, ('f', 'g'))
    self.assertEqual(word.text(), 'g.f')
    self.assertEqual(p.boundary(word), ('a', 'c'))


class RealizeTest(parameterized.TestCase):

  def test_free_two_path(self):
    p = _two_path()
    c = presentation.realize(p, budget=100, enumeration_limit=100).category
    expected = oracles.word_classes(p.objects, p.arrows, [], max_length=3)
    self.assertEqual(c.num_morphisms, 6)
    self.assertEqual(c.num_morphisms, expected)
    self.assertTrue(fincat.check_category(c).passed)
    self.assertEqual(c.evaluate_word('g.f'), c.mor('g.f'))

  def test_cyclic_group_of_order_two(self):
    p = _z2()
    c = presentation.realize(p, budget=100, enumeration_limit=100).category
    expected = oracles.word_classes(p.objects, p.arrows,
                                    [(('s', 's'), ())], max_length=4)
    self.assertEqual(c.num_morphisms, 2)
    self.assertEqual(c.num_morphisms, expected)
    self.assertTrue(c.is_iso(c.mor('s')))

  def test_free_endomorphism_exhausts_budget(self):
    p = presentation.CatPresentation('N', ('*',), (('s', '*', '*'),))
    with self.assertRaises(errors.BudgetExhausted) as raised:
      presentation.realize(p, budget=100, enumeration_limit=50)
    self.assertEqual(raised.exception.subject, 'N')

  @parameterized.parameters(0, 1, 7)
  def test_seed_does_not_change_the_category(self, seed):
    p = _z2()
    c = presentation.realize(
        p, budget=100, enumeration_limit=100, seed=seed).category
    self.assertIsNotNone(
        equivalence.find_equivalence(c, fincat.cyclic_group_cat(2)))

  def test_presentation_of_round_trip(self):
    for c in [fincat.cyclic_group_cat(3), fincat.chain_cat(3)]:
      realized = presentation.realize(
          presentation.presentation_of(c), budget=1000,
          enumeration_limit=100).category
      self.assertEqual(realized.num_morphisms, c.num_morphisms)
      self.assertTrue(fincat.check_category(realized).passed)
      self.assertIsNotNone(equivalence.find_equivalence(c, realized))


class NormalFormTest(absltest.TestCase):

  def test_normal_forms(self):
    p = _z2()
    system = presentation.realize(p, budget=100, enumeration_limit=100).system
    self.assertEqual(presentation.normal_form(system, ()), ())
    self.assertEqual(presentation.normal_form(system, (0,)), (0,))
    for left, right in p.relations:
      self.assertEqual(
          presentation.normal_form(system, p.encode(left)),
          presentation.normal_form(system, p.encode(right)))


class AdjoinGeneratorsTest(absltest.TestCase):

  def test_adjoin_nothing(self):
    base = fincat.cyclic_group_cat(3)
    adjoined = presentation.adjoin_generators(base, [], [], 100, 100)
    inclusion = adjoined.inclusion
    self.assertTrue(fincat.check_functor(inclusion).passed)
    self.assertEqual(adjoined.category.num_morphisms, base.num_morphisms)
    self.assertCountEqual(inclusion.mor.tolist(),
                          range(base.num_morphisms))

  def test_formal_inverse_gives_walking_isomorphism(self):
    base = fincat.walking_arrow()
    adjoined = presentation.adjoin_generators(
        base, [('g', 1, 0)], [((0, ['0<1', 'g']), (0, [])),
                              ((1, ['g', '0<1']), (1, []))], 100, 100)
    c = adjoined.category
    expected = oracles.word_classes(['0', '1'], [('f', '0', '1'),
                                                 ('g', '1', '0')],
                                    [(('f', 'g'), ()), (('g', 'f'), ())], 3)
    self.assertEqual(c.num_objects, 2)
    self.assertEqual(c.num_morphisms, 4)
    self.assertEqual(c.num_morphisms, expected)
    self.assertTrue(c.is_iso(int(adjoined.inclusion.mor[base.mor('0<1')])))
    self.assertEqual(adjoined.evaluate(0, ['0<1', 'g']), c.identity[0])

  def test_endo_generator_without_relations(self):
    with self.assertRaises(errors.BudgetExhausted):
      presentation.adjoin_generators(fincat.terminal_cat(), [('e', 0, 0)], [],
                                     100, 50)

  def test_ill_typed_relation(self):
    with self.assertRaises(errors.BoundaryError):
      presentation.adjoin_generators(fincat.walking_arrow(), [('g', 1, 0)],
                                     [((0, ['g']), (0, []))], 100, 100)

  def test_relation_may_merge_base_morphisms(self):
    base = fincat.cyclic_group_cat(2)
    adjoined = presentation.adjoin_generators(
        base, [], [((0, ['s']), (0, []))], 100, 100)
    self.assertEqual(adjoined.category.num_morphisms, 1)
    self.assertTrue(
        np.array_equal(adjoined.inclusion.mor, np.zeros(2, dtype=np.int64)))


if __name__ == '__main__':
  absltest.main()
