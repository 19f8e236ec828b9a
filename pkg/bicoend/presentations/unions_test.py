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
"""Tests for unions."""

from absl import logging
from absl.testing import absltest
import numpy as np

from bicoend.cat import fincat
from bicoend.presentations import unions
from bicoend.utils import errors


def setUpModule():
  logging.set_verbosity(logging.FATAL)


class DisjointUnionTest(absltest.TestCase):

  def test_single_part_is_isomorphic(self):
    c = fincat.cyclic_group_cat(3)
    union = unions.disjoint_union('U', [('x', c)])
    inclusion = union.inclusions[0]
    self.assertTrue(fincat.check_functor(inclusion).passed)
    np.testing.assert_array_equal(inclusion.obj, np.arange(c.num_objects))
    np.testing.assert_array_equal(inclusion.mor, np.arange(c.num_morphisms))
    np.testing.assert_array_equal(union.category.compose, c.compose)

  def test_two_terminals_are_discrete(self):
    union = unions.disjoint_union('U', [('a', fincat.terminal_cat()),
                                        ('b', fincat.terminal_cat())])
    c = union.category
    self.assertEqual(c.num_objects, 2)
    self.assertEqual(c.num_morphisms, 2)
    self.assertEqual(c.objects, ('a:*', 'b:*'))
    self.assertEqual(fincat.pi0(c), 2)
    self.assertTrue(fincat.check_category(c).passed)

  def test_counts_and_lookup(self):
    parts = [('p', fincat.chain_cat(3)), ('q', fincat.cyclic_group_cat(2)),
             ('r', fincat.walking_arrow())]
    union = unions.disjoint_union('U', parts)
    self.assertEqual(union.category.num_morphisms,
                     sum(c.num_morphisms for _, c in parts))
    self.assertTrue(fincat.check_category(union.category).passed)
    for part, inclusion in enumerate(union.inclusions):
      self.assertTrue(fincat.check_functor(inclusion).passed)
      for x in range(inclusion.dom.num_objects):
        self.assertEqual(
            union.summand_of_object(int(inclusion.obj[x])), (part, x))
      for m in range(inclusion.dom.num_morphisms):
        self.assertEqual(
            union.summand_of_morphism(union.morphism_at(part, m)), (part, m))

  def test_duplicate_tags(self):
    with self.assertRaises(errors.MalformedTables):
      unions.disjoint_union('U', [('a', fincat.terminal_cat()),
                                  ('a', fincat.terminal_cat())])

  def test_copair_restricts_to_parts(self):
    c2 = fincat.cyclic_group_cat(2)
    union = unions.disjoint_union('U', [('a', c2), ('b', c2)])
    ident = fincat.identity_fun(c2)
    fold = unions.copair(union, [ident, ident])
    self.assertTrue(fincat.check_functor(fold).passed)
    for inclusion in union.inclusions:
      self.assertEqual(fincat.compose_fun(fold, inclusion), ident)

  def test_union_isomorphism_swaps_summands(self):
    c2 = fincat.cyclic_group_cat(2)
    arrow = fincat.walking_arrow()
    first = unions.disjoint_union('U', [('a', c2), ('b', arrow)])
    second = unions.disjoint_union('V', [('y', arrow), ('x', c2)])
    iso = unions.union_isomorphism(first, second, {'a': 'x', 'b': 'y'})
    self.assertTrue(fincat.check_functor(iso).passed)
    self.assertEqual(
        fincat.compose_fun(iso, first.inclusions[0]), second.inclusions[1])
    with self.assertRaises(errors.BoundaryMismatch):
      unions.union_isomorphism(first, second, {'a': 'y', 'b': 'x'})


if __name__ == '__main__':
  absltest.main()
