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
"""Tests for parametrized."""

from absl import logging
from absl.testing import absltest

from bicoend.cat import fincat
from bicoend.derived import parametrized
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.utils import config
from bicoend.utils import errors
from bicoend.utils import oracles
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _arrow(g_sizes, g_image, h_sizes, h_image):
  g = random_instances.walking_arrow_set_functor(g_sizes, g_image,
                                                 contravariant=True)
  h = random_instances.walking_arrow_set_functor(h_sizes, h_image)
  return random_instances.mixed_product(g, h), g, h


class ParametrizedBicoendTest(absltest.TestCase):

  @classmethod
  def setUpClass(cls):
    super().setUpClass()
    cls.left, cls.g, cls.h = _arrow((1, 1), (0,), (2, 1), (0, 0))
    right, g, h = _arrow((1, 1), (0,), (2, 2), (0, 1))
    cls.right_count = oracles.mixed_coend(g, h)
    p = random_instances.separable_instance(cls.left, right)
    cls.source = pseudofunctor.regroup(p, ((0, 2), 1, 3))
    cls.bundle = parametrized.parametrized_bicoend(cls.source,
                                                   config.get_config('test'))

  def test_values_match_the_oracle(self):
    q = self.bundle.pseudofunctor
    for x in range(q.dom.num_objects):
      a_op, a = q.dom.unpack('object', x)
      expected = self.g.sizes[a_op] * self.h.sizes[a] * self.right_count
      self.assertEqual(fincat.pi0(q.obj[x]), expected)

  def test_pseudofunctor_passes_its_check(self):
    report = pseudofunctor.check_pseudofunctor(self.bundle.pseudofunctor)
    self.assertTrue(report.passed, report.summary())

  def test_inclusions_are_the_bicoend_components(self):
    for x in range(self.bundle.parameter.num_objects):
      self.assertEqual(self.bundle.inclusion(x, 0),
                       self.bundle.witnesses[x].component(0))
      self.assertEqual(self.bundle.inclusion(x, 0).cod,
                       self.bundle.pseudofunctor.obj[x])

  def test_inner_transformation(self):
    for b in range(self.bundle.variable.num_objects):
      j = parametrized.inner_transformation(self.bundle, b)
      self.assertTrue(pseudonat.check_pseudonat(j).passed)
      self.assertTrue(all(fincat.is_identity_nat(c) for c in j.cells))

  def test_rejects_two_factors(self):
    with self.assertRaises(errors.BoundaryMismatch):
      parametrized.parametrized_bicoend(self.left)


if __name__ == '__main__':
  absltest.main()
