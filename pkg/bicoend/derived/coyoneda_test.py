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
"""Tests for coyoneda."""

from absl import logging
from absl.testing import absltest

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.derived import coyoneda
from bicoend.derived import modification
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import config
from bicoend.utils import errors
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _collapse(f: pseudofunctor.PseudoFun) -> pseudonat.PseudoNat:
  """The transformation from F to the constant at the terminal category."""
  one = pseudofunctor.constant_pseudofunctor(fincat.terminal_cat(), f.dom,
                                             'T')
  u = f.dom.underlying
  comps = tuple(
      fincat.constant_fun(f.obj[x], one.obj[x], 0)
      for x in range(f.dom.num_objects))
  cells = tuple(
      fincat.identity_nat(
          fincat.compose_fun(comps[int(u.tgt[k])], f.mor[k]))
      for k in range(f.dom.num_one_cells))
  return pseudonat.PseudoNat('!', f, one, comps, cells)


class CoyonedaTest(absltest.TestCase):

  @classmethod
  def setUpClass(cls):
    super().setUpClass()
    cls.a = twocat.locally_discrete(fincat.walking_arrow())
    cls.s = random_instances.walking_arrow_set_functor((2, 3), (0, 1, 1),
                                                       contravariant=True)
    cls.f = random_instances.discrete_pseudofunctor(cls.s, 'F')
    cls.params = config.get_config('test')
    cls.image = coyoneda.coyoneda_object(cls.f, cls.a, cls.params)

  def test_object_recovers_the_values(self):
    q = self.image.pseudofunctor
    for b in range(self.a.num_objects):
      self.assertEqual(fincat.pi0(q.obj[b]), self.s.sizes[b])
      self.assertIsNotNone(equivalence.find_equivalence(
          q.obj[b], self.f.obj[b]))

  def test_weighted_shape(self):
    w = coyoneda.weighted(self.f, self.a)
    self.assertLen(w.dom.factor_list, 3)
    self.assertEqual(w.dom.factor_list[2], self.a)

  def test_identity_transformation(self):
    gamma = pseudonat.identity_pseudonat(self.f)
    result = coyoneda.coyoneda_on_pseudonat(gamma, self.a, self.image,
                                            self.image)
    for b, comp in enumerate(result.transformation.comps):
      self.assertEqual(comp, fincat.identity_fun(self.image.witnesses[b]
                                                 .category))
    self.assertTrue(
        pseudonat.check_pseudonat(result.transformation).passed)

  def test_collapse_to_a_point(self):
    gamma = _collapse(self.f)
    target = coyoneda.coyoneda_object(gamma.target, self.a, self.params)
    result = coyoneda.coyoneda_on_pseudonat(gamma, self.a, self.image, target)
    for comp in result.transformation.comps:
      self.assertEqual(fincat.pi0(comp.cod), 1)

  def test_identity_modification(self):
    gamma = pseudonat.identity_pseudonat(self.f)
    first = coyoneda.coyoneda_on_pseudonat(gamma, self.a, self.image,
                                           self.image)
    sigma = modification.identity_modification(gamma)
    result = coyoneda.coyoneda_on_modification(sigma, self.a, self.image,
                                               self.image, first, first)
    self.assertTrue(all(fincat.is_identity_nat(c) for c in result.comps))

  def test_rejects_covariant_input(self):
    covariant = random_instances.discrete_pseudofunctor(
        random_instances.walking_arrow_set_functor((1, 1), (0,)), 'G')
    with self.assertRaises(errors.BoundaryMismatch):
      coyoneda.coyoneda_object(covariant, self.a, self.params)


if __name__ == '__main__':
  absltest.main()
