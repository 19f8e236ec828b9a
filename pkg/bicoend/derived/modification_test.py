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
"""Tests for modification."""

from absl import logging
from absl.testing import absltest

from bicoend.cat import fincat
from bicoend.derived import modification
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


class ModificationTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    shape = twocat.locally_discrete(fincat.walking_arrow())
    self.p = pseudofunctor.constant_pseudofunctor(fincat.cyclic_group_cat(2),
                                                  shape, 'Z2')
    self.alpha = pseudonat.identity_pseudonat(self.p)
    self.one = modification.identity_modification(self.alpha)
    # The component s: 1 ⇒ 1, natural because Z/2 is abelian.
    self.s = random_instances.mutate_nat(self.one.comps[0], 0, 1)

  def test_identity_passes(self):
    report = modification.check_modification(self.one)
    self.assertTrue(report.passed, report.summary())

  def test_constant_twist_passes_and_squares_to_one(self):
    twist = modification.Modification('s', self.alpha, self.alpha,
                                      (self.s, self.s))
    self.assertTrue(modification.check_modification(twist).passed)
    self.assertEqual(modification.compose_modifications(twist, twist),
                     self.one)

  def test_twist_at_one_object_fails_at_the_arrow(self):
    half = modification.Modification('half', self.alpha, self.alpha,
                                     (self.s, self.one.comps[1]))
    report = modification.check_modification(half)
    self.assertFalse(report.passed)
    self.assertEqual(report.failed_axioms(), ['modification'])

  def test_identity_is_a_unit(self):
    twist = modification.Modification('s', self.alpha, self.alpha,
                                      (self.s, self.s))
    self.assertEqual(
        modification.compose_modifications(self.one, twist), twist)

  def test_requires_parallel_transformations(self):
    other = pseudonat.identity_pseudonat(
        pseudofunctor.constant_pseudofunctor(
            fincat.terminal_cat(), self.p.dom, 'T'))
    with self.assertRaises(errors.BoundaryMismatch):
      modification.Modification('bad', self.alpha, other, self.one.comps)

  def test_component_count(self):
    with self.assertRaises(errors.MalformedTables):
      modification.Modification('short', self.alpha, self.alpha,
                                 self.one.comps[:1])


if __name__ == '__main__':
  absltest.main()
