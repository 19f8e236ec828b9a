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
"""Tests for bicoend."""

from absl import logging
from absl.testing import absltest
from absl.testing import parameterized

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.codescent import bicoend
from bicoend.codescent import solution
from bicoend.extra import extranat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import config
from bicoend.utils import oracles
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _instances():
  return (
      ('constant', lambda: random_instances.constant_instance(
          fincat.cyclic_group_cat(2))),
      ('walking_arrow', lambda: pseudofunctor.hom_functor(
          twocat.locally_discrete(fincat.walking_arrow()))),
      ('group', random_instances.group_action_instance),
  )


class BicoendTest(parameterized.TestCase):

  def test_constant_is_equivalent_to_its_value(self):
    c = fincat.cyclic_group_cat(2)
    witness = bicoend.bicoend(
        random_instances.constant_instance(c), config.get_config('test'))
    self.assertIsNotNone(equivalence.find_equivalence(c, witness.category))

  @parameterized.named_parameters(*_instances())
  def test_witness_passes_its_checks(self, build):
    witness = bicoend.bicoend(build(), config.get_config('test'))
    report = extranat.check_extrapseudonat(witness.extranat,
                                           use_constant_shortcut=False)
    self.assertTrue(report.passed, report.summary())
    self.assertEqual(witness.component(0).cod, witness.category)

  @parameterized.named_parameters(*_instances())
  def test_round_trip_is_table_identical(self, build):
    witness = bicoend.bicoend(build(), config.get_config('test'))
    cand = bicoend.from_extrapseudonat(witness.extranat, witness.coherence)
    self.assertEqual(cand.x, witness.solution.x)
    self.assertEqual(cand.chi, witness.solution.chi)
    again = bicoend.to_extrapseudonat(witness.coherence, cand)
    self.assertEqual(again, witness.extranat)

  def test_discrete_pi0_matches_oracle(self):
    g = random_instances.walking_arrow_set_functor((1, 1), (0,),
                                                   contravariant=True)
    h = random_instances.walking_arrow_set_functor((2, 2), (1, 0))
    witness = bicoend.bicoend(
        random_instances.mixed_product(g, h), config.get_config('test'))
    self.assertEqual(
        fincat.pi0(witness.category), oracles.mixed_coend(g, h))

  def test_induce_from_itself(self):
    witness = bicoend.bicoend(random_instances.group_action_instance(),
                              config.get_config('test'))
    h, _ = bicoend.induce_from(witness, witness.extranat)
    self.assertEqual(h, fincat.identity_fun(witness.category))

  def test_induce_between_identities(self):
    witness = bicoend.bicoend(random_instances.group_action_instance(),
                              config.get_config('test'))
    one = fincat.identity_fun(witness.category)
    cells = {
        a: fincat.identity_nat(witness.component(a))
        for a in range(witness.coherence.shape.num_objects)
    }
    self.assertTrue(
        fincat.is_identity_nat(
            bicoend.induce_between(witness, one, one, cells)))

  def test_candidate_through_an_equivalence(self):
    p = random_instances.group_action_instance()
    witness = bicoend.bicoend(p, config.get_config('test'))
    other = solution.compute_codescent(witness.coherence, 4000, 2000, seed=3)
    j = bicoend.to_extrapseudonat(witness.coherence, other)
    h, _ = bicoend.induce_from(witness, j)
    self.assertEqual(h.cod, other.category)


if __name__ == '__main__':
  absltest.main()
