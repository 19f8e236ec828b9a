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
"""Tests for fubini."""

import itertools
import json

from absl import logging
from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.codescent import bicoend as bicoend_lib
from bicoend.extra import extranat
from bicoend.extra import lemmas
from bicoend.fubini import fubini
from bicoend.utils import config
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import oracles
from bicoend.utils import random_instances
from bicoend.utils import reports

_ARROWS = {
    'unit': ((1, 1), (0,), (1, 1), (0,)),
    'star': ((1, 1), (0,), (2, 1), (0, 0)),
    'parallel': ((1, 1), (0,), (2, 2), (0, 1)),
}


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _arrow(name):
  g_sizes, g_image, h_sizes, h_image = _ARROWS[name]
  g = random_instances.walking_arrow_set_functor(g_sizes, g_image,
                                                 contravariant=True)
  h = random_instances.walking_arrow_set_functor(h_sizes, h_image)
  return random_instances.mixed_product(g, h, name), oracles.mixed_coend(g, h)


def _seeded_instances():
  """Coupled translation actions and separable random products."""
  instances = []
  for bits in itertools.product((0, 1), repeat=4):
    label = ''.join(str(b) for b in bits)
    instances.append((random_instances.translation_instance(bits, 1,
                                                            f'T{label}'),
                      oracles.translation_coend(bits, 1)))
  rng = np.random.default_rng(0)
  for i in range(4):
    vectors = [int(v) for v in rng.integers(0, 4, 4)]
    instances.append((random_instances.translation_instance(vectors, 2,
                                                            f'U{i}'),
                      oracles.translation_coend(vectors, 2)))
  for seed in range(6):
    l, g, h = random_instances.random_mixed_instance(seed)
    r, g2, h2 = random_instances.random_mixed_instance(50 + seed)
    instances.append((random_instances.separable_instance(l, r, f'S{seed}'),
                      oracles.mixed_coend(g, h) * oracles.mixed_coend(g2, h2)))
  return instances


def _twist(nat: fincat.Nat) -> fincat.Nat:
  """Replaces every component with another morphism between its ends."""
  k = nat.target.cod
  for x, m in enumerate(nat.comps):
    others = np.flatnonzero((k.src == k.src[m]) & (k.tgt == k.tgt[m]) &
                            (np.arange(k.num_morphisms) != m))
    if others.size:
      nat = random_instances.mutate_nat(nat, x, int(others[0]))
  return nat


class FubiniTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.params = config.get_config('test')

  @parameterized.named_parameters(
      ('unit_star', 'unit', 'star'),
      ('star_parallel', 'star', 'parallel'),
      ('parallel_unit', 'parallel', 'unit'),
      ('star_star', 'star', 'star'),
  )
  def test_discrete_instances_match_the_product_coend(self, left, right):
    l, l_count = _arrow(left)
    r, r_count = _arrow(right)
    bundle = fubini.fubini_equivalence(
        random_instances.separable_instance(l, r), self.params)
    self.assertTrue(bundle.report.passed, bundle.report.summary())
    counts = fubini.pi0_counts(bundle)
    self.assertEqual(counts['joint'], l_count * r_count)
    self.assertEqual(counts['iterated'], l_count * r_count)

  def test_group_action_in_both_variables(self):
    group = random_instances.group_action_instance()
    bundle = fubini.fubini_equivalence(
        random_instances.separable_instance(group, group), self.params)
    self.assertTrue(
        equivalence.verify_adjoint_equivalence(bundle.witness).passed)
    self.assertTrue(fincat.is_invertible_nat(bundle.kappa))
    self.assertTrue(fincat.is_invertible_nat(bundle.lam))
    self.assertEqual(bundle.witness.forward.dom, bundle.joint)
    self.assertEqual(bundle.witness.forward.cod, bundle.iterated)

  @parameterized.named_parameters(
      ('crossed', (0, 1, 1, 0), 1),
      ('all_odd', (1, 1, 1, 1), 2),
  )
  def test_coupled_translation(self, bits, expected):
    bundle = fubini.fubini_equivalence(
        random_instances.translation_instance(bits, 1),
        config.get_config('default'))
    self.assertTrue(bundle.report.passed, bundle.report.summary())
    self.assertEqual(fubini.pi0_counts(bundle)['joint'], expected)
    self.assertEqual(fubini.pi0_counts(bundle)['iterated'], expected)

  def test_seeded_instances_match_the_coend(self):
    params = config.get_config('default')
    decided = 0
    for p, expected in _seeded_instances():
      try:
        bundle = fubini.fubini_equivalence(p, params)
      except errors.BudgetExhausted:
        continue
      decided += 1
      self.assertTrue(bundle.report.passed, p.name)
      counts = fubini.pi0_counts(bundle)
      self.assertEqual(counts['joint'], expected, p.name)
      self.assertEqual(counts['iterated'], expected, p.name)
    self.assertGreaterEqual(decided, 20)

  def test_terminal_first_variable(self):
    c = fincat.cyclic_group_cat(2)
    r, r_count = _arrow('star')
    p = random_instances.separable_instance(
        random_instances.constant_instance(c), r)
    bundle = fubini.fubini_equivalence(p, self.params)
    self.assertLen(bundle.sigma.components, 1)
    self.assertEqual(fincat.pi0(bundle.iterated), r_count)
    self.assertIsNotNone(
        equivalence.find_equivalence(bundle.joint, bundle.iterated))

  def test_phi_passes_the_full_suite(self):
    l, _ = _arrow('star')
    r, _ = _arrow('parallel')
    stages = fubini.compute_stages(
        random_instances.separable_instance(l, r), self.params)
    parts = fubini.build_sigma(stages, reports.Report('sigma'))
    report = extranat.check_extrapseudonat(parts.phi,
                                           use_constant_shortcut=False)
    self.assertTrue(report.passed, report.summary())

  def test_rejects_a_two_factor_shape(self):
    with self.assertRaises(errors.BoundaryMismatch):
      fubini.fubini_equivalence(random_instances.group_action_instance(),
                                self.params)

  def test_reports_which_object_exhausted_the_budget(self):
    self.params.budget = 1
    self.params.enumeration_limit = 1
    group = random_instances.group_action_instance()
    with self.assertRaises(errors.BudgetExhausted) as raised:
      fubini.fubini_equivalence(
          random_instances.separable_instance(group, group), self.params)
    self.assertStartsWith(raised.exception.subject, 'the joint bicoend')


class FublemmaTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    unit, _ = _arrow('unit')
    self.p = random_instances.separable_instance(
        random_instances.group_action_instance(), unit)
    self.stages = fubini.compute_stages(self.p, config.get_config('test'))

  def test_passes(self):
    report = fubini.check_fublemma(self.stages)
    self.assertTrue(report.passed, report.summary())

  def test_twisted_column_cell_fails_at_its_pair(self):
    rows, cols = fubini.rows_and_columns(self.stages)
    a_shape, b_shape = self.stages.a_shape, self.stages.b_shape
    s, g = 1, 1
    self.assertEqual(int(b_shape.underlying.src[g]), 0)
    cols[0] = extranat.with_cells(
        cols[0], left={(0, s, 0): _twist(cols[0].left[(0, s, 0)])})
    report = lemmas.compatibility_report(self.stages.joint_form, rows, cols)
    self.assertFalse(report.passed)
    self.assertIn(f'{a_shape.one_cells[s]},{b_shape.one_cells[g]}',
                  [entry.instance for entry in report.failures()])


class InterchangeTest(absltest.TestCase):

  def test_both_nesting_orders(self):
    l, l_count = _arrow('star')
    group = random_instances.group_action_instance()
    result = fubini.interchange(
        random_instances.separable_instance(group, l),
        config.get_config('test'))
    self.assertTrue(result.report.passed, result.report.summary())
    self.assertEqual(result.witness.forward.dom, result.first.iterated)
    self.assertEqual(result.witness.forward.cod, result.second.iterated)
    self.assertEqual(
        fincat.pi0(result.first.iterated), fincat.pi0(result.second.iterated))
    self.assertEqual(fincat.pi0(result.second.iterated), 2 * l_count)

  def test_symmetric_instance(self):
    group = random_instances.group_action_instance()
    result = fubini.interchange(
        random_instances.separable_instance(group, group),
        config.get_config('test'))
    first, second = result.first.iterated, result.second.iterated
    self.assertEqual(first.num_objects, second.num_objects)
    self.assertEqual(first.num_morphisms, second.num_morphisms)

  def test_seeded_instances(self):
    params = config.get_config('default')
    decided = 0
    for p, expected in _seeded_instances():
      try:
        result = fubini.interchange(p, params)
      except errors.BudgetExhausted:
        continue
      decided += 1
      self.assertTrue(result.report.passed, p.name)
      self.assertEqual(fincat.pi0(result.first.iterated), expected, p.name)
      self.assertEqual(fincat.pi0(result.second.iterated), expected, p.name)
    self.assertGreaterEqual(decided, 20)

  def test_swap_arguments_twice_is_the_identity(self):
    l, _ = _arrow('star')
    p = random_instances.separable_instance(
        random_instances.group_action_instance(), l)
    again = fubini.swap_arguments(fubini.swap_arguments(p))
    self.assertEqual(again, p)


class RecordInducedTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.witness = bicoend_lib.bicoend(
        random_instances.group_action_instance(), config.get_config('test'))
    self.nat = fincat.identity_nat(
        fincat.identity_fun(self.witness.category))
    self.gamma = fincat.identity_nat(self.witness.component(0))

  def test_restriction_matches(self):
    report = reports.Report('induced')
    fubini._record_induced(report, 'one', self.witness, self.nat,
                           {0: self.gamma})
    self.assertTrue(report.passed)

  def test_restriction_differs(self):
    report = reports.Report('induced')
    fubini._record_induced(report, 'one', self.witness, self.nat,
                           {0: _twist(self.gamma)})
    self.assertEqual(report.failed_axioms(), ['EB2'])


class ReportTest(absltest.TestCase):

  def test_fubini_report(self):
    l, _ = _arrow('unit')
    bundle = fubini.fubini_equivalence(
        random_instances.separable_instance(l, l), config.get_config('test'))
    payload = json.loads(json.dumps(fubini.to_dict(bundle)))
    self.assertEqual(payload['schema'], constants.FUBINI_SCHEMA)
    self.assertEqual(payload['joint']['pi0'], 1)
    self.assertEqual(payload['iterated']['pi0'], 1)
    self.assertLen(payload['inner'], 4)
    axioms = {entry['axiom'] for entry in payload['report']['entries']}
    self.assertContainsSubset({'EB2', 'compatibility', 'triangle'}, axioms)


if __name__ == '__main__':
  absltest.main()
