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
"""Tests for pseudofunctor."""

import dataclasses

from absl import logging
from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from bicoend.cat import fincat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import errors
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def twisted_z2(twist_pair=(1, 1)) -> pseudofunctor.PseudoFun:
  """Z/2 acting trivially on the category Z/2, with one coherence cell s."""
  z2 = fincat.cyclic_group_cat(2)
  dom = twocat.locally_discrete(z2)
  ident = fincat.identity_fun(z2)
  g, f = twist_pair
  cell = fincat.Nat(fincat.compose_fun(ident, ident), ident,
                    np.asarray([1]))
  return pseudofunctor.extend_strict('Z2', dom, [z2], {1: ident},
                                     phi2={(g, f): cell})


class CheckPseudofunctorTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('hom_walking_two_cell',
       lambda: pseudofunctor.hom_functor(twocat.walking_two_cell())),
      ('hom_group', lambda: pseudofunctor.hom_functor(
          twocat.locally_discrete(fincat.cyclic_group_cat(3)))),
      ('constant', lambda: pseudofunctor.constant_pseudofunctor(
          fincat.walking_arrow(), twocat.walking_two_cell())),
      ('cocycle', twisted_z2),
  )
  def test_valid(self, build):
    report = pseudofunctor.check_pseudofunctor(build())
    self.assertTrue(report.passed, report.summary())

  def test_coherence_at_an_identity_breaks_a_unit_law(self):
    report = pseudofunctor.check_pseudofunctor(twisted_z2((1, 0)))
    self.assertFalse(report.passed)
    self.assertIn('right_unit', report.failed_axioms())

  def test_underdetermined_strict_data(self):
    dom = twocat.locally_discrete(fincat.walking_arrow())
    with self.assertRaises(errors.MalformedTables):
      pseudofunctor.extend_strict('P', dom, [fincat.terminal_cat()] * 2, {})

  def test_is_constant(self):
    shape = twocat.locally_discrete(fincat.walking_arrow())
    self.assertTrue(
        pseudofunctor.is_constant(
            pseudofunctor.constant_pseudofunctor(fincat.terminal_cat(),
                                                 shape)))
    self.assertFalse(pseudofunctor.is_constant(twisted_z2()))


class MutationTest(absltest.TestCase):
  """Every coherence entry moved off its value is caught."""

  def _mutated(self, seed):
    p = random_instances.random_looped_instance(seed)
    rng = np.random.default_rng(1000 + seed)
    dom = p.dom
    f = int(rng.integers(0, dom.num_one_cells))
    b = int(dom.underlying.tgt[f])
    kind = seed % 3
    if kind == 0:
      phi0 = list(p.phi0)
      phi0[b] = random_instances.perturb_nat(rng, phi0[b])
      return (dataclasses.replace(p, phi0=tuple(phi0)),
              {'phi_boundaries', 'left_unit', 'right_unit'})
    if kind == 1:
      phi2 = dict(p.phi2)
      key = (dom.identity(b), f)
      phi2[key] = random_instances.perturb_nat(rng, phi2[key])
      return (dataclasses.replace(p, phi2=phi2),
              {'phi_boundaries', 'left_unit'})
    cell = list(p.cell)
    a = dom.identity_cell(f)
    cell[a] = random_instances.perturb_nat(rng, cell[a])
    return (dataclasses.replace(p, cell=tuple(cell)),
            {'cells', 'cell_identities'})

  def test_unperturbed_instances_pass(self):
    for seed in range(10):
      p = random_instances.random_looped_instance(seed)
      self.assertTrue(pseudofunctor.check_pseudofunctor(p).passed, seed)

  def test_seeded_mutations_fail(self):
    for seed in range(120):
      mutated, axioms = self._mutated(seed)
      report = pseudofunctor.check_pseudofunctor(mutated)
      self.assertFalse(report.passed, seed)
      self.assertTrue(axioms & set(report.failed_axioms()), seed)


class ReindexTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.a = twocat.walking_two_cell()
    self.hom = pseudofunctor.hom_functor(self.a)

  def test_representable_is_a_fixed_hom(self):
    y = self.a.obj('y')
    rep = pseudofunctor.representable(self.a, y)
    self.assertEqual(rep.dom, twocat.opposite_2cat(self.a))
    self.assertEqual(rep.obj[self.a.obj('x')].objects, ('f', 'g'))
    self.assertEqual(rep, pseudofunctor.fix_arguments(self.hom, {1: y}))

  def test_regroup_identity(self):
    self.assertEqual(pseudofunctor.regroup(self.hom, (0, 1)), self.hom)

  def test_regroup_rejects_a_partial_grouping(self):
    with self.assertRaises(errors.BoundaryMismatch):
      pseudofunctor.regroup(self.hom, (0,))

  def test_parameter_round_trip(self):
    shape = twocat.locally_discrete(fincat.walking_arrow())
    lifted = pseudofunctor.add_parameter(self.hom, shape)
    self.assertLen(lifted.dom.factor_list, 3)
    self.assertTrue(pseudofunctor.check_pseudofunctor(lifted).passed)
    for x in range(shape.num_objects):
      self.assertEqual(pseudofunctor.fix_arguments(lifted, {0: x}), self.hom)

  def test_flatten_a_product_domain(self):
    b = twocat.locally_discrete(fincat.walking_arrow())
    hom = pseudofunctor.hom_functor(twocat.product_2cat(self.a, b))
    flat = pseudofunctor.flatten(hom)
    self.assertLen(flat.dom.factor_list, 4)
    self.assertTrue(pseudofunctor.check_pseudofunctor(flat).passed)
    self.assertIs(pseudofunctor.flatten(flat), flat)

  def test_fix_nothing(self):
    self.assertIs(pseudofunctor.fix_arguments(self.hom, {}), self.hom)

  def test_pointwise_product_with_a_point(self):
    point = pseudofunctor.constant_pseudofunctor(fincat.terminal_cat(),
                                                 self.hom.dom)
    product = pseudofunctor.pointwise_product(self.hom, point)
    self.assertTrue(pseudofunctor.check_pseudofunctor(product).passed)
    for x in range(self.hom.dom.num_objects):
      self.assertEqual(product.obj[x].num_morphisms,
                       self.hom.obj[x].num_morphisms)

  def test_pointwise_product_needs_a_common_domain(self):
    other = pseudofunctor.constant_pseudofunctor(fincat.terminal_cat(),
                                                 self.a)
    with self.assertRaises(errors.BoundaryMismatch):
      pseudofunctor.pointwise_product(self.hom, other)


class CoherenceTest(absltest.TestCase):

  def test_strict_coherence_is_an_identity(self):
    p = pseudofunctor.hom_functor(
        twocat.locally_discrete(fincat.walking_arrow()))
    u = p.dom.underlying
    f = int(np.flatnonzero(~np.isin(np.arange(u.num_morphisms),
                                    u.identity))[0])
    one = p.dom.identity(int(u.src[f]))
    nat = pseudofunctor.coherence_iso(p, [one, f], [f])
    self.assertTrue(fincat.is_identity_nat(nat))

  def test_twisted_composite(self):
    p = twisted_z2()
    nat = pseudofunctor.composite_coherence(p, [1, 1])
    self.assertEqual(nat.comps.tolist(), [1])
    back = pseudofunctor.coherence_iso(p, [1, 1], [0])
    self.assertEqual(back.comps.tolist(), [1])

  def test_path_must_compose(self):
    p = pseudofunctor.hom_functor(
        twocat.locally_discrete(fincat.walking_arrow()))
    u = p.dom.underlying
    f = int(np.flatnonzero(~np.isin(np.arange(u.num_morphisms),
                                    u.identity))[0])
    with self.assertRaises(errors.BoundaryMismatch):
      pseudofunctor.composite_coherence(p, [f, f])


if __name__ == '__main__':
  absltest.main()
