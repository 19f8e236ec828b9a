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
"""Tests for the coyoneda command."""

import json

from absl import flags
from absl import logging
from absl.testing import absltest
from absl.testing import flagsaver
from absl.testing import parameterized

from bicoend.cat import fincat
from bicoend.commands import coyoneda
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import constants
from bicoend.utils import test_utils

FLAGS = flags.FLAGS


def setUpModule():
  logging.set_verbosity(logging.FATAL)


def _run(name, **flag_values):
  output = test_utils.test_tmpfile(f'coyoneda_{name}.json')
  FLAGS.input = [test_utils.bicoend_testdata(name)]
  FLAGS.output = output
  FLAGS.profile = 'test'
  for key, value in flag_values.items():
    setattr(FLAGS, key, value)
  code = coyoneda.main(['coyoneda'])
  with open(output) as f:
    return code, json.loads(f.read())


class CoyonedaCommandTest(parameterized.TestCase):

  @flagsaver.flagsaver
  def test_walking_arrow_representable(self):
    code, payload = _run('walking_arrow.bicoend', pseudofunctor='F')
    self.assertEqual(code, 0)
    self.assertEqual(payload['schema'], constants.COYONEDA_SCHEMA)
    self.assertEqual(
        {b: v['pi0'] for b, v in payload['values'].items()}, {
            'a': 1,
            'b': 1
        })
    axioms = {e['axiom'] for e in payload['report']['entries']}
    self.assertEqual(axioms, {'pi0', 'quotient'})
    self.assertTrue(payload['report']['passed'])

  @flagsaver.flagsaver
  def test_explicit_shape(self):
    code, payload = _run('walking_arrow.bicoend', pseudofunctor='F',
                         shape='A')
    self.assertEqual(code, 0)
    self.assertEqual(payload['shape'], 'A')

  @flagsaver.flagsaver
  def test_terminal_shape(self):
    code, payload = _run('terminal.bicoend', pseudofunctor='T')
    self.assertEqual(code, 0)
    self.assertEqual(payload['values']['*']['pi0'], 3)
    self.assertEqual(payload['values']['*']['value_pi0'], 3)

  @flagsaver.flagsaver
  def test_transformation_and_modification(self):
    code, payload = _run('pseudonats.bicoend', modification='M')
    self.assertEqual(code, 0)
    self.assertEqual(payload['source'], 'K')
    self.assertEqual(payload['transformation'], 'I(Twist)')
    self.assertEqual(payload['modification'], 'I(M)')
    axioms = [e['axiom'] for e in payload['report']['entries']]
    self.assertNotIn('quotient', axioms)
    self.assertIn('modification', axioms)

  @flagsaver.flagsaver
  def test_transformation_from_another_pseudofunctor(self):
    code, payload = _run('pseudonats.bicoend', transformation='One',
                         pseudofunctor='Kc')
    self.assertEqual(code, 2)
    self.assertEqual(payload['error']['type'], 'BoundaryError')

  @flagsaver.flagsaver
  def test_not_realizable(self):
    code, payload = _run('invalid_free_endomorphism.bicoend')
    self.assertEqual(code, 3)
    self.assertIn('N', payload['error']['message'])


class DiscreteValuesTest(absltest.TestCase):

  def test_non_discrete_value(self):
    z2 = fincat.cyclic_group_cat(2)
    a = twocat.terminal_2cat()
    f = pseudofunctor.constant_pseudofunctor(z2, twocat.opposite_2cat(a))
    self.assertIsNone(coyoneda.discrete_values(f, a))

  def test_discrete_value(self):
    c = fincat.discrete_cat('D', ['x', 'y'])
    a = twocat.terminal_2cat()
    f = pseudofunctor.constant_pseudofunctor(c, twocat.opposite_2cat(a))
    values = coyoneda.discrete_values(f, a)
    self.assertEqual(values.sizes, (2,))
    self.assertTrue(values.contravariant)


if __name__ == '__main__':
  absltest.main()
