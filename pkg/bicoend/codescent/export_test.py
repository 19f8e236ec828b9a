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
"""Tests for export."""

import json

from absl import logging
from absl.testing import absltest

from bicoend.codescent import coherence
from bicoend.codescent import export
from bicoend.codescent import solution
from bicoend.utils import random_instances


def setUpModule():
  logging.set_verbosity(logging.FATAL)


class ExportTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    self.cd = coherence.coherence_data_of(
        random_instances.group_action_instance())
    self.sol = solution.compute_codescent(self.cd, 4000, 2000)

  def test_dot_is_stable_and_styles_chi(self):
    dot = export.to_dot(self.sol)
    self.assertEqual(dot, export.to_dot(self.sol))
    self.assertTrue(dot.startswith('digraph'))
    self.assertEqual(dot.count('style=dashed'), 4)
    self.assertEqual(dot.count('style=dotted'), 4)

  def test_solution_json(self):
    payload = json.loads(export.to_json(export.solution_to_dict(self.sol)))
    self.assertEqual(payload['provenance'], 'computed')
    self.assertLen(payload['relations'], len(self.sol.relations))

  def test_coherence_json_lists_every_cell(self):
    payload = export.coherence_to_dict(self.cd)
    self.assertSameElements(payload['cells'],
                            ['delta', 'gamma', 'kappa', 'lam', 'rho'])

  def test_components(self):
    payload = export.components_to_dict(self.cd)
    self.assertEqual(payload['pi0'], 2)


if __name__ == '__main__':
  absltest.main()
