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
"""Tests for reports."""

import json

from absl.testing import absltest
import numpy as np

from bicoend.cat import fincat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports


class ReportTest(absltest.TestCase):

  def test_empty_report_passes(self):
    report = reports.Report('nothing')
    self.assertTrue(report.passed)
    self.assertEqual(report.counts(), {'total': 0, 'passed': 0, 'failed': 0})

  def test_failures_keep_order_and_deduplicate_axioms(self):
    report = reports.Report('subject')
    report.record('EP3', 'a', False)
    report.record('EP1', 'b', True)
    report.record('EP3', 'c', False)
    report.record('EP5', 'd', False)
    self.assertEqual(report.failed_axioms(), ['EP3', 'EP5'])
    self.assertEqual([e.instance for e in report.failures()], ['a', 'c', 'd'])
    self.assertEqual(report.counts()['failed'], 3)

  def test_passing_entries_drop_the_counterexample(self):
    report = reports.Report('subject')
    report.record('x', 'i', True, {'lhs': 1})
    self.assertIsNone(report.entries[0].counterexample)

  def test_expect_equal_locates_the_first_difference(self):
    c = fincat.cyclic_group_cat(2)
    ident = fincat.identity_fun(c)
    lhs = fincat.Nat(ident, ident, np.asarray([0]))
    rhs = fincat.Nat(ident, ident, np.asarray([1]))
    report = reports.Report('nats')
    self.assertFalse(report.expect_equal('unit', '*', lhs, rhs))
    difference = report.entries[0].counterexample['first_difference']
    self.assertEqual(difference['object'], c.objects[0])
    self.assertEqual(difference['lhs'], c.morphisms[0])
    self.assertEqual(difference['rhs'], c.morphisms[1])

  def test_to_dict(self):
    report = reports.Report('subject')
    report.expect_equal('associativity', 'f,g,h', 1, 2)
    payload = json.loads(report.to_json())
    self.assertEqual(payload['schema'], constants.REPORT_SCHEMA)
    self.assertFalse(payload['passed'])
    self.assertEqual(payload['entries'][0]['verdict'], 'fail')
    self.assertEqual(payload['entries'][0]['counterexample'], {
        'lhs': '1',
        'rhs': '2'
    })

  def test_merge_prefixes_instances(self):
    first, second = reports.Report('left'), reports.Report('right')
    first.record('a', 'x', True)
    second.record('b', 'y', False)
    merged = reports.merge('both', [first, second])
    self.assertEqual([e.instance for e in merged.entries],
                     ['left/x', 'right/y'])
    self.assertFalse(merged.passed)

  def test_raise_if_failed(self):
    report = reports.Report('subject')
    report.record('EP2', 'f', False)
    with self.assertRaisesRegex(errors.CheckFailed, 'EP2 failed at f'):
      report.raise_if_failed('demo')
    self.assertIn('FAIL subject: 0/1', report.summary())

  def test_raise_if_failed_passes_through(self):
    report = reports.Report('subject')
    report.record('EP2', 'f', True)
    self.assertIs(report.raise_if_failed('demo'), report)


if __name__ == '__main__':
  absltest.main()
