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
"""Axiom verdicts collected by the checkers."""

import dataclasses
import json
from typing import Any, Dict, Iterable, List, Optional

from bicoend.utils import constants
from bicoend.utils import errors


@dataclasses.dataclass(frozen=True)
class Entry:
  """One verdict for one instance of one axiom.

  Attributes:
    axiom: Axiom identifier, e.g. 'associativity' or 'EP3'.
    instance: Human readable key of the instance checked.
    passed: Whether both sides agreed.
    counterexample: Optional JSON-able payload that replays the failure.
  """
  axiom: str
  instance: str
  passed: bool
  counterexample: Optional[Dict[str, Any]] = None

  def to_dict(self) -> Dict[str, Any]:
    out = {
        'axiom': self.axiom,
        'instance': self.instance,
        'verdict': 'pass' if self.passed else 'fail',
    }
    if self.counterexample is not None:
      out['counterexample'] = self.counterexample
    return out


@dataclasses.dataclass
class Report:
  """Ordered list of verdicts about one subject."""
  subject: str
  entries: List[Entry] = dataclasses.field(default_factory=list)

  def record(self,
             axiom: str,
             instance: str,
             passed: bool,
             counterexample: Optional[Dict[str, Any]] = None) -> bool:
    self.entries.append(
        Entry(axiom, instance, bool(passed),
              None if passed else counterexample))
    return bool(passed)

  def expect_equal(self, axiom: str, instance: str, lhs: Any,
                   rhs: Any) -> bool:
    """Records whether two evaluated cells agree.

    Both sides are compared with `==` and, on failure, serialized through
    their `describe()` method when they have one.

    Args:
      axiom: Axiom identifier.
      instance: Instance key.
      lhs: Left hand side of the equation.
      rhs: Right hand side of the equation.

    Returns:
      Whether the two sides agreed.
    """
    passed = lhs == rhs
    counterexample = None
    if not passed:
      counterexample = {'lhs': _describe(lhs), 'rhs': _describe(rhs)}
      first = _first_difference(lhs, rhs)
      if first is not None:
        counterexample['first_difference'] = first
    return self.record(axiom, instance, passed, counterexample)

  def extend(self, other: 'Report', prefix: str = '') -> 'Report':
    for entry in other.entries:
      self.entries.append(
          dataclasses.replace(entry, instance=prefix + entry.instance))
    return self

  @property
  def passed(self) -> bool:
    return all(entry.passed for entry in self.entries)

  def failures(self) -> List[Entry]:
    return [entry for entry in self.entries if not entry.passed]

  def failed_axioms(self) -> List[str]:
    seen = []
    for entry in self.failures():
      if entry.axiom not in seen:
        seen.append(entry.axiom)
    return seen

  def counts(self) -> Dict[str, int]:
    failed = len(self.failures())
    return {
        'total': len(self.entries),
        'passed': len(self.entries) - failed,
        'failed': failed
    }

  def summary(self) -> str:
    counts = self.counts()
    verdict = 'PASS' if self.passed else 'FAIL'
    lines = [
        f'{verdict} {self.subject}: {counts["passed"]}/{counts["total"]} '
        'instances hold'
    ]
    for entry in self.failures():
      lines.append(f'  {entry.axiom} failed at {entry.instance}')
    return '\n'.join(lines)

  def to_dict(self) -> Dict[str, Any]:
    return {
        'schema': constants.REPORT_SCHEMA,
        'subject': self.subject,
        'passed': self.passed,
        'counts': self.counts(),
        'entries': [entry.to_dict() for entry in self.entries],
    }

  def to_json(self) -> str:
    return json.dumps(self.to_dict(), sort_keys=True, indent=2)

  def raise_if_failed(self, message: str) -> 'Report':
    if not self.passed:
      first = self.failures()[0]
      raise errors.CheckFailed(
          f'{message}: {first.axiom} failed at {first.instance}', self)
    return self


def merge(subject: str, reports: Iterable[Report]) -> Report:
  merged = Report(subject)
  for report in reports:
    merged.extend(report, prefix=f'{report.subject}/')
  return merged


def _describe(value: Any) -> Any:
  if hasattr(value, 'describe'):
    return value.describe()
  if hasattr(value, 'tolist'):
    return value.tolist()
  return repr(value)


def _first_difference(lhs: Any, rhs: Any) -> Optional[Dict[str, Any]]:
  """Locates the first differing component of two parallel Nats."""
  if not (hasattr(lhs, 'comps') and hasattr(rhs, 'comps')):
    return None
  if len(lhs.comps) != len(rhs.comps):
    return None
  for index, (left, right) in enumerate(zip(lhs.comps, rhs.comps)):
    if left != right:
      dom = lhs.source.dom
      return {
          'object': dom.objects[index],
          'lhs': lhs.source.cod.morphisms[left],
          'rhs': rhs.source.cod.morphisms[right],
      }
  return None
