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
"""Exception hierarchy for bicoend.

Checkers report failed axioms through `reports.Report` and never raise for
them. The exceptions here signal malformed input, exhausted budgets and
internal consistency alarms.
"""

from typing import Any, Optional


class BicoendError(Exception):
  """Base class for all bicoend errors."""


class MalformedTables(BicoendError, ValueError):
  """Raised when a table references an undeclared identifier."""


class BoundaryMismatch(BicoendError, ValueError):
  """Raised when composing or whiskering cells whose boundaries disagree."""


class NotInvertible(BicoendError, ValueError):
  """Raised when inverting a 2-cell with a non-isomorphism component."""


class BoundaryError(BoundaryMismatch):
  """Raised for an ill-typed word in the DSL."""

  def __init__(self, message: str, line: int = 0, column: int = 0):
    super().__init__(f'{message} (line {line}, column {column})')
    self.line = line
    self.column = column


class DslSyntaxError(BicoendError, SyntaxError):
  """Raised when DSL text cannot be parsed."""

  def __init__(self, message: str, line: int = 0, column: int = 0):
    super().__init__(f'{message} (line {line}, column {column})')
    self.line = line
    self.column = column


class BudgetExhausted(BicoendError, RuntimeError):
  """A bounded search ran out of steps; the outcome is unknown.

  Attributes:
    stage: Which search ran out ('completion', 'enumeration', 'equivalence').
    steps: Number of steps spent before giving up.
    subject: Optional name of the object that failed to realize.
  """

  def __init__(self,
               stage: str,
               steps: int = 0,
               subject: Optional[str] = None):
    self.stage = stage
    self.steps = steps
    self.subject = subject
    super().__init__(self._message())

  def _message(self) -> str:
    message = f'budget exhausted during {self.stage} after {self.steps} steps'
    if self.subject:
      message += f' while realizing {self.subject}'
    return message

  def with_subject(self, subject: str) -> 'BudgetExhausted':
    if self.subject is None:
      self.subject = subject
      self.args = (self._message(),)
    return self


class CheckFailed(BicoendError):
  """A construction proven to be valid failed its own checker."""

  def __init__(self, message: str, report: Any = None):
    super().__init__(message)
    self.report = report


class CompatibilityFailure(BicoendError):
  """A compatibility pasting condition failed at `instance`."""

  def __init__(self, message: str, instance: Any = None):
    super().__init__(message)
    self.instance = instance


class ComponentMismatch(BicoendError):
  """Two families disagree on a shared component."""


class AgreementFailure(BicoendError):
  """Input families of the yanking composite disagree on components."""


class RelationViolation(BicoendError):
  """An induced functor fails to respect a defining relation."""
