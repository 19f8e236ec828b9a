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
"""Common constants shared across the bicoend codebase."""
import enum

# bicoend Version
__version__ = '0.1.0'

# Serialization schemas. Bump the suffix whenever a field changes meaning.
REPORT_SCHEMA = 'bicoend.report/1'
SOLUTION_SCHEMA = 'bicoend.solution/1'
COHERENCE_SCHEMA = 'bicoend.coherence/1'
FUBINI_SCHEMA = 'bicoend.fubini/1'
COYONEDA_SCHEMA = 'bicoend.coyoneda/1'

# Budgets.
BUDGET_ENV_VAR = 'BICOEND_BUDGET'
DEFAULT_BUDGET = 20000
DEFAULT_ENUMERATION_LIMIT = 5000
DEFAULT_EQUIVALENCE_BUDGET = 100000

# Naming.
TERMINAL_OBJECT = '*'
TERMINAL_NAME = '1'
TAG_SEPARATOR = ':'
WORD_SEPARATOR = '.'
CHI_PREFIX = 'chi'
CHI_INVERSE_PREFIX = 'chi^-1'

DSL_SUFFIX = '.bicoend'


@enum.unique
class ExitCode(int, enum.Enum):
  """Process exit codes shared by every subcommand."""
  SUCCESS = 0
  CHECK_FAILED = 1
  PARSE_ERROR = 2
  BUDGET_EXHAUSTED = 3


@enum.unique
class Provenance(enum.Enum):
  """Where a codescent solution came from."""
  COMPUTED = 'computed'
  USER_SUPPLIED = 'user-supplied'


@enum.unique
class OutputFormat(enum.Enum):
  JSON = 'json'
  DOT = 'dot'
  TEXT = 'text'
