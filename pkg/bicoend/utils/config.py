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
"""Budget and search profiles."""

import ml_collections

from bicoend.utils import constants


def _set_base_params(params):
  """Updates given params with the default budgets."""
  params.budget = constants.DEFAULT_BUDGET
  params.enumeration_limit = constants.DEFAULT_ENUMERATION_LIMIT
  params.equivalence_budget = constants.DEFAULT_EQUIVALENCE_BUDGET
  # 0 keeps declaration order when interning generators.
  params.seed = 0
  params.use_constant_shortcut = True


def _set_test_params(params):
  """Small budgets so that nonterminating inputs fail fast in tests."""
  params.budget = 4000
  params.enumeration_limit = 2000
  params.equivalence_budget = 20000


def _set_large_params(params):
  params.budget = 200000
  params.enumeration_limit = 50000
  params.equivalence_budget = 1000000


def get_config(config_name: str = 'default') -> ml_collections.ConfigDict:
  """Returns the named budget profile."""
  params = ml_collections.ConfigDict()
  _set_base_params(params)
  if config_name == 'default':
    pass
  elif config_name == 'test':
    _set_test_params(params)
  elif config_name == 'large':
    _set_large_params(params)
  else:
    raise ValueError(f'Unknown config name: {config_name}')
  params.profile = config_name
  return params
