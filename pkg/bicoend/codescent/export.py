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
"""DOT and JSON renderings of codescent objects."""

import json
from typing import Any, Dict, List

from bicoend.codescent import coherence
from bicoend.codescent import solution as solution_lib
from bicoend.utils import constants

_NODE_ATTR = 'shape=ellipse, fontname="Courier New"'


def _quote(text: str) -> str:
  return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(solution: solution_lib.CodescentSolution) -> str:
  """The generating graph of X: one node per object, one edge per generator.

  Edges of χ generators are dashed and those of χ⁻¹ dotted; the output is
  stable for a given solution.
  """
  category = solution.category
  cd = solution.coherence
  out = [f'digraph {_quote(category.name)} {{']
  for name in category.objects:
    out.append(f'  {_quote(name)} [{_NODE_ATTR}];')
  x1 = cd.x1.category
  for m in range(x1.num_morphisms):
    if x1.is_identity(m):
      continue
    out.append(f'  {_quote(x1.objects[x1.src[m]])} -> '
               f'{_quote(x1.objects[x1.tgt[m]])} '
               f'[label={_quote(x1.morphisms[m])}];')
  for z in range(cd.x2.category.num_objects):
    u, w = x1.objects[cd.u.obj[z]], x1.objects[cd.w.obj[z]]
    out.append(f'  {_quote(u)} -> {_quote(w)} '
               f'[label={_quote(solution_lib.chi_name(cd, z))}, '
               'style=dashed];')
    out.append(f'  {_quote(w)} -> {_quote(u)} '
               f'[label={_quote(solution_lib.chi_inverse_name(cd, z))}, '
               'style=dotted];')
  out.append('}')
  return '\n'.join(out) + '\n'


def coherence_to_dict(cd: coherence.CoherenceData) -> Dict[str, Any]:
  result = cd.describe()
  result['cells'] = {
      name: getattr(cd, name).describe()['components']
      for name in ('delta', 'gamma', 'kappa', 'lam', 'rho')
  }
  return result


def solution_to_dict(
    solution: solution_lib.CodescentSolution) -> Dict[str, Any]:
  result = solution.describe()
  result['relations'] = [_relation(r) for r in solution.relations]
  return result


def _relation(relation: solution_lib.Relation) -> Dict[str, List[str]]:
  (_, left), (_, right) = relation
  return {'lhs': list(left), 'rhs': list(right)}


def to_json(payload: Dict[str, Any]) -> str:
  return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def components_to_dict(cd: coherence.CoherenceData) -> Dict[str, Any]:
  """π0 of the codescent object, from the presentation alone."""
  x1 = cd.x1.category
  components = solution_lib.codescent_components(cd)
  return {
      'schema': constants.SOLUTION_SCHEMA,
      'source': cd.name,
      'pi0': len(components),
      'components': [[x1.objects[x] for x in c] for c in components],
  }
