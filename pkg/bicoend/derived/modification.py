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
"""Modifications between parallel pseudonatural transformations."""

import dataclasses
from typing import Any, Tuple

from bicoend.cat import fincat
from bicoend.pseudo import pseudonat
from bicoend.utils import errors
from bicoend.utils import reports


@dataclasses.dataclass(frozen=True, eq=False)
class Modification:
  """Σ: α ⇛ β with a component Σ_a: α_a ⇒ β_a per object."""
  name: str
  source: pseudonat.PseudoNat
  target: pseudonat.PseudoNat
  comps: Tuple[fincat.Nat, ...]

  def __post_init__(self):
    if not (self.source.source == self.target.source and
            self.source.target == self.target.target):
      raise errors.BoundaryMismatch(
          f'{self.name}: {self.source!r} and {self.target!r} are not '
          'parallel')
    if len(self.comps) != self.source.dom.num_objects:
      raise errors.MalformedTables(f'{self.name}: one component per object '
                                   'is required')

  def __eq__(self, other: Any) -> bool:
    if self is other:
      return True
    if not isinstance(other, Modification):
      return NotImplemented
    return (self.comps == other.comps and self.source == other.source and
            self.target == other.target)

  def __hash__(self) -> int:
    return hash(self.comps)


def check_modification(sigma: Modification) -> reports.Report:
  """Component boundaries and β_f·(Σ_b∗F(f)) = (G(f)∗Σ_a)·α_f per 1-cell."""
  report = reports.Report(f'modification {sigma.name}')
  alpha, beta = sigma.source, sigma.target
  dom = alpha.dom
  for x in range(dom.num_objects):
    comp = sigma.comps[x]
    ok = comp.source == alpha.comps[x] and comp.target == beta.comps[x]
    report.record('components', dom.objects[x],
                  ok and fincat.check_nat(comp).passed)
  if not report.passed:
    return report
  u = dom.underlying
  f_, g_ = alpha.source, alpha.target
  for f in range(dom.num_one_cells):
    a, b = int(u.src[f]), int(u.tgt[f])
    lhs = fincat.vcompose_nat(beta.cells[f],
                              fincat.hwhisker_right(sigma.comps[b],
                                                    f_.mor[f]))
    rhs = fincat.vcompose_nat(
        fincat.hwhisker_left(g_.mor[f], sigma.comps[a]), alpha.cells[f])
    report.expect_equal('modification', dom.one_cells[f], lhs, rhs)
  return report


def identity_modification(alpha: pseudonat.PseudoNat) -> Modification:
  return Modification(f'id({alpha.name})', alpha, alpha,
                      tuple(fincat.identity_nat(c) for c in alpha.comps))


def compose_modifications(tau: Modification,
                          sigma: Modification) -> Modification:
  """Vertical composite τ·σ of σ: α ⇛ β and τ: β ⇛ γ."""
  if not sigma.target == tau.source:
    raise errors.BoundaryMismatch(
        f'cannot compose {tau.name} after {sigma.name}')
  return Modification(
      f'{tau.name}.{sigma.name}', sigma.source, tau.target,
      tuple(
          fincat.vcompose_nat(t, s) for t, s in zip(tau.comps, sigma.comps)))
