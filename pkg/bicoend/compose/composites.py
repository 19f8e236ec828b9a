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
"""Composites of pseudonatural and extrapseudonatural transformations.

  stalactite:  F ⇒ G ⇏ x     gives F ⇏ x
  stalagmite:  x ⇏ G ⇒ H     gives x ⇏ H
  yank:        F ⇏ G ⇏ H through a three-variable G, gives F ⇒ H

Every result is re-checked before it is returned; a failing check raises
CheckFailed.
"""

from typing import Mapping, Optional

from absl import logging

from bicoend.cat import fincat
from bicoend.extra import extranat
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import pseudonat
from bicoend.pseudo import twocat
from bicoend.utils import errors


def _lift_nat(beta: pseudonat.PseudoNat) -> pseudonat.PseudoNat:
  if len(beta.dom.factor_list) == 3:
    return beta
  return pseudonat.add_parameter_pseudonat(beta, twocat.terminal_2cat())


def stalactite(beta: pseudonat.PseudoNat,
               gamma: extranat.ExtraPseudoNat,
               name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """γ∘β for β: F ⇒ G on Par × A^op × A and γ: G ⇏ H with H constant in C.

  Args:
    beta: The pseudonatural transformation; a two-factor β gets a terminal
      parameter.
    gamma: The extrapseudonatural transformation out of G.
    name: Name of the result.

  Returns:
    δ: F ⇏ H with δ_a = γ_a∘β_aa, which has passed its checker.

  Raises:
    BoundaryMismatch: if β does not end where γ starts, or γ's covariable
      is not terminal.
    CheckFailed: if the composite fails its checker.
  """
  beta = _lift_nat(beta)
  if not beta.target == gamma.source:
    raise errors.BoundaryMismatch(f'{gamma!r} does not start at the target '
                                  f'of {beta!r}')
  if gamma.covariable.num_objects != 1 or gamma.covariable.num_one_cells != 1:
    raise errors.BoundaryMismatch(f'{gamma!r} is not into a constant')
  f_ = beta.source
  h_ = gamma.target
  par, a_shape = gamma.parameter, gamma.variable
  au = a_shape.underlying
  families = {}
  for a in range(a_shape.num_objects):
    families[(a, 0)] = pseudonat.compose_pseudonat(
        gamma.families[(a, 0)], pseudonat.fix_pseudonat(beta, {1: a, 2: a}))
  left, right = {}, {}
  for p in range(par.num_objects):
    one_p = par.identity(p)
    for f in range(a_shape.num_one_cells):
      a, a2 = int(au.src[f]), int(au.tgt[f])
      left[(p, f, 0)] = fincat.vchain(
          fincat.hwhisker_left(gamma.comp(p, a, 0),
                               beta.cells[f_.one_cell(one_p, f,
                                                      a_shape.identity(a))]),
          fincat.hwhisker_right(
              gamma.left[(p, f, 0)],
              beta.comps[f_.dom.pack('object', (p, a2, a))]),
          fincat.hwhisker_left(
              gamma.comp(p, a2, 0),
              fincat.inverse_nat(beta.cells[f_.one_cell(
                  one_p, a_shape.identity(a2), f)])))
    for a in range(a_shape.num_objects):
      comp = fincat.compose_fun(gamma.comp(p, a, 0),
                                beta.comps[f_.dom.pack('object', (p, a, a))])
      right[(p, a, 0)] = fincat.identity_nat(
          fincat.compose_fun(h_.fun(one_p, 0, 0), comp))
  result = extranat.ExtraPseudoNat(name or f'{gamma.name}.{beta.name}', f_,
                                   h_, families, left, right)
  extranat.check_extrapseudonat(result).raise_if_failed(
      f'stalactite {result.name}')
  logging.vlog(1, 'stalactite %s over %d objects', result.name,
               a_shape.num_objects)
  return result


def stalagmite(beta: extranat.ExtraPseudoNat,
               gamma: pseudonat.PseudoNat,
               name: Optional[str] = None) -> extranat.ExtraPseudoNat:
  """γ∘β for β: F ⇏ G with F constant in B and γ: G ⇒ H; dual of stalactite."""
  gamma = _lift_nat(gamma)
  if not beta.target == gamma.source:
    raise errors.BoundaryMismatch(f'{gamma!r} does not start at the target '
                                  f'of {beta!r}')
  if beta.variable.num_objects != 1 or beta.variable.num_one_cells != 1:
    raise errors.BoundaryMismatch(f'{beta!r} is not out of a constant')
  f_ = beta.source
  h_ = gamma.target
  par, c_shape = beta.parameter, beta.covariable
  cu = c_shape.underlying
  families = {}
  for c in range(c_shape.num_objects):
    families[(0, c)] = pseudonat.compose_pseudonat(
        pseudonat.fix_pseudonat(gamma, {1: c, 2: c}), beta.families[(0, c)])
  left, right = {}, {}
  for p in range(par.num_objects):
    one_p = par.identity(p)
    for h in range(c_shape.num_one_cells):
      c, c2 = int(cu.src[h]), int(cu.tgt[h])
      right[(p, 0, h)] = fincat.vchain(
          fincat.hwhisker_right(
              fincat.inverse_nat(gamma.cells[h_.one_cell(
                  one_p, h, c_shape.identity(c2))]), beta.comp(p, 0, c2)),
          fincat.hwhisker_left(gamma.comps[h_.dom.pack('object', (p, c, c2))],
                               beta.right[(p, 0, h)]),
          fincat.hwhisker_right(
              gamma.cells[h_.one_cell(one_p, c_shape.identity(c), h)],
              beta.comp(p, 0, c)))
    for c in range(c_shape.num_objects):
      comp = fincat.compose_fun(gamma.comps[h_.dom.pack('object', (p, c, c))],
                                beta.comp(p, 0, c))
      left[(p, 0, c)] = fincat.identity_nat(
          fincat.compose_fun(comp, f_.fun(one_p, 0, 0)))
  result = extranat.ExtraPseudoNat(name or f'{gamma.name}.{beta.name}', f_,
                                   h_, families, left, right)
  extranat.check_extrapseudonat(result).raise_if_failed(
      f'stalagmite {result.name}')
  return result


def row_target(g: pseudofunctor.PseudoFun,
               b: int) -> pseudofunctor.PseudoFun:
  """(y, x) ↦ G(x, y, b) on 1 × A^op × A for G on A × A^op × A."""
  fixed = pseudofunctor.fix_arguments(g, {2: b})
  return pseudofunctor.regroup(
      pseudofunctor.add_parameter(fixed, twocat.terminal_2cat()), (0, 2, 1),
      f'{g.name}(-,-,{g.dom.factor_list[2].objects[b]})')


def row_source(g: pseudofunctor.PseudoFun,
               a: int) -> pseudofunctor.PseudoFun:
  """(y, z) ↦ G(a, y, z) on 1 × A^op × A."""
  return pseudofunctor.add_parameter(
      pseudofunctor.fix_arguments(g, {0: a}), twocat.terminal_2cat(),
      f'{g.name}({g.dom.factor_list[0].objects[a]},-,-)')


def yank(beta_rows: Mapping[int, extranat.ExtraPseudoNat],
         beta_cols: Mapping[int, pseudonat.PseudoNat],
         gamma_rows: Mapping[int, extranat.ExtraPseudoNat],
         gamma_cols: Mapping[int, pseudonat.PseudoNat],
         name: Optional[str] = None) -> pseudonat.PseudoNat:
  """The pseudonatural F ⇒ H through G on A × A^op × A.

  Args:
    beta_rows: For each b, F(b) ⇏ G(-, -, b) as out of a constant, with
      target row_target(G, b).
    beta_cols: For each a, F ⇒ G(a, a, -).
    gamma_rows: For each a, G(a, -, -) ⇏ H(a) into a constant, with source
      row_source(G, a).
    gamma_cols: For each b, G(-, b, b) ⇒ H.
    name: Name of the result.

  Returns:
    δ: F ⇒ H with δ_a = γ_aa∘β_aa, which has passed its checker.

  Raises:
    AgreementFailure: if the row and column families disagree on a shared
      component.
    CheckFailed: if δ fails its checker.
  """
  f_ = beta_cols[0].source
  h_ = gamma_cols[0].target
  shape = f_.dom
  u = shape.underlying
  for a in range(shape.num_objects):
    for b in range(shape.num_objects):
      if not beta_cols[a].comps[b] == beta_rows[b].comp(0, 0, a):
        raise errors.AgreementFailure(
            f'β components disagree at ({shape.objects[a]}, '
            f'{shape.objects[b]})')
      if not gamma_rows[a].comp(0, b, 0) == gamma_cols[b].comps[a]:
        raise errors.AgreementFailure(
            f'γ components disagree at ({shape.objects[a]}, '
            f'{shape.objects[b]})')
  comps = tuple(
      fincat.compose_fun(gamma_cols[a].comps[a], beta_cols[a].comps[a])
      for a in range(shape.num_objects))
  cells = []
  for f in range(shape.num_one_cells):
    a, b = int(u.src[f]), int(u.tgt[f])
    cells.append(
        fincat.vchain(
            fincat.hwhisker_left(gamma_cols[b].comps[b],
                                 beta_cols[b].cells[f]),
            fincat.hwhisker_right(
                fincat.inverse_nat(gamma_rows[b].left[(0, f, 0)]),
                beta_cols[b].comps[a]),
            fincat.hwhisker_left(gamma_cols[a].comps[b],
                                 beta_rows[a].right[(0, 0, f)]),
            fincat.hwhisker_right(gamma_cols[a].cells[f],
                                  beta_cols[a].comps[a])))
  result = pseudonat.PseudoNat(name or f'yank({f_.name},{h_.name})', f_, h_,
                               comps, tuple(cells))
  pseudonat.check_pseudonat(result).raise_if_failed(f'yank {result.name}')
  return result
