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
"""Coherence data of a pseudofunctor P: B^op × B → Cat.

The three stages are coproducts of values of P:

  X1 = ⊔_a P(a, a),
  X2 = ⊔_{f: a → b} P(b, a),
  X3 = ⊔_{θ: g·f ⇒ h} P(c, a),

where the last one runs over every 2-cell whose source is the composite of
a composable pair, identities included. Between them sit u, w: X2 → X1,
v: X1 → X2 and p, q, r: X3 → X2, and five invertible cells δ, γ, κ, λ, ρ.
"""

import dataclasses
from typing import Any, Dict, Tuple

from absl import logging

from bicoend.cat import fincat
from bicoend.presentations import unions
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports


@dataclasses.dataclass(frozen=True)
class Triple:
  """Index of a summand of X3: θ: g·f ⇒ h."""
  g: int
  f: int
  theta: int
  h: int


@dataclasses.dataclass(frozen=True, eq=False)
class CoherenceData:
  """The diagram X3 ⇉ X2 ⇄ X1 with its invertible cells.

  Attributes:
    source: The pseudofunctor the data was built from.
    x1: Summands indexed by objects of B.
    x2: Summands indexed by 1-cells of B.
    x3: Summands indexed by `triples`.
    triples: The X3 index, in summand order.
    u: X2 → X1, P(f, 1) on the summand of f.
    w: X2 → X1, P(1, f) on the summand of f.
    v: X1 → X2, the summands of identity 1-cells.
    p: X3 → X2, P(g, 1) into the summand of f.
    q: X3 → X2, the summand of h.
    r: X3 → X2, P(1, f) into the summand of g.
    delta: u∘v ⇒ 1.
    gamma: 1 ⇒ w∘v.
    kappa: u∘p ⇒ u∘q.
    lam: w∘r ⇒ w∘q.
    rho: u∘r ⇒ w∘p.
  """
  source: pseudofunctor.PseudoFun
  x1: unions.TaggedUnion
  x2: unions.TaggedUnion
  x3: unions.TaggedUnion
  triples: Tuple[Triple, ...]
  u: fincat.Fun
  w: fincat.Fun
  v: fincat.Fun
  p: fincat.Fun
  q: fincat.Fun
  r: fincat.Fun
  delta: fincat.Nat
  gamma: fincat.Nat
  kappa: fincat.Nat
  lam: fincat.Nat
  rho: fincat.Nat

  @property
  def shape(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[1]

  @property
  def name(self) -> str:
    return self.source.name

  def describe(self) -> Dict[str, Any]:
    return {
        'schema': constants.COHERENCE_SCHEMA,
        'source': self.source.name,
        'shape': self.shape.name,
        'x1': list(self.x1.tags),
        'x2': list(self.x2.tags),
        'x3': list(self.x3.tags),
        'sizes': {
            'x1': [self.x1.category.num_objects,
                   self.x1.category.num_morphisms],
            'x2': [self.x2.category.num_objects,
                   self.x2.category.num_morphisms],
            'x3': [self.x3.category.num_objects,
                   self.x3.category.num_morphisms],
        },
    }


def as_pair(p: pseudofunctor.PseudoFun) -> pseudofunctor.PseudoFun:
  """P on B^op × B, dropping a terminal parameter if there is one."""
  factors = p.dom.factor_list
  if len(factors) == 3 and factors[0].num_objects == 1 and (
      factors[0].num_one_cells == 1):
    return pseudofunctor.fix_arguments(p, {0: 0}, p.name)
  if len(factors) != 2:
    raise errors.BoundaryMismatch(f'{p!r} is not on a shape B^op × B')
  if not factors[0] == twocat.opposite_2cat(factors[1]):
    raise errors.BoundaryMismatch(
        f'{p!r}: first factor is not the opposite of the second')
  return p


def triple_tag(b: twocat.Fin2Cat, t: Triple) -> str:
  return (f'{b.cells.morphisms[t.theta]}@'
          f'{fincat.join_word([b.one_cells[t.g], b.one_cells[t.f]])}')


def coherence_data_of(p: pseudofunctor.PseudoFun) -> CoherenceData:
  """Builds the coherence data of P summand by summand.

  Args:
    p: A pseudofunctor on B^op × B, or on 1 × B^op × B.

  Returns:
    The CoherenceData; check_coherence_data passes on it for every valid P.
  """
  p = as_pair(p)
  b = p.dom.factor_list[1]
  bu = b.underlying

  def at(x, y):
    return p.at(x, y)

  def fun(k, h):
    return p.fun(k, h)

  def one(x):
    return b.identity(x)

  x1 = unions.disjoint_union(
      f'X1({p.name})', [(b.objects[a], at(a, a)) for a in range(b.num_objects)])
  x2 = unions.disjoint_union(
      f'X2({p.name})', [(b.one_cells[f], at(int(bu.tgt[f]), int(bu.src[f])))
                        for f in range(b.num_one_cells)])
  triples = []
  for g, f in b.composable_pairs():
    gf = b.compose(g, f)
    for theta in range(b.num_cells):
      if b.cell_source(theta) == gf:
        triples.append(Triple(g, f, theta, b.cell_target(theta)))
  x3 = unions.disjoint_union(
      f'X3({p.name})', [(triple_tag(b, t), at(int(bu.tgt[t.g]),
                                              int(bu.src[t.f])))
                        for t in triples])
  i1, j2 = x1.inclusions, x2.inclusions
  compose = fincat.compose_fun

  u = unions.copair(x2, [
      compose(i1[int(bu.src[f])], fun(f, one(int(bu.src[f]))))
      for f in range(b.num_one_cells)
  ])
  w = unions.copair(x2, [
      compose(i1[int(bu.tgt[f])], fun(one(int(bu.tgt[f])), f))
      for f in range(b.num_one_cells)
  ])
  v = unions.copair(x1, [j2[one(a)] for a in range(b.num_objects)])
  p_parts, q_parts, r_parts = [], [], []
  kappa, lam, rho = [], [], []
  for t in triples:
    a, b1, c = int(bu.src[t.f]), int(bu.tgt[t.f]), int(bu.tgt[t.g])
    p_parts.append(compose(j2[t.f], fun(t.g, one(a))))
    q_parts.append(j2[t.h])
    r_parts.append(compose(j2[t.g], fun(one(c), t.f)))
    phi_left = p.phi2[(p.one_cell(t.f, one(a)), p.one_cell(t.g, one(a)))]
    theta_left = p.cell[p.dom.pack(
        'cell', (t.theta, b.identity_cell(one(a))))]
    kappa.append(
        fincat.hwhisker_left(i1[a], fincat.vcompose_nat(theta_left,
                                                        phi_left)))
    phi_right = p.phi2[(p.one_cell(one(c), t.g), p.one_cell(one(c), t.f))]
    theta_right = p.cell[p.dom.pack(
        'cell', (b.identity_cell(one(c)), t.theta))]
    lam.append(
        fincat.hwhisker_left(i1[c], fincat.vcompose_nat(theta_right,
                                                        phi_right)))
    rho.append(
        fincat.hwhisker_left(
            i1[b1],
            pseudofunctor.coherence_iso(
                p, [p.one_cell(one(c), t.f), p.one_cell(t.g, one(b1))],
                [p.one_cell(t.g, one(a)), p.one_cell(one(b1), t.f)])))
  units = [
      fincat.hwhisker_left(i1[a], p.phi0[p.dom.pack('object', (a, a))])
      for a in range(b.num_objects)
  ]
  delta = unions.copair_nat(x1, units)
  gamma = unions.copair_nat(x1, [fincat.inverse_nat(n) for n in units])
  cd = CoherenceData(
      source=p,
      x1=x1,
      x2=x2,
      x3=x3,
      triples=tuple(triples),
      u=u,
      w=w,
      v=v,
      p=unions.copair(x3, p_parts),
      q=unions.copair(x3, q_parts),
      r=unions.copair(x3, r_parts),
      delta=delta,
      gamma=gamma,
      kappa=unions.copair_nat(x3, kappa),
      lam=unions.copair_nat(x3, lam),
      rho=unions.copair_nat(x3, rho))
  logging.vlog(1, 'coherence data of %s: %d/%d/%d summands', p.name,
               len(x1.tags), len(x2.tags), len(x3.tags))
  return cd


def check_coherence_data(cd: CoherenceData) -> reports.Report:
  """Checks the boundaries, naturality and invertibility of the five cells."""
  report = reports.Report(f'coherence data of {cd.name}')
  compose = fincat.compose_fun
  one = fincat.identity_fun(cd.x1.category)
  expected = {
      'delta': (compose(cd.u, cd.v), one),
      'gamma': (one, compose(cd.w, cd.v)),
      'kappa': (compose(cd.u, cd.p), compose(cd.u, cd.q)),
      'lam': (compose(cd.w, cd.r), compose(cd.w, cd.q)),
      'rho': (compose(cd.u, cd.r), compose(cd.w, cd.p)),
  }
  for name, (source, target) in expected.items():
    nat = getattr(cd, name)
    ok = nat.source == source and nat.target == target
    report.record('boundaries', name, ok)
    if ok:
      report.record('naturality', name, fincat.check_nat(nat).passed)
      report.record('invertible', name, fincat.is_invertible_nat(nat))
  for name in ('u', 'w', 'v', 'p', 'q', 'r'):
    report.record('functors', name,
                  fincat.check_functor(getattr(cd, name)).passed)
  return report
