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
"""Fubini for bicoends: ∫^{a,b} P(a, b, a, b) ≃ ∫ᵃ∫ᵇ P(a, b, a, b).

The joint bicoend J is the bicoend of P over the pair (a, b). The iterated
bicoend K is the bicoend over a of the parametrized inner bicoend
Q(a', a) = ∫ᵇ P(a', b, a, b). The comparison maps are

  σ: K → J, induced from φ: Q ⇏ J, itself assembled from the restrictions
     of the joint transformation with a held fixed;
  θ: J → K, induced from the pair assembled out of the rows k_a∘j^{aa} and
     the columns k∘j_b.

The unit and counit are induced through the universal properties from the
structure cells collected along the way, and the resulting equivalence is
verified, triangle identities included.
"""

import dataclasses
from typing import Any, Dict, Mapping, Optional, Tuple

from absl import logging
import ml_collections
import numpy as np

from bicoend.cat import equivalence
from bicoend.cat import fincat
from bicoend.codescent import bicoend as bicoend_lib
from bicoend.compose import composites
from bicoend.derived import parametrized
from bicoend.extra import extranat
from bicoend.extra import lemmas
from bicoend.pseudo import pseudofunctor
from bicoend.pseudo import twocat
from bicoend.utils import config as config_lib
from bicoend.utils import constants
from bicoend.utils import errors
from bicoend.utils import reports

Index = Tuple[int, int]


@dataclasses.dataclass(frozen=True, eq=False)
class Stages:
  """The three bicoends the comparison is built from.

  Attributes:
    source: P on A^op × B^op × A × B.
    joint_form: P as a pseudofunctor in the pair, see lemmas.joint_form.
    joint: ∫^{a,b} P with its transformation i.
    inner: (a', a) ↦ ∫ᵇ P(a', b, a, b) with j^{a'a} at each object.
    outer: ∫ᵃ Q(a, a) with its transformation k.
  """
  source: pseudofunctor.PseudoFun
  joint_form: pseudofunctor.PseudoFun
  joint: bicoend_lib.BicoendWitness
  inner: parametrized.ParametrizedBicoend
  outer: bicoend_lib.BicoendWitness

  @property
  def a_shape(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[2]

  @property
  def b_shape(self) -> twocat.Fin2Cat:
    return self.source.dom.factor_list[3]

  @property
  def pair(self) -> twocat.Fin2Cat:
    return self.joint_form.dom.factor_list[2]

  def diagonal(self, a: int) -> bicoend_lib.BicoendWitness:
    """The inner bicoend j^{aa} at (a, a)."""
    q = self.inner.pseudofunctor
    return self.inner.witnesses[q.dom.pack('object', (a, a))]

  def joint_index(self, a: int, b: int) -> int:
    return self.pair.pack('object', (a, b))


@dataclasses.dataclass(frozen=True, eq=False)
class SigmaParts:
  """σ: K → J with the cells it was induced with.

  Attributes:
    phi: φ: Q ⇏ J with components φ^a and cells φ^f.
    sigma: σ.
    components: Σ_a: σ∘k_a ⇒ φ^a.
    restrictions: Φ^a_b: φ^a∘j^{aa}_b ⇒ i_{ab}.
  """
  phi: extranat.ExtraPseudoNat
  sigma: fincat.Fun
  components: Dict[int, fincat.Nat]
  restrictions: Dict[Index, fincat.Nat]


@dataclasses.dataclass(frozen=True, eq=False)
class ThetaParts:
  """θ: J → K with Θ_{ab}: θ∘i_{ab} ⇒ k_a∘j^{aa}_b and its inputs."""
  rows: Dict[int, extranat.ExtraPseudoNat]
  cols: Dict[int, extranat.ExtraPseudoNat]
  assembled: extranat.ExtraPseudoNat
  theta: fincat.Fun
  components: Dict[Index, fincat.Nat]


@dataclasses.dataclass(frozen=True, eq=False)
class FubiniBundle:
  """Everything built on the way to the equivalence J ⇄ K.

  Attributes:
    stages: The joint, inner and outer bicoends.
    sigma: σ and its cells.
    theta: θ and its cells.
    omega: Ω_a: θ∘φ^a ⇒ k_a.
    kappa: κ: σ∘θ ⇒ 1_J.
    lam: λ: θ∘σ ⇒ 1_K.
    witness: The adjoint equivalence with forward θ and backward σ.
    report: One verdict per induced 2-cell, the compatibility lemma and the
      triangle identities.
  """
  stages: Stages
  sigma: SigmaParts
  theta: ThetaParts
  omega: Dict[int, fincat.Nat]
  kappa: fincat.Nat
  lam: fincat.Nat
  witness: equivalence.EquivalenceWitness
  report: reports.Report

  @property
  def joint(self) -> fincat.FinCat:
    return self.stages.joint.category

  @property
  def iterated(self) -> fincat.FinCat:
    return self.stages.outer.category


def _check_shape(p: pseudofunctor.PseudoFun):
  factors = p.dom.factor_list
  if len(factors) != 4:
    raise errors.BoundaryMismatch(
        f'{p!r} is not on a shape A^op × B^op × A × B')
  for i in (0, 1):
    if not factors[i] == twocat.opposite_2cat(factors[i + 2]):
      raise errors.BoundaryMismatch(
          f'{p!r}: factor {i} is not the opposite of factor {i + 2}')


def _realize(what: str, build, *args):
  try:
    return build(*args)
  except errors.BudgetExhausted as e:
    subject = f'{what} {e.subject}' if e.subject else what
    raise errors.BudgetExhausted(e.stage, e.steps, subject) from e


def compute_stages(p: pseudofunctor.PseudoFun,
                   config: Optional[ml_collections.ConfigDict] = None
                  ) -> Stages:
  """Computes the joint, inner and outer bicoends of P.

  Raises:
    BoundaryMismatch: if P is not on A^op × B^op × A × B.
    BudgetExhausted: naming the first bicoend that did not realize.
  """
  _check_shape(p)
  config = config or config_lib.get_config()
  joint_form = lemmas.joint_form(p)
  joint = _realize('the joint bicoend', bicoend_lib.bicoend, joint_form,
                   config, f'J({p.name})')
  inner_source = pseudofunctor.regroup(p, ((0, 2), 1, 3), f'{p.name}[a,a]')
  inner = _realize('the inner bicoends', parametrized.parametrized_bicoend,
                   inner_source, config, f'Q({p.name})')
  outer = _realize('the outer bicoend', bicoend_lib.bicoend,
                   inner.pseudofunctor, config, f'K({p.name})')
  logging.info('joint %d/%d, iterated %d/%d (objects/morphisms)',
               joint.category.num_objects, joint.category.num_morphisms,
               outer.category.num_objects, outer.category.num_morphisms)
  return Stages(p, joint_form, joint, inner, outer)


def _whisker_zeta(zeta: fincat.Nat, witness: bicoend_lib.BicoendWitness,
                  b: int) -> fincat.Nat:
  return fincat.hwhisker_right(zeta, witness.coherence.x1.inclusions[b])


def _record_induced(report: reports.Report, instance: str,
                    witness: bicoend_lib.BicoendWitness, nat: fincat.Nat,
                    gammas: Mapping[int, fincat.Nat]):
  """Records whether nat∗1_{i_b} gives back every Γ_b."""
  ok = all(
      np.array_equal(
          fincat.hwhisker_right(nat, witness.component(b)).comps,
          gamma.comps) for b, gamma in gammas.items())
  report.record('EB2', instance, ok)


def build_sigma(stages: Stages, report: reports.Report) -> SigmaParts:
  """σ: ∫ᵃ∫ᵇ P → ∫^{a,b} P.

  φ^a is induced from the joint transformation with a held fixed, φ^f is
  induced from the joint cell at (f, 1_b) for every b, and σ from the
  assembled φ.

  Args:
    stages: The three bicoends.
    report: Receives one 'EB2' verdict per induced φ^f.

  Returns:
    The parts of σ.

  Raises:
    CompatibilityFailure: if some φ^f is not induced.
    CheckFailed: if φ fails its checker.
  """
  a_shape, b_shape = stages.a_shape, stages.b_shape
  au = a_shape.underlying
  joint = stages.joint
  q = stages.inner.pseudofunctor
  comps, restrictions = {}, {}
  for a in range(a_shape.num_objects):
    held = lemmas.restrict(joint.extranat, 0, a,
                           f'i[{a_shape.objects[a]}]')
    inner = stages.diagonal(a)
    comps[a], zeta = bicoend_lib.induce_from(inner, held)
    for b in range(b_shape.num_objects):
      restrictions[(a, b)] = _whisker_zeta(zeta, inner, b)
  cells = {}
  for f in range(a_shape.num_one_cells):
    a, a2 = int(au.src[f]), int(au.tgt[f])
    h = fincat.compose_fun(comps[a], q.fun(f, a_shape.identity(a)))
    k = fincat.compose_fun(comps[a2], q.fun(a_shape.identity(a2), f))
    gammas = {
        b: joint.cell(stages.pair.pack('one_cell',
                                       (f, b_shape.identity(b))))
        for b in range(b_shape.num_objects)
    }
    witness = stages.inner.witnesses[q.dom.pack('object', (a2, a))]
    cells[f] = bicoend_lib.induce_between(witness, h, k, gammas)
    _record_induced(report, f'phi[{a_shape.one_cells[f]}]', witness, cells[f],
                    gammas)
  phi = extranat.into_constant(f'phi({stages.source.name})', q,
                               joint.category, comps, cells)
  extranat.check_extrapseudonat(phi).raise_if_failed(
      f'assembled {phi.name}')
  sigma, zeta = bicoend_lib.induce_from(stages.outer, phi)
  components = {
      a: _whisker_zeta(zeta, stages.outer, a)
      for a in range(a_shape.num_objects)
  }
  return SigmaParts(phi, sigma, components, restrictions)


def rows_and_columns(
    stages: Stages
) -> Tuple[Dict[int, extranat.ExtraPseudoNat], Dict[int,
                                                     extranat.ExtraPseudoNat]]:
  """k_a∘j^{aa}: P(a, -, a, -) ⇏ K and k∘j_b: P(-, b, -, b) ⇏ K."""
  outer = stages.outer
  rows = {
      a: lemmas.postcompose(outer.component(a), stages.diagonal(a).extranat,
                            f'k.j[{stages.a_shape.objects[a]}]')
      for a in range(stages.a_shape.num_objects)
  }
  cols = {
      b: composites.stalactite(
          parametrized.inner_transformation(stages.inner, b), outer.extranat,
          f'k.j[-,{stages.b_shape.objects[b]}]')
      for b in range(stages.b_shape.num_objects)
  }
  return rows, cols


def check_fublemma(stages: Stages, rows=None, cols=None) -> reports.Report:
  """Both splittings of every (f, g) through the composite of k and j agree.

  An A or B without non-identity 1-cells still checks the identity pairs.
  """
  if rows is None or cols is None:
    rows, cols = rows_and_columns(stages)
  return lemmas.compatibility_report(stages.joint_form, rows, cols)


def build_theta(stages: Stages, rows=None, cols=None) -> ThetaParts:
  """θ: ∫^{a,b} P → ∫ᵃ∫ᵇ P from the rows and columns of k∘j.

  Raises:
    ComponentMismatch: if a row and a column disagree on a component.
    CompatibilityFailure: at the first (f, g) whose splittings differ.
  """
  if rows is None or cols is None:
    rows, cols = rows_and_columns(stages)
  assembled = lemmas.assemble_pair(stages.joint_form, stages.outer.category,
                                   rows, cols, f'k.j({stages.source.name})')
  theta, zeta = bicoend_lib.induce_from(stages.joint, assembled)
  components = {}
  for a in range(stages.a_shape.num_objects):
    for b in range(stages.b_shape.num_objects):
      components[(a, b)] = _whisker_zeta(zeta, stages.joint,
                                         stages.joint_index(a, b))
  return ThetaParts(rows, cols, assembled, theta, components)


def _kappa(stages: Stages, sigma: SigmaParts, theta: ThetaParts,
           report: reports.Report) -> fincat.Nat:
  """κ: σ∘θ ⇒ 1_J from (σ∗Θ_{ab}), (Σ_a∗j_b) and Φ^a_b."""
  joint = stages.joint
  gammas = {}
  for a in range(stages.a_shape.num_objects):
    inner = stages.diagonal(a)
    for b in range(stages.b_shape.num_objects):
      gammas[stages.joint_index(a, b)] = fincat.vchain(
          fincat.hwhisker_left(sigma.sigma, theta.components[(a, b)]),
          fincat.hwhisker_right(sigma.components[a], inner.component(b)),
          sigma.restrictions[(a, b)])
  kappa = bicoend_lib.induce_between(
      joint, fincat.compose_fun(sigma.sigma, theta.theta),
      fincat.identity_fun(joint.category), gammas)
  _record_induced(report, 'kappa', joint, kappa, gammas)
  return kappa


def _lambda(stages: Stages, sigma: SigmaParts, theta: ThetaParts,
            report: reports.Report) -> Tuple[fincat.Nat, Dict[int, fincat.Nat]]:
  """λ: θ∘σ ⇒ 1_K, through Ω_a: θ∘φ^a ⇒ k_a at each a."""
  outer = stages.outer
  omega = {}
  for a in range(stages.a_shape.num_objects):
    inner = stages.diagonal(a)
    gammas = {
        b: fincat.vcompose_nat(
            theta.components[(a, b)],
            fincat.hwhisker_left(theta.theta, sigma.restrictions[(a, b)]))
        for b in range(stages.b_shape.num_objects)
    }
    omega[a] = bicoend_lib.induce_between(
        inner, fincat.compose_fun(theta.theta, sigma.phi.comp(0, a, 0)),
        outer.component(a), gammas)
    _record_induced(report, f'omega[{stages.a_shape.objects[a]}]', inner,
                    omega[a], gammas)
  gammas = {
      a: fincat.vcompose_nat(
          omega[a], fincat.hwhisker_left(theta.theta, sigma.components[a]))
      for a in omega
  }
  lam = bicoend_lib.induce_between(
      outer, fincat.compose_fun(theta.theta, sigma.sigma),
      fincat.identity_fun(outer.category), gammas)
  _record_induced(report, 'lambda', outer, lam, gammas)
  return lam, omega


def fubini_equivalence(p: pseudofunctor.PseudoFun,
                       config: Optional[ml_collections.ConfigDict] = None
                      ) -> FubiniBundle:
  """The adjoint equivalence ∫^{a,b} P ⇄ ∫ᵃ∫ᵇ P.

  Args:
    p: P on A^op × B^op × A × B.
    config: Budgets, see utils/config.py.

  Returns:
    The bundle; its witness has forward θ and backward σ and has passed
    verify_adjoint_equivalence.

  Raises:
    BoundaryMismatch: if P is not on A^op × B^op × A × B.
    BudgetExhausted: naming the bicoend that did not realize.
    CheckFailed: if the compatibility lemma or the equivalence fails.
    CompatibilityFailure: at the first 2-cell that is not induced.
  """
  stages = compute_stages(p, config)
  report = reports.Report(f'fubini for {p.name}')
  sigma = build_sigma(stages, report)
  rows, cols = rows_and_columns(stages)
  lemma = check_fublemma(stages, rows, cols)
  report.extend(lemma)
  lemma.raise_if_failed(f'compatibility of k.j for {p.name}')
  theta = build_theta(stages, rows, cols)
  kappa = _kappa(stages, sigma, theta, report)
  lam, omega = _lambda(stages, sigma, theta, report)
  witness = equivalence.EquivalenceWitness(theta.theta, sigma.sigma,
                                           fincat.inverse_nat(kappa), lam)
  verdict = equivalence.verify_adjoint_equivalence(witness)
  report.extend(verdict)
  verdict.raise_if_failed(f'fubini equivalence for {p.name}')
  logging.info('fubini for %s: %s', p.name, report.counts())
  return FubiniBundle(stages, sigma, theta, omega, kappa, lam, witness,
                      report)


def swap_arguments(p: pseudofunctor.PseudoFun) -> pseudofunctor.PseudoFun:
  """(b', a', b, a) ↦ P(a', b', a, b) on B^op × A^op × B × A."""
  return pseudofunctor.regroup(p, (1, 0, 3, 2), f'{p.name}~')


def _relabel(source: Stages, target: Stages, name: str
            ) -> Tuple[fincat.Fun, fincat.Nat]:
  """The functor J → J~ induced by i~ read with its pair swapped."""
  a_shape, b_shape = source.a_shape, source.b_shape
  comps, cells = {}, {}
  for a in range(a_shape.num_objects):
    for b in range(b_shape.num_objects):
      comps[source.joint_index(a, b)] = target.joint.component(
          target.joint_index(b, a))
  for f in range(a_shape.num_one_cells):
    for g in range(b_shape.num_one_cells):
      cells[source.pair.pack('one_cell', (f, g))] = target.joint.cell(
          target.pair.pack('one_cell', (g, f)))
  relabelled = extranat.into_constant(name, source.joint_form,
                                      target.joint.category, comps, cells)
  extranat.check_extrapseudonat(relabelled).raise_if_failed(
      f'relabelled {name}')
  return bicoend_lib.induce_from(source.joint, relabelled)


def swap_equivalence(stages: Stages,
                     swapped: Stages) -> equivalence.EquivalenceWitness:
  """J ⇄ J~ between the joint bicoends of P and of its swap.

  Raises:
    CheckFailed: if the equivalence fails verification.
  """
  forward, zeta = _relabel(stages, swapped, 'swap')
  backward, zeta_back = _relabel(swapped, stages, 'swap^-1')

  def unit_cells(there, back, zeta_there, zeta_back_, source, target):
    cells = {}
    for a in range(source.a_shape.num_objects):
      for b in range(source.b_shape.num_objects):
        x = source.joint_index(a, b)
        y = target.joint_index(b, a)
        cells[x] = fincat.vcompose_nat(
            _whisker_zeta(zeta_back_, target.joint, y),
            fincat.hwhisker_left(back,
                                 _whisker_zeta(zeta_there, source.joint, x)))
    return bicoend_lib.induce_between(
        source.joint, fincat.compose_fun(back, there),
        fincat.identity_fun(source.joint.category), cells)

  there_and_back = unit_cells(forward, backward, zeta, zeta_back, stages,
                              swapped)
  back_and_there = unit_cells(backward, forward, zeta_back, zeta, swapped,
                              stages)
  witness = equivalence.EquivalenceWitness(
      forward, backward, fincat.inverse_nat(there_and_back), back_and_there)
  equivalence.verify_adjoint_equivalence(witness).raise_if_failed(
      f'swap of {stages.source.name}')
  return witness


@dataclasses.dataclass(frozen=True, eq=False)
class Interchange:
  """∫ᵃ∫ᵇ P ⇄ ∫ᵇ∫ᵃ P through both joint bicoends."""
  first: FubiniBundle
  second: FubiniBundle
  swap: equivalence.EquivalenceWitness
  witness: equivalence.EquivalenceWitness
  report: reports.Report


def interchange(p: pseudofunctor.PseudoFun,
                config: Optional[ml_collections.ConfigDict] = None
               ) -> Interchange:
  """Composes K ⇄ J, J ⇄ J~ and J~ ⇄ K~.

  Raises:
    BudgetExhausted: if either nesting order does not realize.
    CheckFailed: if the composite fails verification.
  """
  first = fubini_equivalence(p, config)
  second = fubini_equivalence(swap_arguments(p), config)
  swap = swap_equivalence(first.stages, second.stages)
  witness = equivalence.compose_equivalences(
      equivalence.compose_equivalences(
          equivalence.invert_equivalence(first.witness), swap),
      second.witness)
  report = equivalence.verify_adjoint_equivalence(witness)
  report.raise_if_failed(f'interchange for {p.name}')
  return Interchange(first, second, swap, witness, report)


def _size(c: fincat.FinCat) -> Dict[str, int]:
  return {
      'objects': c.num_objects,
      'morphisms': c.num_morphisms,
      'pi0': fincat.pi0(c),
  }


def to_dict(bundle: FubiniBundle,
            swapped: Optional[Interchange] = None) -> Dict[str, Any]:
  """The fubini report: sizes, π0 counts and every recorded verdict."""
  stages = bundle.stages
  q = stages.inner.pseudofunctor
  payload = {
      'schema': constants.FUBINI_SCHEMA,
      'source': stages.source.name,
      'joint': _size(bundle.joint),
      'iterated': _size(bundle.iterated),
      'inner': {
          q.dom.objects[x]: _size(w.category)
          for x, w in enumerate(stages.inner.witnesses)
      },
      'report': bundle.report.to_dict(),
  }
  if swapped is not None:
    payload['interchange'] = {
        'swapped': _size(swapped.second.iterated),
        'report': swapped.report.to_dict(),
    }
  return payload


def pi0_counts(bundle: FubiniBundle) -> Mapping[str, int]:
  return {
      'joint': fincat.pi0(bundle.joint),
      'iterated': fincat.pi0(bundle.iterated)
  }
