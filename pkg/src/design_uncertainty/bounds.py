"""Uncertainty bounds for POVMs assigned to a t-design.

Three families of lower bounds on the (average) Renyi entropy are evaluated
as functions of the rescaled index of coincidence beta_n:

  bound_prior     the norm-monotonicity baseline (alpha/(t(1-alpha))) ln beta_n,
                  with -(1/t) ln beta_n at alpha = inf;
  bound_prop1     -ln Y(n, t, beta_n), the maximal-root min-entropy bound;
  bound_prop1_nr  the analytic one-Newton-step weakening of bound_prop1;
  bound_prop2     the interpolation of bound_prop1 with the order-t baseline,
                  valid for alpha >= t, equal to bound_prop1 at alpha = inf.

Landau-Pollak style caps bound the average maximal probability from above by
Y(n, t, beta_n).  audit_state evaluates everything for a concrete state and
checks the actual entropies against the bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .designs import PovmAssignment, all_outcome_probabilities
from .entropy import renyi_entropy
from .moments import beta_parameters, beta_range
from .quantum import power_moments
from .upsilon import upsilon, upsilon_nr1

SAT_ATOL = 1e-9


@dataclass(frozen=True)
class AlphaBounds:
    actual: float
    bound_prior: float
    bound_prop1: float
    bound_prop1_nr: float
    bound_prop2: float

    @property
    def satisfied(self) -> bool:
        return self.actual >= max(self.bound_prior, self.bound_prop2) - 1e-10


@dataclass(frozen=True)
class BoundReport:
    dimension: int
    design_size: int
    n_outcomes: int
    n_povms: int
    order: int                    # s used for the index of coincidence
    beta_n: float
    beta: float
    beta_m: tuple[float, ...]     # per-POVM index sums
    purity: float
    per_alpha: dict[float, AlphaBounds]
    max_prob_actual: float
    max_prob_cap: float
    jensen_ok: bool               # (1/M) sum Y(beta_m) <= Y(beta_n)
    saturated: bool               # min-entropy bound attained (rho = rho*)

    @property
    def all_satisfied(self) -> bool:
        return (all(b.satisfied for b in self.per_alpha.values())
                and self.max_prob_actual <= self.max_prob_cap + 1e-10)


def bound_prior(n: int, t: int, beta_n: float, alpha) -> float:
    """Baseline lower bound on the average alpha-entropy, alpha >= t."""
    if not math.isinf(alpha) and alpha < t:
        raise ValueError(f"baseline bound needs alpha >= t, got alpha={alpha}, t={t}")
    if math.isinf(alpha):
        return -math.log(beta_n) / t
    return alpha * math.log(beta_n) / (t * (1.0 - alpha))


def bound_prop1(n: int, t: int, beta_n: float) -> float:
    """Min-entropy bound -ln Y(n, t, beta_n)."""
    return -math.log(upsilon(n, t, beta_n).value)


def bound_prop1_nr(n: int, t: int, beta_n: float) -> float:
    """Analytic one-Newton-step min-entropy bound; between the baseline and
    bound_prop1."""
    return -math.log(upsilon_nr1(n, t, beta_n))


def bound_prop2(n: int, t: int, alpha, beta_n: float) -> float:
    """Renyi bound for alpha >= t; reduces to the baseline at alpha = t and
    to bound_prop1 at alpha = inf."""
    if math.isinf(alpha):
        return bound_prop1(n, t, beta_n)
    if alpha < t:
        raise ValueError(f"bound needs alpha >= t, got alpha={alpha}, t={t}")
    y = upsilon(n, t, beta_n).value
    return -(alpha - t) / (alpha - 1.0) * math.log(y) \
        - math.log(beta_n) / (alpha - 1.0)


def state_independent_bound(n: int, d: int, t: int, alpha) -> float:
    """bound_prop2 evaluated at the state-independent ceiling
    beta_n = n^{1-t} d^t / dim_sym, valid for every state."""
    beta_hi = beta_range(n, d, t)[1]
    return bound_prop2(n, t, alpha, beta_hi)


def landau_pollak_cap(assignment: PovmAssignment, rho, s: int
                      ) -> tuple[float, float]:
    """(actual average max-probability, upper cap Y(n, s, beta_n))."""
    bn, _ = beta_parameters(assignment, rho, s, check=False)
    probs = all_outcome_probabilities(assignment, rho)
    actual = float(np.mean(probs.max(axis=1)))
    cap = upsilon(assignment.n_outcomes, s, bn).value
    return actual, cap


def mub_min_bound(purity: float) -> float:
    """Average min-entropy bound for the three qubit MUBs in terms of the
    purity tr(rho^2): ln(2 sqrt(3) / (sqrt(3) + sqrt(2 purity - 1)))."""
    if not 0.5 - 1e-12 <= purity <= 1.0 + 1e-12:
        raise ValueError(f"purity must lie in [1/2, 1], got {purity}")
    root = math.sqrt(max(2.0 * purity - 1.0, 0.0))
    return math.log(2.0 * math.sqrt(3.0) / (math.sqrt(3.0) + root))


def audit_state(assignment: PovmAssignment, rho, alphas, s: int | None = None
                ) -> BoundReport:
    """Evaluate actual entropies and every bound for one state.

    alphas may contain floats >= s and math.inf.  s defaults to the design
    strength.  beta_n is recomputed from the actual probabilities as a
    consistency check on the assignment.
    """
    design = assignment.design
    t = design.strength if s is None else s
    n, m_count = assignment.n_outcomes, assignment.n_povms
    bn, bk = beta_parameters(assignment, rho, t, check=True)
    probs = all_outcome_probabilities(assignment, rho)
    beta_m = tuple(float(np.sum(row**t)) for row in probs)
    purity = float(power_moments(rho, 2)[1])

    per_alpha: dict[float, AlphaBounds] = {}
    for alpha in alphas:
        actual = float(np.mean([renyi_entropy(row, alpha) for row in probs]))
        per_alpha[alpha] = AlphaBounds(
            actual=actual,
            bound_prior=bound_prior(n, t, bn, alpha),
            bound_prop1=bound_prop1(n, t, bn),
            bound_prop1_nr=bound_prop1_nr(n, t, bn),
            bound_prop2=bound_prop2(n, t, alpha, bn),
        )

    actual_max, cap = landau_pollak_cap(assignment, rho, t)
    avg_y = float(np.mean([upsilon(n, t, b).value for b in beta_m]))
    jensen_ok = avg_y <= upsilon(n, t, bn).value + 1e-10
    min_ent = float(np.mean([renyi_entropy(row, math.inf) for row in probs]))
    saturated = abs(min_ent - bound_prop1(n, t, bn)) < SAT_ATOL

    return BoundReport(
        dimension=design.dimension, design_size=design.size,
        n_outcomes=n, n_povms=m_count, order=t,
        beta_n=bn, beta=bk, beta_m=beta_m, purity=purity,
        per_alpha=per_alpha,
        max_prob_actual=actual_max, max_prob_cap=cap,
        jensen_ok=jensen_ok, saturated=saturated,
    )
