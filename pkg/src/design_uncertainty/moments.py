"""Symmetric-subspace moments tr(rho^{otimes s} P_sym^(s)), the index-of-
coincidence identity, and the rescaled beta parameters driving every bound.

The general-s moment is the complete homogeneous symmetric polynomial h_s of
the eigenvalues, obtained through the Newton power-sum recursion
    s h_s = sum_{q=1}^{s} tr(rho^q) h_{s-q},   h_0 = 1.
The direct tensor-projector contraction is kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import PovmAssignment, all_outcome_probabilities
from .quantum import power_moments, sym_dim_inv, sym_projector, tensor_power

S_MAX = 5


@dataclass(frozen=True)
class MomentProfile:
    """Moments and beta parameters of one state under one assignment."""

    values: dict[int, float]        # s -> tr(rho^{otimes s} P_sym^(s))
    beta_n: dict[int, float]        # s -> rescaled per-POVM parameter
    beta: dict[int, float]          # s -> rescaled single-POVM parameter


def sym_moment(rho, s: int) -> float:
    """tr(rho^{otimes s} P_sym^(s)) via the power-sum recursion (s = 2..5)."""
    if not 2 <= s <= S_MAX:
        raise ValueError(f"s must be in 2..{S_MAX}, got {s}")
    p = power_moments(rho, s)  # p[q-1] = tr(rho^q), p[0] = 1
    h = [1.0]
    for k in range(1, s + 1):
        h.append(sum(p[q - 1] * h[k - q] for q in range(1, k + 1)) / k)
    return h[s]


def sym_moment_direct(rho, s: int) -> float:
    """Oracle path: explicit contraction tr(rho^{otimes s} P_sym^(s))."""
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    big = tensor_power(rho, s)
    proj = sym_projector(d, s)
    return float(np.real(np.sum(big * proj.T)))


def beta_range(n: int, d: int, s: int) -> tuple[float, float]:
    """Closed admissible interval of the rescaled index of coincidence:
    (n^{1-s}, n^{1-s} d^s / dim_sym)."""
    lo = float(n) ** (1 - s)
    return lo, lo * d**s * sym_dim_inv(d, s)


def beta_parameters(assignment: PovmAssignment, rho, s: int,
                    check: bool = True) -> tuple[float, float]:
    """(beta_n, beta) of a state under an assignment at order s.

    beta_n = n^{1-s} d^s sym_dim_inv(d,s) tr(rho^{otimes s} P_sym), and beta
    is the same with K in place of n.  When check is set, the design identity
    sum_m sum_j p_j^s = M beta_n is verified against the actual outcome
    probabilities to 1e-10.
    """
    design = assignment.design
    if s > design.strength:
        raise ValueError(f"s={s} exceeds the design strength {design.strength}")
    if s < 2:
        raise ValueError("s must be >= 2")
    d, n, k = design.dimension, assignment.n_outcomes, design.size
    mom = sym_moment(rho, s)
    scale = d**s * sym_dim_inv(d, s) * mom
    bn = float(n) ** (1 - s) * scale
    bk = float(k) ** (1 - s) * scale
    if check:
        probs = all_outcome_probabilities(assignment, rho)
        lhs = float(np.sum(probs**s))
        if abs(lhs - assignment.n_povms * bn) > 1e-10:
            raise AssertionError(
                f"index-of-coincidence identity violated: "
                f"sum p^{s} = {lhs} vs M*beta_n = {assignment.n_povms * bn}")
    return bn, bk


def moment_profile(assignment: PovmAssignment, rho) -> MomentProfile:
    """Moments and beta parameters for all orders s = 2..t of the design."""
    t = assignment.design.strength
    values, bn, bk = {}, {}, {}
    for s in range(2, t + 1):
        values[s] = sym_moment(rho, s)
        bn[s], bk[s] = beta_parameters(assignment, rho, s, check=False)
    return MomentProfile(values=values, beta_n=bn, beta=bk)
