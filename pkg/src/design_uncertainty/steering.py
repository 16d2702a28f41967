"""Steering inequalities for bipartite states measured with design-assigned
POVMs: the conditional-Renyi inequality and the max-probability inequality.

Alice measures POVMs F^(m) on her side; Bob's conditioned states are measured
with the design POVMs E^(m).  Both right-hand sides use the state-independent
form of the single-system bounds, which is what makes the inequalities valid
for every unsteerable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import state_independent_bound
from .designs import PovmAssignment, outcome_probabilities
from .entropy import conditional_renyi_arimoto
from .moments import beta_range
from .quantum import partial_trace
from .upsilon import upsilon


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Bob's states conditioned on the outcomes of one Alice POVM."""

    weights: np.ndarray              # outcome probabilities p_l
    states: tuple[np.ndarray, ...]   # conditioned density matrices rho_Bl
    valid: np.ndarray                # False where p_l = 0 (placeholder state)


@dataclass(frozen=True)
class SteeringResult:
    lhs: float
    rhs: float
    satisfied: bool


def _check_povm(elements, d: int) -> list[np.ndarray]:
    ops = [np.asarray(f, dtype=complex) for f in elements]
    total = sum(ops)
    if np.max(np.abs(total - np.eye(d))) > 1e-10:
        raise ValueError("Alice POVM elements do not sum to the identity")
    return ops


def conditioned_ensemble(rho_ab, dims, alice_povm) -> ConditionalEnsemble:
    """Condition rho_AB on the outcomes of one Alice POVM.

    p_l = tr((F_l x I) rho_AB) and rho_Bl is the normalized partial trace of
    sqrt(F_l x I) rho_AB sqrt(F_l x I).  Zero-weight outcomes get a flagged
    maximally mixed placeholder.
    """
    da, db = dims
    rho_ab = np.asarray(rho_ab, dtype=complex)
    ops = _check_povm(alice_povm, da)
    eye_b = np.eye(db, dtype=complex)
    weights, states, valid = [], [], []
    for f in ops:
        # Hermitian PSD square root via eigendecomposition
        evals, evecs = np.linalg.eigh(f)
        sqrt_f = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
        big = np.kron(sqrt_f, eye_b)
        sub = big @ rho_ab @ big
        p = float(np.trace(sub).real)
        if p < 1e-14:
            weights.append(0.0)
            states.append(np.eye(db, dtype=complex) / db)
            valid.append(False)
        else:
            weights.append(p)
            states.append(partial_trace(sub, dims, "B") / p)
            valid.append(True)
    return ConditionalEnsemble(weights=np.array(weights),
                               states=tuple(states),
                               valid=np.array(valid))


def matched_alice_povms(assignment: PovmAssignment) -> list[list[np.ndarray]]:
    """Alice POVMs mirroring Bob's design assignment element-for-element."""
    return [assignment.povm_elements(m) for m in range(assignment.n_povms)]


def steering_check_renyi(rho_ab, dims, alice_povms,
                         bob_assignment: PovmAssignment, alpha
                         ) -> SteeringResult:
    """Average Arimoto conditional alpha-entropy of Bob's outcomes given
    Alice's, against the state-independent Renyi bound (alpha >= t)."""
    if len(alice_povms) != bob_assignment.n_povms:
        raise ValueError(f"Alice has {len(alice_povms)} POVMs, Bob has "
                         f"{bob_assignment.n_povms}")
    design = bob_assignment.design
    n, t = bob_assignment.n_outcomes, design.strength
    total = 0.0
    for m, alice_povm in enumerate(alice_povms):
        ens = conditioned_ensemble(rho_ab, dims, alice_povm)
        joint = np.zeros((n, len(ens.weights)))
        for ell, (w, rho_b, ok) in enumerate(zip(ens.weights, ens.states,
                                                 ens.valid)):
            if ok:
                joint[:, ell] = w * outcome_probabilities(bob_assignment, m, rho_b)
        total += conditional_renyi_arimoto(joint, alpha)
    lhs = total / len(alice_povms)
    rhs = state_independent_bound(n, design.dimension, t, alpha)
    return SteeringResult(lhs=lhs, rhs=rhs, satisfied=lhs >= rhs - 1e-10)


def steering_check_maxprob(rho_ab, dims, alice_povms,
                           bob_assignment: PovmAssignment) -> SteeringResult:
    """Average conditioned maximal probability against the state-independent
    Landau-Pollak cap."""
    if len(alice_povms) != bob_assignment.n_povms:
        raise ValueError(f"Alice has {len(alice_povms)} POVMs, Bob has "
                         f"{bob_assignment.n_povms}")
    design = bob_assignment.design
    n, t = bob_assignment.n_outcomes, design.strength
    total = 0.0
    for m, alice_povm in enumerate(alice_povms):
        ens = conditioned_ensemble(rho_ab, dims, alice_povm)
        acc = 0.0
        for w, rho_b, ok in zip(ens.weights, ens.states, ens.valid):
            if ok:
                acc += w * float(np.max(
                    outcome_probabilities(bob_assignment, m, rho_b)))
        total += acc
    lhs = total / len(alice_povms)
    rhs = upsilon(n, t, beta_range(n, design.dimension, t)[1]).value
    return SteeringResult(lhs=lhs, rhs=rhs, satisfied=lhs <= rhs + 1e-10)
