"""Renyi entropies of outcome distributions, in nats, plus Arimoto's
conditional Renyi entropy for the steering checks.

alpha = 1 is the Shannon limit and alpha = math.inf the min-entropy branch;
both are handled exactly rather than as numeric limits.  Probabilities below
1e-15 are treated as exact zeros to avoid -inf * 0 artifacts.
"""

from __future__ import annotations

import math

import numpy as np

PROB_FLOOR = 1e-15


def _clean(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).ravel()
    if np.any(p < -1e-10):
        raise ValueError("negative probability")
    p = np.where(p < PROB_FLOOR, 0.0, p)
    return p


def renyi_entropy(p, alpha) -> float:
    """Renyi alpha-entropy (1-alpha)^{-1} ln sum p^alpha in nats.

    alpha = 1 gives the Shannon entropy, alpha = math.inf -ln max(p).
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    p = _clean(p)
    if math.isinf(alpha):
        return -math.log(float(np.max(p)))
    if alpha == 1:
        nz = p[p > 0]
        return float(-np.sum(nz * np.log(nz)))
    return math.log(float(np.sum(p**alpha))) / (1.0 - alpha)


def conditional_renyi_arimoto(joint, alpha) -> float:
    """Arimoto conditional Renyi entropy R_alpha(X|Z) of a joint matrix
    p[x, z].  Columns of zero weight contribute nothing."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    joint = np.asarray(joint, dtype=float)
    if joint.ndim != 2:
        raise ValueError("joint distribution must be a 2d matrix p[x, z]")
    joint = np.where(joint < PROB_FLOOR, 0.0, joint)
    pz = joint.sum(axis=0)
    total = pz.sum()
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"joint distribution sums to {total}, expected 1")
    cols = pz > 0
    cond = joint[:, cols] / pz[cols]
    if math.isinf(alpha):
        return -math.log(float(np.sum(pz[cols] * cond.max(axis=0))))
    if alpha == 1:
        # conditional Shannon entropy as the limit
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(cond > 0, -cond * np.log(np.where(cond > 0, cond, 1.0)), 0.0)
        return float(np.sum(pz[cols] * terms.sum(axis=0)))
    inner = np.sum(cond**alpha, axis=0) ** (1.0 / alpha)
    return (alpha / (1.0 - alpha)) * math.log(float(np.sum(pz[cols] * inner)))


def shannon_entropy(p) -> float:
    return renyi_entropy(p, 1)


def min_entropy(p) -> float:
    return renyi_entropy(p, math.inf)
