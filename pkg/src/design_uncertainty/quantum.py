"""Complex linear-algebra substrate: states, density matrices, tensor powers,
partial traces, symmetric projectors and seeded random sampling.

Everything here is a pure function of its inputs.  States are plain complex
numpy vectors, density matrices are plain complex numpy arrays; validators
enforce the physical invariants at the boundaries.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

# Size guard for anything living on (C^d)^{otimes t}.
MAX_TENSOR_DIM = 4096

NORM_ATOL = 1e-12
HERM_ATOL = 1e-12
TRACE_ATOL = 1e-12
PSD_ATOL = 1e-10


def sym_dim_inv(d: int, t: int) -> float:
    """Inverse dimension of the symmetric subspace of t copies of C^d,
    i.e. 1 / binom(d + t - 1, t)."""
    return 1.0 / math.comb(d + t - 1, t)


def check_state(psi) -> np.ndarray:
    """Validate and return a unit state vector as a 1d complex array."""
    psi = np.asarray(psi, dtype=complex).ravel()
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1.0) > 1e-8:
        raise ValueError(f"state vector has norm {nrm}, expected 1")
    return psi


def check_density(rho) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, PSD within tolerance."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-10:
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"density matrix has trace {tr}, expected 1")
    evals = np.linalg.eigvalsh(rho)
    if evals[0] < -PSD_ATOL:
        raise ValueError(f"density matrix has negative eigenvalue {evals[0]}")
    return rho


def bloch_to_state(b) -> np.ndarray:
    """Qubit state with Bloch vector b (unit 3-vector): the +1 eigenvector of
    b . sigma, with the first nonzero amplitude real nonnegative."""
    b = np.asarray(b, dtype=float).ravel()
    if b.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if abs(np.linalg.norm(b) - 1.0) > NORM_ATOL:
        raise ValueError(f"Bloch vector has norm {np.linalg.norm(b)}, expected 1")
    bx, by, bz = b
    theta = math.acos(max(-1.0, min(1.0, bz)))
    phi = math.atan2(by, bx)
    psi = np.array([math.cos(theta / 2.0),
                    math.sin(theta / 2.0) * complex(math.cos(phi), math.sin(phi))])
    return fix_global_phase(psi)


def fix_global_phase(psi: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first amplitude above tol is real >= 0."""
    psi = np.asarray(psi, dtype=complex)
    for a in psi:
        if abs(a) > tol:
            psi = psi * (abs(a) / a)
            break
    # scrub signed zeros / dust below tol
    out = psi.copy()
    out[np.abs(out) <= tol] = 0.0
    return out


def density_from_state(psi) -> np.ndarray:
    psi = check_state(psi)
    return np.outer(psi, psi.conj())


def maximally_mixed(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex) / d


@lru_cache(maxsize=None)
def sym_projector(d: int, t: int) -> np.ndarray:
    """Projector onto the symmetric subspace of (C^d)^{otimes t}, built as the
    average of all t! tensor-factor permutation operators."""
    if d < 2 or t < 1:
        raise ValueError("need d >= 2 and t >= 1")
    dim = d**t
    if dim > MAX_TENSOR_DIM:
        raise ValueError(f"d^t = {dim} exceeds the supported size {MAX_TENSOR_DIM}")
    # basis index k <-> digit string (i_1 .. i_t) base d
    digits = np.array(list(itertools.product(range(d), repeat=t)))  # (dim, t)
    weights = d ** np.arange(t - 1, -1, -1)
    proj = np.zeros((dim, dim))
    for sigma in itertools.permutations(range(t)):
        permuted = digits[:, list(sigma)] @ weights
        proj[permuted, np.arange(dim)] += 1.0
    proj /= math.factorial(t)
    return proj.astype(complex)


def tensor_power(rho, t: int) -> np.ndarray:
    """rho^{otimes t} as a dense d^t x d^t matrix."""
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    if d**t > MAX_TENSOR_DIM:
        raise ValueError(f"d^t = {d**t} exceeds the supported size {MAX_TENSOR_DIM}")
    out = rho
    for _ in range(t - 1):
        out = np.kron(out, rho)
    return out


def partial_trace(rho_ab, dims, keep: str) -> np.ndarray:
    """Trace out one subsystem of a bipartite operator.

    Parameters
    ----------
    rho_ab : (dA*dB, dA*dB) array
    dims : (dA, dB)
    keep : "A" or "B", the subsystem to keep
    """
    da, db = dims
    rho_ab = np.asarray(rho_ab, dtype=complex)
    if rho_ab.shape != (da * db, da * db):
        raise ValueError(f"operator shape {rho_ab.shape} does not match dims {dims}")
    r = rho_ab.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ajbj->ab", r)
    if keep == "B":
        return np.einsum("iaib->ab", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def power_moments(rho, qmax: int) -> np.ndarray:
    """[tr(rho^q) for q = 1..qmax], computed from the eigenvalues."""
    if qmax < 1:
        raise ValueError("qmax must be >= 1")
    evals = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    evals = np.clip(evals, 0.0, None)
    return np.array([float(np.sum(evals**q)) for q in range(1, qmax + 1)])


def random_density(d: int, rng, ensemble: str = "hilbert-schmidt",
                   lam: float | None = None) -> np.ndarray:
    """Seeded random density matrix.

    ensemble:
      "pure"            Haar-random pure state projector
      "hilbert-schmidt" normalized G G^dagger with complex standard-normal G
      "diagonal"        diag(1 - lam, lam) in d = 2, 0 <= lam <= 1/2
    """
    if ensemble == "diagonal":
        if d != 2:
            raise ValueError("diagonal ensemble is defined for d = 2")
        if lam is None or not (0.0 <= lam <= 0.5):
            raise ValueError(f"diagonal ensemble needs 0 <= lam <= 1/2, got {lam}")
        return np.diag([1.0 - lam, lam]).astype(complex)
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    if ensemble == "pure":
        g = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        g /= np.linalg.norm(g)
        return np.outer(g, g.conj())
    if ensemble == "hilbert-schmidt":
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        m = g @ g.conj().T
        return m / np.trace(m).real
    raise ValueError(f"unknown ensemble {ensemble!r}")


def random_pure_state(d: int, rng) -> np.ndarray:
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    g = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return g / np.linalg.norm(g)
