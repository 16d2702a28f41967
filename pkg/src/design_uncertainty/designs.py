"""Complex projective t-designs: built-in polyhedral examples, file I/O,
verification, POVM assignment and outcome probabilities."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .quantum import bloch_to_state, check_density, sym_dim_inv, sym_projector

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


class DesignLoadError(ValueError):
    """Raised when a design file is malformed or violates the schema."""


class AssignmentError(ValueError):
    """Raised when a grouping does not yield genuine POVMs."""


@dataclass(frozen=True)
class QuantumDesign:
    """A set of K unit vectors in C^d with a claimed design strength t."""

    dimension: int
    strength: int
    vectors: np.ndarray  # (K, d) complex, rows unit norm

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[1] != self.dimension:
            raise ValueError(f"vectors must be (K, {self.dimension}), got {v.shape}")
        if v.shape[0] < self.dimension:
            raise ValueError(f"need K >= d, got K={v.shape[0]}, d={self.dimension}")
        norms = np.linalg.norm(v, axis=1)
        bad = np.where(np.abs(norms - 1.0) > 1e-8)[0]
        if bad.size:
            raise ValueError(f"vector {bad[0]} has norm {norms[bad[0]]}, expected 1")
        object.__setattr__(self, "vectors", v)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class VerificationReport:
    passes: bool
    strength: int
    tol: float
    method: str
    residuals: dict[int, float]  # s -> residual for s = 1..t


@dataclass(frozen=True)
class PovmAssignment:
    """Partition of a design into M POVMs of n outcomes each (K = n M)."""

    design: QuantumDesign
    groups: tuple[tuple[int, ...], ...]

    @property
    def n_povms(self) -> int:
        return len(self.groups)

    @property
    def n_outcomes(self) -> int:
        return len(self.groups[0])

    def povm_elements(self, m: int) -> list[np.ndarray]:
        """Rank-one elements (d/n) |phi><phi| of the m-th POVM (0-based)."""
        d, n = self.design.dimension, self.n_outcomes
        return [(d / n) * np.outer(v, v.conj())
                for v in self.design.vectors[list(self.groups[m])]]


def _octahedron_bloch() -> np.ndarray:
    return np.array([
        [1, 0, 0], [-1, 0, 0],
        [0, 1, 0], [0, -1, 0],
        [0, 0, 1], [0, 0, -1],
    ], dtype=float)


def _icosahedron_bloch() -> np.ndarray:
    # cyclic permutations of (0, +/-1, +/-phi), normalized
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = (0.0, s1 * 1.0, s2 * GOLDEN)
            for shift in range(3):
                pts.append([base[(i - shift) % 3] for i in range(3)])
    pts = np.array(pts)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def _icosidodecahedron_bloch() -> np.ndarray:
    # cyclic permutations of (0, 0, +/-phi) and (+/-1/2, +/-phi/2, +/-phi^2/2),
    # normalized (circumradius phi)
    pts = []
    for s in (1, -1):
        base = (0.0, 0.0, s * GOLDEN)
        for shift in range(3):
            pts.append([base[(i - shift) % 3] for i in range(3)])
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                base = (s1 * 0.5, s2 * GOLDEN / 2.0, s3 * GOLDEN**2 / 2.0)
                for shift in range(3):
                    pts.append([base[(i - shift) % 3] for i in range(3)])
    pts = np.array(pts)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


_BUILTINS = {
    "octahedron": (_octahedron_bloch, 3),
    "icosahedron": (_icosahedron_bloch, 5),
    "icosidodecahedron": (_icosidodecahedron_bloch, 5),
}


def builtin_design(name: str) -> QuantumDesign:
    """One of the built-in d=2 polyhedral designs: octahedron (K=6, t=3),
    icosahedron (K=12, t=5), icosidodecahedron (K=30, t=5)."""
    try:
        bloch_fn, strength = _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown design {name!r}; "
                         f"choose from {sorted(_BUILTINS)}") from None
    vectors = np.array([bloch_to_state(b) for b in bloch_fn()])
    return QuantumDesign(dimension=2, strength=strength, vectors=vectors)


def save_design(design: QuantumDesign, path) -> None:
    payload = {
        "dimension": design.dimension,
        "strength": design.strength,
        "vectors": [[[a.real, a.imag] for a in row] for row in design.vectors],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)


def load_design(path) -> QuantumDesign:
    """Load a design from JSON; rejects NaN/Inf, non-unit vectors and K < d."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DesignLoadError(f"cannot read design file {path}: {exc}") from exc
    try:
        d = int(raw["dimension"])
        t = int(raw["strength"])
        rows = raw["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DesignLoadError(f"design file {path} is missing fields: {exc}") from exc
    if len(rows) < d:
        raise DesignLoadError(f"design file has K={len(rows)} < d={d}")
    vectors = np.empty((len(rows), d), dtype=complex)
    for k, row in enumerate(rows):
        if len(row) != d:
            raise DesignLoadError(f"vector {k} has {len(row)} components, expected {d}")
        for i, pair in enumerate(row):
            re, im = float(pair[0]), float(pair[1])
            if not (math.isfinite(re) and math.isfinite(im)):
                raise DesignLoadError(f"vector {k} component {i} is not finite")
            vectors[k, i] = complex(re, im)
        nrm = np.linalg.norm(vectors[k])
        if abs(nrm - 1.0) > 1e-8:
            raise DesignLoadError(f"vector {k} has norm {nrm}, expected 1")
    return QuantumDesign(dimension=d, strength=t, vectors=vectors)


def frame_potential(design: QuantumDesign, s: int) -> float:
    """(1/K^2) sum_{j,k} |<phi_j|phi_k>|^{2s}; >= sym_dim_inv(d, s) with
    equality exactly for an s-design."""
    if s < 1:
        raise ValueError("s must be >= 1")
    overlaps = np.abs(design.vectors @ design.vectors.conj().T) ** 2
    return float(np.mean(overlaps**s))


def verify_design(design: QuantumDesign, t: int, tol: float = 1e-10,
                  method: str = "frame") -> VerificationReport:
    """Check the design property at strength t.

    "frame" compares frame potentials against sym_dim_inv for s = 1..t;
    "operator" compares (1/K) sum |phi><phi|^{otimes s} against
    sym_dim_inv(d, s) * P_sym^(s) in max-abs norm.
    """
    d = design.dimension
    residuals: dict[int, float] = {}
    if method == "frame":
        for s in range(1, t + 1):
            residuals[s] = abs(frame_potential(design, s) - sym_dim_inv(d, s))
    elif method == "operator":
        for s in range(1, t + 1):
            avg = np.zeros((d**s, d**s), dtype=complex)
            for v in design.vectors:
                vs = v
                for _ in range(s - 1):
                    vs = np.kron(vs, v)
                avg += np.outer(vs, vs.conj())
            avg /= design.size
            target = sym_dim_inv(d, s) * sym_projector(d, s)
            residuals[s] = float(np.max(np.abs(avg - target)))
    else:
        raise ValueError(f"unknown method {method!r}")
    passes = all(r <= tol for r in residuals.values())
    return VerificationReport(passes=passes, strength=t, tol=tol,
                              method=method, residuals=residuals)


def assign_povms(design: QuantumDesign, grouping="single") -> PovmAssignment:
    """Assign POVMs to a design.

    grouping "single" takes the whole design as one POVM of K elements;
    otherwise grouping is a partition of {0..K-1} into equal-sized blocks,
    each of which must resolve the identity as (d/n) sum |phi><phi| = I.
    """
    k, d = design.size, design.dimension
    if isinstance(grouping, str):
        if grouping != "single":
            raise ValueError(f"unknown grouping {grouping!r}")
        groups = (tuple(range(k)),)
    else:
        groups = tuple(tuple(int(i) for i in g) for g in grouping)
        sizes = {len(g) for g in groups}
        if len(sizes) != 1:
            raise AssignmentError(f"blocks have unequal sizes {sorted(sizes)}")
        flat = sorted(i for g in groups for i in g)
        if flat != list(range(k)):
            raise AssignmentError("blocks must partition the design indices")
    n = len(groups[0])
    eye = np.eye(d)
    for m, g in enumerate(groups):
        vs = design.vectors[list(g)]
        total = (d / n) * (vs.conj().T @ vs).T  # (d/n) sum |phi><phi|
        if np.max(np.abs(total - eye)) > 1e-10:
            raise AssignmentError(f"block {m} does not resolve the identity")
    return PovmAssignment(design=design, groups=groups)


def mub_grouping() -> list[list[int]]:
    """The {+/-x}, {+/-y}, {+/-z} partition of the built-in octahedron."""
    return [[0, 1], [2, 3], [4, 5]]


def outcome_probabilities(assignment: PovmAssignment, m: int, rho) -> np.ndarray:
    """Outcome distribution p_j = (d/n) <phi_j|rho|phi_j> of POVM m (0-based)."""
    rho = np.asarray(rho, dtype=complex)
    d, n = assignment.design.dimension, assignment.n_outcomes
    if rho.shape != (d, d):
        raise ValueError(f"state shape {rho.shape} does not match dimension {d}")
    vs = assignment.design.vectors[list(assignment.groups[m])]
    probs = (d / n) * np.real(np.einsum("jd,dc,jc->j", vs.conj(), rho, vs))
    return np.clip(probs, 0.0, None)


def all_outcome_probabilities(assignment: PovmAssignment, rho) -> np.ndarray:
    """(M, n) array of outcome distributions, one row per POVM."""
    return np.array([outcome_probabilities(assignment, m, rho)
                     for m in range(assignment.n_povms)])
