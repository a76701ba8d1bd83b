"""Floating-point spectral route: eigendecomposition, grouping, main classification.

The eigensolver is a cyclic Jacobi iteration written here (no LAPACK): the
matrices are desk-scale symmetric 0/1 matrices, Jacobi converges
unconditionally, and a fixed sweep order keeps results deterministic for a
fixed graph.  A batched variant applies the same rotation schedule across a
stack of equally-sized matrices so that exhaustive sweeps stay cheap.

Every tolerance in this module scales with the problem: see the constants
below.  Classification refuses to guess inside its gray zone; callers resolve
those instances against the exact integer route.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, degree_data

# Tolerance policy (n = order, lam_max = max |eigenvalue|):
#   orthonormality   |V^T V - I|_max   <= 1e-10 * n
#   residual         |A v - lam v|_max <= 1e-9 * (1 + lam_max) * n
#   trace            |sum lam - tr A|  <= 1e-8 * n * max(1, lam_max)
#   grouping gap                          1e-7 * max(1, lam_max)
#   main threshold   ||P j||^2         >  1e-6 * n, gray zone [x0.1, x10]
ORTHONORMALITY_TOL = 1e-10
RESIDUAL_TOL = 1e-9
TRACE_TOL = 1e-8
GROUP_TOL = 1e-7
MAIN_TOL = 1e-6
GRAY_LO = 0.1
GRAY_HI = 10.0

_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi did not reach the off-diagonal target within the sweep cap."""


class SpectralInvariantError(RuntimeError):
    """A computed decomposition violated one of its advertised bounds."""


class AmbiguousGroupingError(RuntimeError):
    """Adjacent eigenvalue groups too close to separate at the grouping tolerance."""


class ClassificationUncertainError(RuntimeError):
    """Some projection landed in the gray zone; carries the unclassified spectrum."""

    def __init__(self, spectrum: "MainSpectrum", gray_indices: tuple[int, ...]):
        super().__init__(
            f"projection(s) at group index {list(gray_indices)} in the gray zone; "
            "resolve against the exact walk-matrix rank"
        )
        self.spectrum = spectrum
        self.gray_indices = gray_indices


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (non-increasing) with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual_bound: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class EigenGroup:
    """One numerically-equal eigenvalue cluster.

    ``projection_norm_sq`` is ||P j||^2, the squared length of the all-ones
    vector's projection onto the group eigenspace (basis independent).
    ``is_main`` is None until classification has run.
    """

    value: float
    multiplicity: int
    projection_norm_sq: float
    is_main: bool | None = None


@dataclass(frozen=True)
class MainSpectrum:
    groups: tuple[EigenGroup, ...]

    @property
    def main_count(self) -> int:
        return sum(1 for g in self.groups if g.is_main)

    def main_values(self) -> tuple[float, ...]:
        return tuple(g.value for g in self.groups if g.is_main)

    @property
    def classified(self) -> bool:
        return all(g.is_main is not None for g in self.groups)


@dataclass(frozen=True)
class MainDecomposition:
    """all-ones vector written over the main eigenspaces: (value, ||P j||^2) pairs."""

    entries: tuple[tuple[float, float], ...]


# ---------------------------------------------------------------------------
# Cyclic Jacobi, scalar and batched.
# ---------------------------------------------------------------------------


def _rotation(app: float, aqq: float, apq: float) -> tuple[float, float]:
    """Stable (c, s) zeroing the (p,q) entry of the 2x2 symmetric block."""
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1.0e154:
        # theta^2 would overflow; in this regime 1/(|theta|+sqrt(..)) ~ 1/(2 theta).
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


def _jacobi(a: np.ndarray, max_sweeps: int = _MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a symmetric matrix in place with cyclic-by-row sweeps."""
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return np.diagonal(a).copy(), v
    stop = 1e-14 * max(1.0, float(np.abs(a).max()))
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        if float(np.abs(a[iu]).max()) <= stop:
            return np.diagonal(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                c, s = _rotation(a[p, p], a[q, q], apq)
                rp = c * a[p, :] - s * a[q, :]
                rq = s * a[p, :] + c * a[q, :]
                a[p, :] = rp
                a[q, :] = rq
                cp = c * a[:, p] - s * a[:, q]
                cq = s * a[:, p] + c * a[:, q]
                a[:, p] = cp
                a[:, q] = cq
                vp = c * v[:, p] - s * v[:, q]
                vq = s * v[:, p] + c * v[:, q]
                v[:, p] = vp
                v[:, q] = vq
    raise ConvergenceError(f"no convergence after {max_sweeps} cyclic sweeps (n={n})")


def _jacobi_batch(a: np.ndarray, max_sweeps: int = _MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi over a (B, n, n) stack; same schedule as the scalar path.

    Positions whose off-diagonal entry is already (near) zero get the identity
    rotation, so converged matrices in the stack are left untouched while the
    stragglers finish.
    """
    B, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), (B, n, n)).copy()
    if n == 1:
        return a[:, 0, 0].copy().reshape(B, 1), v
    stop = 1e-14 * max(1.0, float(np.abs(a).max()))
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        if float(np.abs(a[:, iu[0], iu[1]]).max()) <= stop:
            return np.diagonal(a, axis1=1, axis2=2).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                active = np.abs(apq) > 1e-300
                theta = np.divide(
                    a[:, q, q] - a[:, p, p],
                    2.0 * apq,
                    out=np.zeros(B),
                    where=active,
                )
                with np.errstate(over="ignore", divide="ignore"):
                    huge = np.abs(theta) > 1.0e154
                    t = np.where(
                        huge,
                        0.5 / np.where(huge, theta, 1.0),
                        np.copysign(1.0, theta)
                        / (np.abs(theta) + np.sqrt(theta * theta + 1.0)),
                    )
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cb = c[:, None]
                sb = s[:, None]
                rp = cb * a[:, p, :] - sb * a[:, q, :]
                rq = sb * a[:, p, :] + cb * a[:, q, :]
                a[:, p, :] = rp
                a[:, q, :] = rq
                cp = cb * a[:, :, p] - sb * a[:, :, q]
                cq = sb * a[:, :, p] + cb * a[:, :, q]
                a[:, :, p] = cp
                a[:, :, q] = cq
                vp = cb * v[:, :, p] - sb * v[:, :, q]
                vq = sb * v[:, :, p] + cb * v[:, :, q]
                v[:, :, p] = vp
                v[:, :, q] = vq
    raise ConvergenceError(f"no convergence after {max_sweeps} cyclic sweeps (batch n={n})")


def _check_bounds(a: np.ndarray, evals: np.ndarray, evecs: np.ndarray) -> float:
    """Validate orthonormality / residual / trace bounds; returns the residual."""
    n = len(evals)
    lam_max = float(np.abs(evals).max()) if n else 0.0
    gram = evecs.T @ evecs - np.eye(n)
    orth = float(np.abs(gram).max())
    if orth > ORTHONORMALITY_TOL * n:
        raise SpectralInvariantError(f"orthonormality defect {orth:.3e} exceeds bound (n={n})")
    resid = float(np.abs(a @ evecs - evecs * evals).max())
    if resid > RESIDUAL_TOL * (1.0 + lam_max) * n:
        raise SpectralInvariantError(f"eigen residual {resid:.3e} exceeds bound (n={n})")
    tr = float(np.trace(a))
    drift = abs(float(evals.sum()) - tr)
    if drift > TRACE_TOL * n * max(1.0, lam_max):
        raise SpectralInvariantError(f"trace drift {drift:.3e} exceeds bound (n={n})")
    return resid


def eigen_decompose(g: Graph) -> EigenDecomposition:
    """Full spectrum of the adjacency matrix, eigenvalues non-increasing."""
    a = g.adjacency_matrix()
    evals, evecs = _jacobi(a.copy())
    order = np.argsort(-evals, kind="stable")
    evals = evals[order]
    evecs = evecs[:, order]
    resid = _check_bounds(a, evals, evecs)
    return EigenDecomposition(evals, evecs, resid)


def eigen_decompose_batch(mats: np.ndarray) -> tuple[np.ndarray, np.ndarray, dict[str, float]]:
    """Batched spectrum of a (B, n, n) symmetric stack.

    Returns (eigenvalues (B, n) non-increasing, eigenvector stacks with
    matching column order, hygiene maxima over the batch).  Raises
    SpectralInvariantError if any matrix in the stack misses a bound.
    """
    mats = np.asarray(mats, dtype=np.float64)
    B, n, _ = mats.shape
    evals, evecs = _jacobi_batch(mats.copy())
    order = np.argsort(-evals, axis=1, kind="stable")
    evals = np.take_along_axis(evals, order, axis=1)
    evecs = np.take_along_axis(evecs, order[:, None, :], axis=2)

    lam_max = np.abs(evals).max(axis=1) if n else np.zeros(B)
    gram = np.einsum("bij,bik->bjk", evecs, evecs) - np.eye(n)
    orth = np.abs(gram).reshape(B, -1).max(axis=1)
    if (orth > ORTHONORMALITY_TOL * n).any():
        raise SpectralInvariantError("orthonormality defect exceeds bound in batch")
    resid = np.abs(np.einsum("bij,bjk->bik", mats, evecs) - evecs * evals[:, None, :])
    resid = resid.reshape(B, -1).max(axis=1)
    if (resid > RESIDUAL_TOL * (1.0 + lam_max) * n).any():
        raise SpectralInvariantError("eigen residual exceeds bound in batch")
    drift = np.abs(evals.sum(axis=1) - np.trace(mats, axis1=1, axis2=2))
    if (drift > TRACE_TOL * n * np.maximum(1.0, lam_max)).any():
        raise SpectralInvariantError("trace drift exceeds bound in batch")
    hygiene = {
        "orthonormality": float(orth.max()),
        "residual": float(resid.max()),
        "trace_drift": float(drift.max()),
    }
    return evals, evecs, hygiene


# ---------------------------------------------------------------------------
# Grouping and main classification.
# ---------------------------------------------------------------------------


def group_tolerance(evals: np.ndarray) -> float:
    lam_max = float(np.abs(evals).max()) if len(evals) else 0.0
    return GROUP_TOL * max(1.0, lam_max)


def _group_runs(evals: np.ndarray, tau: float) -> list[tuple[int, int]]:
    """Split the sorted eigenvalue list into runs separated by gaps > tau."""
    runs = []
    start = 0
    for i in range(1, len(evals)):
        if evals[i - 1] - evals[i] > tau:
            runs.append((start, i))
            start = i
    runs.append((start, len(evals)))
    return runs


def build_groups(evals: np.ndarray, proj_sq: np.ndarray) -> list[EigenGroup]:
    """Cluster sorted eigenvalues and sum the per-eigenvector projections.

    Raises AmbiguousGroupingError when two neighboring representatives end up
    closer than 3x the grouping tolerance, which would make the clustering
    order dependent.
    """
    tau = group_tolerance(evals)
    runs = _group_runs(evals, tau)
    groups = [
        EigenGroup(float(evals[a:b].mean()), b - a, float(proj_sq[a:b].sum()))
        for a, b in runs
    ]
    for left, right in zip(groups, groups[1:]):
        if left.value - right.value < 3.0 * tau:
            raise AmbiguousGroupingError(
                f"group representatives {left.value!r} and {right.value!r} are "
                f"closer than {3.0 * tau:.3e}"
            )
    return groups


def group_eigenvalues(d: EigenDecomposition) -> MainSpectrum:
    """Grouping step only: clusters with projections, no main flags yet."""
    proj_sq = d.eigenvectors.sum(axis=0) ** 2
    return MainSpectrum(tuple(build_groups(d.eigenvalues, proj_sq)))


def classify_flags(
    groups: list[EigenGroup] | tuple[EigenGroup, ...], n: int
) -> tuple[list[bool], list[int]]:
    """Threshold decision per group; returns (flags, gray group indices).

    The top group holds the largest eigenvalue, whose eigenspace always meets
    the all-ones vector, so it is never demoted and never counts as gray.
    """
    tau = MAIN_TOL * n
    flags: list[bool] = []
    gray: list[int] = []
    for idx, grp in enumerate(groups):
        if idx == 0:
            flags.append(True)
            continue
        if GRAY_LO * tau <= grp.projection_norm_sq <= GRAY_HI * tau:
            gray.append(idx)
            flags.append(grp.projection_norm_sq > tau)
        else:
            flags.append(grp.projection_norm_sq > tau)
    return flags, gray


def classify_main(g: Graph, d: EigenDecomposition) -> MainSpectrum:
    """Group and flag main eigenvalues; refuses to guess in the gray zone.

    Raises ClassificationUncertainError carrying the grouped (unflagged)
    spectrum when any projection falls inside [0.1, 10] x threshold; callers
    should resolve such instances with the exact walk-matrix rank.
    """
    spectrum = group_eigenvalues(d)
    flags, gray = classify_flags(spectrum.groups, g.n)
    if gray:
        raise ClassificationUncertainError(spectrum, tuple(gray))
    groups = tuple(
        EigenGroup(grp.value, grp.multiplicity, grp.projection_norm_sq, flag)
        for grp, flag in zip(spectrum.groups, flags)
    )
    return MainSpectrum(groups)


def resolve_with_rank(spectrum: MainSpectrum, rank: int) -> MainSpectrum:
    """Assign main flags so that exactly ``rank`` groups are main.

    The top group is always main; the remaining rank-1 slots go to the groups
    with the largest projections.  This is the gray-zone fallback: the exact
    count is trusted, and the float projections only order the candidates.
    """
    if rank < 1 or rank > len(spectrum.groups):
        raise ValueError(f"rank {rank} incompatible with {len(spectrum.groups)} groups")
    others = sorted(
        range(1, len(spectrum.groups)),
        key=lambda i: (-spectrum.groups[i].projection_norm_sq, i),
    )
    chosen = {0, *others[: rank - 1]}
    groups = tuple(
        EigenGroup(grp.value, grp.multiplicity, grp.projection_norm_sq, idx in chosen)
        for idx, grp in enumerate(spectrum.groups)
    )
    return MainSpectrum(groups)


def decompose_all_ones(g: Graph, spectrum: MainSpectrum) -> MainDecomposition:
    """Expand the all-ones vector over the main eigenspaces and audit the sums.

    The coefficients must reproduce n, 2m and the degree-square sum; a failure
    here means the classification and the graph disagree, so it raises rather
    than returning junk.
    """
    if not spectrum.classified:
        raise ValueError("spectrum must be classified before decomposing")
    entries = tuple(
        (grp.value, grp.projection_norm_sq) for grp in spectrum.groups if grp.is_main
    )
    dv = degree_data(g)
    lam1 = spectrum.groups[0].value
    tol = 1e-6 * g.n * (1.0 + lam1 * lam1)
    total = sum(c for _, c in entries)
    first = sum(v * c for v, c in entries)
    second = sum(v * v * c for v, c in entries)
    if abs(total - g.n) > tol:
        raise SpectralInvariantError(f"coefficient sum {total!r} != n={g.n}")
    if abs(first - 2.0 * dv.m) > tol:
        raise SpectralInvariantError(f"weighted sum {first!r} != 2m={2 * dv.m}")
    if abs(second - dv.sum_squares) > tol:
        raise SpectralInvariantError(f"square-weighted sum {second!r} != {dv.sum_squares}")
    return MainDecomposition(entries)
