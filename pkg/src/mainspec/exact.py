"""Exact integer route: walk matrices, fraction-free rank, equitable partitions.

Everything here works in arbitrary-precision Python integers, so the results
are exact regardless of how badly conditioned the floating spectrum is.  This
module is the cross-check counterpart of :mod:`mainspec.spectra`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class WalkMatrix:
    """Integer matrix whose column c counts walks of length c from each vertex."""

    entries: tuple[tuple[int, ...], ...]
    rank: int


def walk_matrix(g: Graph) -> WalkMatrix:
    """Columns j, Aj, A^2 j, ..., A^(n-1) j of the adjacency matrix, exactly."""
    n = g.n
    nbrs = g.neighbor_lists()
    col = [1] * n
    cols = [col]
    for _ in range(n - 1):
        col = [sum(col[w] for w in nbrs[v]) for v in range(n)]
        cols.append(col)
    entries = tuple(tuple(cols[c][v] for c in range(n)) for v in range(n))
    return WalkMatrix(entries, exact_rank(entries))


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals via fraction-free Bareiss elimination.

    Pivots are chosen by largest magnitude over the whole remaining submatrix
    (full pivoting); row and column swaps do not change the rank, and the
    Bareiss update keeps every intermediate value an exact integer.
    """
    m = [list(map(int, row)) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    while r < min(nrows, ncols):
        pi, pj, best = -1, -1, 0
        for i in range(r, nrows):
            mi = m[i]
            for j in range(r, ncols):
                v = mi[j]
                if v and abs(v) > best:
                    pi, pj, best = i, j, abs(v)
        if pi < 0:
            break
        if pi != r:
            m[pi], m[r] = m[r], m[pi]
        if pj != r:
            for row in m:
                row[pj], row[r] = row[r], row[pj]
        piv = m[r][r]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[r]
            for j in range(r + 1, ncols):
                mi[j] = (mi[j] * piv - f * m[r][j]) // prev
            mi[r] = 0
        prev = piv
        r += 1
    return r


def exact_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    m = [list(map(int, row)) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for r in range(n):
        pi, pj, best = -1, -1, 0
        for i in range(r, n):
            for j in range(r, n):
                v = m[i][j]
                if v and abs(v) > best:
                    pi, pj, best = i, j, abs(v)
        if pi < 0:
            return 0
        if pi != r:
            m[pi], m[r] = m[r], m[pi]
            sign = -sign
        if pj != r:
            for row in m:
                row[pj], row[r] = row[r], row[pj]
            sign = -sign
        piv = m[r][r]
        for i in range(r + 1, n):
            mi = m[i]
            f = mi[r]
            for j in range(r + 1, n):
                mi[j] = (mi[j] * piv - f * m[r][j]) // prev
            mi[r] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Equitable partitions and their divisor (quotient) matrices.
# ---------------------------------------------------------------------------


class NotEquitableError(ValueError):
    """Partition is not equitable; carries the first violating (vertex, cell)."""

    def __init__(self, vertex: int, cell: int, message: str):
        super().__init__(message)
        self.vertex = vertex
        self.cell = cell


@dataclass(frozen=True)
class EquitablePartition:
    """Cells plus the divisor matrix.

    ``quotient[i][j]`` is the number of neighbors inside cell j that every
    vertex of cell i has.
    """

    cells: tuple[tuple[int, ...], ...]
    quotient: tuple[tuple[int, ...], ...]


def verify_equitable(g: Graph, cells: Sequence[Sequence[int]]) -> EquitablePartition:
    """Check that ``cells`` is an equitable partition and build its divisor.

    Raises ValueError if the cells do not partition the vertex set, and
    NotEquitableError (with the first offending vertex/cell pair) if the
    neighbor counts are not constant on some cell.
    """
    norm = [tuple(sorted(cell)) for cell in cells]
    seen: set[int] = set()
    for cell in norm:
        if not cell:
            raise ValueError("empty cell in partition")
        for v in cell:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two cells")
            seen.add(v)
    if len(seen) != g.n:
        raise ValueError("cells do not cover every vertex")

    masks = [sum(1 << v for v in cell) for cell in norm]
    quotient = []
    for ci, cell in enumerate(norm):
        counts = [(g.rows[cell[0]] & mask).bit_count() for mask in masks]
        for v in cell[1:]:
            for cj, mask in enumerate(masks):
                if (g.rows[v] & mask).bit_count() != counts[cj]:
                    raise NotEquitableError(
                        v, cj,
                        f"vertex {v} has {(g.rows[v] & mask).bit_count()} neighbors in "
                        f"cell {cj}, expected {counts[cj]} (cell {ci})",
                    )
        quotient.append(tuple(counts))
    return EquitablePartition(tuple(norm), tuple(quotient))


def coarsest_equitable(g: Graph) -> EquitablePartition:
    """Coarsest equitable partition by iterated neighbor-count refinement.

    Starts from the single-cell partition and splits cells by the vector of
    neighbor counts into current cells until stable.  Cells are kept sorted by
    smallest member, so the result is deterministic.
    """
    cells: list[tuple[int, ...]] = [tuple(range(g.n))]
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: list[tuple[int, ...]] = []
        for cell in cells:
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.rows[v] & mask).bit_count() for mask in masks)
                buckets.setdefault(sig, []).append(v)
            refined.extend(tuple(vs) for vs in buckets.values())
        refined.sort(key=lambda cell: cell[0])
        if len(refined) == len(cells):
            return verify_equitable(g, cells)
        cells = refined


def divisor_walk_matrix(p: EquitablePartition) -> tuple[tuple[int, ...], ...]:
    """Walk matrix [1, M·1, ..., M^(r-1)·1] of the divisor, exact integers."""
    r = len(p.quotient)
    col = [1] * r
    cols = [col]
    for _ in range(r - 1):
        col = [sum(p.quotient[i][j] * col[j] for j in range(r)) for i in range(r)]
        cols.append(col)
    return tuple(tuple(cols[c][i] for c in range(r)) for i in range(r))


def divisor_walk_rank(p: EquitablePartition) -> int:
    return exact_rank(divisor_walk_matrix(p))


# ---------------------------------------------------------------------------
# Closed forms for double stars and paths.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with integer coefficients, ascending by degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            term = "x" if e == 1 else f"x^{e}" if e else ""
            mag = "" if abs(c) == 1 and e else str(abs(c))
            if not parts:
                parts.append(("-" if c < 0 else "") + mag + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + mag + term)
        return " ".join(parts) if parts else "0"


def double_star_quartic(k: int, s: int) -> IntPolynomial:
    """x^4 - (k+s+1) x^2 + k s: the factor carrying T(k, s)'s nonzero eigenvalues."""
    if k < 1 or s < 1:
        raise ValueError(f"double star needs k, s >= 1, got ({k}, {s})")
    return IntPolynomial((k * s, 0, -(k + s + 1), 0, 1))


def double_star_charpoly(k: int, s: int) -> IntPolynomial:
    """Characteristic polynomial of T(k, s): x^(k+s-2) times the quartic."""
    quartic = double_star_quartic(k, s)
    return IntPolynomial((0,) * (k + s - 2) + quartic.coeffs)


def double_star_quartic_roots(k: int, s: int) -> tuple[float, float, float, float]:
    """The four real roots of the quartic, ascending.

    Substituting y = x^2 gives y^2 - (k+s+1) y + k s, whose two positive roots
    produce the symmetric pairs +-sqrt(y).
    """
    b = k + s + 1
    disc = math.sqrt(b * b - 4 * k * s)
    y_hi = (b + disc) / 2.0
    y_lo = (b - disc) / 2.0
    r_hi, r_lo = math.sqrt(y_hi), math.sqrt(y_lo)
    return (-r_hi, -r_lo, r_lo, r_hi)


def det_walk_divisor(k: int, s: int) -> int:
    """Exact determinant of the divisor walk matrix of T(k, s)'s 4-cell partition.

    Computed from the partition {center 0}, {center 1}, {leaves of 0},
    {leaves of 1}; zero exactly when k = s.
    """
    from .graphs import double_star

    g = double_star(k, s)
    cells = [(0,), (1,), tuple(range(2, 2 + k)), tuple(range(2 + k, 2 + k + s))]
    return exact_det(divisor_walk_matrix(verify_equitable(g, cells)))


def path_eigenpair(n: int, j: int) -> tuple[float, np.ndarray]:
    """Closed-form eigenpair of the path on n vertices, 1 <= j <= n.

    Eigenvalue 2 cos(j pi / (n+1)) with eigenvector entries sin(i j pi / (n+1))
    for i = 1..n (not normalized).  Values are sorted: j = 1 is the largest.
    """
    if not 1 <= j <= n:
        raise ValueError(f"eigenpair index must satisfy 1 <= j <= n, got j={j}, n={n}")
    theta = j * math.pi / (n + 1)
    lam = 2.0 * math.cos(theta)
    x = np.array([math.sin(i * theta) for i in range(1, n + 1)], dtype=np.float64)
    return lam, x


# ---------------------------------------------------------------------------
# Harmonic detection (exact integer test).
# ---------------------------------------------------------------------------


def harmonic_ell(g: Graph) -> int | None:
    """Return ell if A·d = ell·d exactly (d the degree vector), else None.

    Edgeless graphs have d = 0, which satisfies the relation vacuously for
    every level; they report ell = 0.  For any other harmonic graph the level
    is the unique nonnegative integer ratio.
    """
    degs = g.degrees()
    nbrs = g.neighbor_lists()
    ad = [sum(degs[w] for w in nbrs[v]) for v in range(g.n)]
    if all(d == 0 for d in degs):
        return 0
    pivot = next(v for v in range(g.n) if degs[v])
    if ad[pivot] % degs[pivot]:
        return None
    ell = ad[pivot] // degs[pivot]
    if all(ad[v] == ell * degs[v] for v in range(g.n)):
        return ell
    return None


def pseudo_regular_ratio(g: Graph) -> tuple[int, int] | None:
    """Average-neighbor-degree ratio (p, q) if it is the same at every vertex.

    Defined only for graphs without isolated vertices; returns the reduced
    fraction sum(deg of neighbors)/deg as (numerator, denominator), or None
    if the ratio varies (or some vertex is isolated).
    """
    degs = g.degrees()
    if any(d == 0 for d in degs):
        return None
    nbrs = g.neighbor_lists()
    ratio: tuple[int, int] | None = None
    for v in range(g.n):
        num = sum(degs[w] for w in nbrs[v])
        den = degs[v]
        common = math.gcd(num, den)
        cur = (num // common, den // common)
        if ratio is None:
            ratio = cur
        elif ratio != cur:
            return None
    return ratio
