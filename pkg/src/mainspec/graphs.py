"""Core graph type, named families, and exhaustive enumeration.

Vertices are always 0..n-1 and graphs are simple and undirected.  Adjacency is
stored as one neighbor bitmask per vertex: equality and hashing are cheap, and
complement / enumeration reduce to integer bit operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

# Exhaustive enumeration walks all 2^(n(n-1)/2) labeled graphs; past n = 8 that
# is no longer a sane thing to offer.
MAX_ENUM_ORDER = 8


class ParameterError(ValueError):
    """A constructor or family parameter is outside its documented domain."""


@lru_cache(maxsize=None)
def triangle_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle vertex pairs in column-major order.

    The order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... is shared by the
    graph6 codec and by the edge-mask enumeration, so bit k of an edge mask
    always means the same pair.
    """
    return tuple((i, j) for j in range(1, n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``rows[i]`` is the neighbor bitmask of vertex i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"graph order must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"row {i} references vertices >= n")
            if row >> i & 1:
                raise ParameterError(f"loop at vertex {i}")
        for i, j in triangle_pairs(self.n):
            if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                raise ParameterError(f"adjacency not symmetric at ({i}, {j})")

    @staticmethod
    def from_edges(n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def from_edge_mask(n: int, mask: int) -> "Graph":
        """Build a graph from an edge bitmask over ``triangle_pairs(n)``."""
        rows = [0] * n
        for bit, (i, j) in enumerate(triangle_pairs(n)):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    def edge_mask(self) -> int:
        mask = 0
        for bit, (i, j) in enumerate(triangle_pairs(self.n)):
            if self.rows[i] >> j & 1:
                mask |= 1 << bit
        return mask

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, v: int) -> tuple[int, ...]:
        row = self.rows[v]
        return tuple(u for u in range(self.n) if row >> u & 1)

    def neighbor_lists(self) -> list[list[int]]:
        return [list(self.neighbors(v)) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in triangle_pairs(self.n) if self.rows[i] >> j & 1]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for i in range(self.n):
            row = self.rows[i]
            for j in range(self.n):
                if row >> j & 1:
                    a[i, j] = 1.0
        return a

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ row) & ~(1 << i) for i, row in enumerate(self.rows)))


def complement(g: Graph) -> Graph:
    return g.complement()


@dataclass(frozen=True)
class DegreeVector:
    """Degree sequence with its two standard aggregates."""

    degrees: tuple[int, ...]
    m: int
    sum_squares: int


def degree_data(g: Graph) -> DegreeVector:
    degs = g.degrees()
    total = sum(degs)
    assert total % 2 == 0
    return DegreeVector(degs, total // 2, sum(d * d for d in degs))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = v & -v
            nxt |= g.rows[low.bit_length() - 1]
            v ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-color the graph; returns (side0, side1) or None if an odd cycle exists.

    Colors are assigned per component starting from its smallest vertex, which
    keeps the output deterministic.  For connected graphs the bipartition is
    unique up to swapping sides.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_semiregular_bipartite(g: Graph) -> bool:
    """Connected, bipartite, and degree-constant within each side.

    Both sides must be non-empty (n >= 2).  Regular bipartite graphs qualify
    under this degree-based definition.
    """
    if g.n < 2 or not is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    for side in parts:
        if len({g.degree(v) for v in side}) > 1:
            return False
    return True


def enumerate_graphs(n: int, *, connected_only: bool = False) -> Iterator[Graph]:
    """Yield every labeled graph on n vertices in edge-mask order.

    No isomorphism rejection is performed: all 2^(n(n-1)/2) masks are visited
    in increasing order, so the stream is deterministic and restartable.
    """
    if not (1 <= n <= MAX_ENUM_ORDER):
        raise ParameterError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        g = Graph.from_edge_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# Named families.  Every builder documents its vertex order; reports and the
# CLI rely on these labels being stable.
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on vertices 0-1-...-(n-1)."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, triangle_pairs(n))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """Star on n vertices: hub 0 joined to leaves 1..n-1."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with side A = 0..r-1 and side B = r..r+s-1."""
    if r < 1 or s < 1:
        raise ParameterError(f"complete bipartite needs r, s >= 1, got ({r}, {s})")
    return Graph.from_edges(r + s, [(a, r + b) for a in range(r) for b in range(s)])


def double_star(k: int, s: int) -> Graph:
    """Double star T(k, s): centers 0 and 1 joined by an edge, with k leaves
    2..k+1 on center 0 and s leaves k+2..k+s+1 on center 1."""
    if k < 1 or s < 1:
        raise ParameterError(f"double star needs k, s >= 1, got ({k}, {s})")
    edges = [(0, 1)]
    edges += [(0, 2 + t) for t in range(k)]
    edges += [(1, 2 + k + t) for t in range(s)]
    return Graph.from_edges(2 + k + s, edges)


def harmonic_tree(ell: int) -> Graph:
    """Tree whose degree vector is an eigenvector for eigenvalue ell.

    Vertex order: hub 0; the hub's h = ell^2 - ell + 1 neighbors 1..h; then
    ell - 1 leaves per neighbor, grouped by neighbor.  Hub degree h, neighbor
    degree ell, leaf degree 1; the order is ell^3 - ell^2 + ell + 1.
    """
    if ell < 2:
        raise ParameterError(f"harmonic tree needs ell >= 2, got {ell}")
    h = ell * ell - ell + 1
    edges = [(0, v) for v in range(1, h + 1)]
    for v in range(1, h + 1):
        base = h + 1 + (v - 1) * (ell - 1)
        edges += [(v, base + t) for t in range(ell - 1)]
    return Graph.from_edges(1 + h * ell, edges)


def pendant_decorated(base: Graph, q: int) -> Graph:
    """Attach q pendant vertices to every vertex of a connected regular graph.

    Base vertices keep their labels 0..p-1; pendant t of base vertex v is
    p + v*q + t.  The base must be connected and regular (any degree).
    """
    if q < 1:
        raise ParameterError(f"pendant decoration needs q >= 1, got {q}")
    degs = set(base.degrees())
    if len(degs) != 1:
        raise ParameterError("pendant decoration needs a regular base graph")
    if not is_connected(base):
        raise ParameterError("pendant decoration needs a connected base graph")
    p = base.n
    edges = base.edges()
    for v in range(p):
        edges += [(v, p + v * q + t) for t in range(q)]
    return Graph.from_edges(p * (q + 1), edges)


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic family instance: a kind tag plus integer parameters.

    Pendant decorations carry their base family in ``base``; only regular,
    connected base families make sense there.
    """

    kind: str
    params: tuple[int, ...]
    base: "FamilySpec | None" = None

    def describe(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        if self.base is not None:
            return f"{self.kind}({self.base.describe()},q={inner})"
        return f"{self.kind}({inner})"


_FAMILY_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "empty": (empty_graph, 1),
    "completebipartite": (complete_bipartite, 2),
    "krs": (complete_bipartite, 2),
    "doublestar": (double_star, 2),
    "harmonictree": (harmonic_tree, 1),
}


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph an instance spec names; raises ParameterError on bad input."""
    kind = spec.kind.lower()
    if kind == "pendant":
        if spec.base is None or len(spec.params) != 1:
            raise ParameterError("pendant spec needs a base family and a single q parameter")
        return pendant_decorated(build_family(spec.base), spec.params[0])
    if kind not in _FAMILY_BUILDERS:
        raise ParameterError(f"unknown family {spec.kind!r}")
    builder, arity = _FAMILY_BUILDERS[kind]
    if len(spec.params) != arity:
        raise ParameterError(f"family {spec.kind!r} takes {arity} parameter(s), got {len(spec.params)}")
    return builder(*spec.params)
