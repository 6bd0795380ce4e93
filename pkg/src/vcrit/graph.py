"""Immutable simple graphs stored as bitset adjacency rows."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

# Largest order accepted by ``are_isomorphic``.
ISO_LIMIT = 12

VertexSet = tuple[int, ...]


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Row ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    Instances are immutable and hashable.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside [0,{n})")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        self._n = n
        self._adj = rows
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g._n = n
        g._adj = rows
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._adj]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def vertex_mask(self) -> int:
        return (1 << self._n) - 1


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs; duplicates collapse."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise ValueError(f"loop ({u},{v}) is not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled by ascending original index."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0,{g.n})")
    pos = {v: i for i, v in enumerate(vs)}
    sel = mask_of(vs)
    rows = []
    for v in vs:
        row = 0
        for u in bits(g.adj[v] & sel):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph._trusted(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of the vertices")
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph._trusted(g.n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.adj)
        offset += g.n
    return Graph._trusted(offset, tuple(rows))


# Small named graphs.

def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def co_gem() -> Graph:
    """P4 + P1."""
    return disjoint_union(path_graph(4), empty_graph(1))


def gem() -> Graph:
    """P4 plus a vertex adjacent to all four path vertices."""
    return complement(co_gem())


def p3_plus_isolated(ell: int) -> Graph:
    """P3 + ell*P1."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    return disjoint_union(path_graph(3), empty_graph(ell))


def _degree_classes(g: Graph) -> list[tuple[int, int]]:
    # (degree, sorted neighbour degrees) refines the plain degree partition
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))) for v in range(g.n)]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs with at most ``ISO_LIMIT`` vertices.

    Vertices of ``g`` are only mapped onto vertices of ``h`` with the same
    degree signature, and partial maps are extended one vertex at a time.
    """
    if g.n > ISO_LIMIT or h.n > ISO_LIMIT:
        raise ValueError(f"are_isomorphic supports at most {ISO_LIMIT} vertices, got {g.n} and {h.n}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    sg, sh = _degree_classes(g), _degree_classes(h)
    if sorted(sg) != sorted(sh):
        return False
    n = g.n
    # rarest signature classes first keeps branching low
    freq: dict[tuple, int] = {}
    for s in sg:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[sg[v]], -g.degree(v), v))
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or sh[w] != sg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return extend(0)
