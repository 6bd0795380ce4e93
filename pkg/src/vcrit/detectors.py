"""Induced-subgraph search, clique computations and module finding."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import (
    Graph,
    VertexSet,
    bits,
    co_gem,
    complement,
    cycle_graph,
    gem,
    mask_of,
    p3_plus_isolated,
    path_graph,
)


@dataclass(frozen=True)
class ForbiddenFamily:
    """A named set of forbidden induced subgraphs."""

    name: str
    members: tuple[tuple[str, Graph], ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a forbidden family needs at least one member")
        for label, h in self.members:
            if h.n < 1:
                raise ValueError(f"pattern {label} has no vertices")

    @classmethod
    def single(cls, name: str, pattern: Graph) -> ForbiddenFamily:
        return cls(name, ((name, pattern),))


_P3_ELL = re.compile(r"^p3\+(\d*)p1$")


def family(name: str) -> ForbiddenFamily:
    """Parse a family name: gem, co-gem, p4, c5 or p3+<l>p1 (case-insensitive)."""
    key = name.strip().lower().replace(" ", "")
    if key == "gem":
        return ForbiddenFamily.single("gem", gem())
    if key in ("co-gem", "cogem"):
        return ForbiddenFamily.single("co-gem", co_gem())
    if key == "p4":
        return ForbiddenFamily.single("P4", path_graph(4))
    if key == "c5":
        return ForbiddenFamily.single("C5", cycle_graph(5))
    m = _P3_ELL.match(key)
    if m:
        ell = int(m.group(1)) if m.group(1) else 1
        return ForbiddenFamily.single(f"P3+{ell}P1", p3_plus_isolated(ell))
    raise ValueError(f"unknown forbidden family {name!r}")


def _match(g: Graph, h: Graph) -> Optional[list[int]]:
    """Injective map from V(h) into V(g) inducing an isomorphic copy, or None.

    Pattern vertices are placed in descending degree order; candidate sets
    are cut down with the neighbourhood (or non-neighbourhood) rows of every
    vertex mapped so far.
    """
    k = h.n
    if k == 0:
        return []
    if k > g.n:
        return None
    hdeg = h.degrees()
    gdeg = g.degrees()
    full = g.vertex_mask()
    order = sorted(range(k), key=lambda v: (-hdeg[v], v))
    # earlier placed pattern vertices, split by adjacency to each pattern vertex
    placed_adj = []
    placed_non = []
    for i, v in enumerate(order):
        prev = order[:i]
        placed_adj.append([j for j, u in enumerate(prev) if h.has_edge(u, v)])
        placed_non.append([j for j, u in enumerate(prev) if not h.has_edge(u, v)])
    # static filter: enough neighbours and enough non-neighbours in g
    static = []
    for v in order:
        need_non = k - 1 - hdeg[v]
        m = 0
        for x in range(g.n):
            if gdeg[x] >= hdeg[v] and g.n - 1 - gdeg[x] >= need_non:
                m |= 1 << x
        static.append(m)
    image = [0] * k
    adj = g.adj

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = static[i] & ~used
        for j in placed_adj[i]:
            cand &= adj[image[j]]
        for j in placed_non[i]:
            cand &= full & ~adj[image[j]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            image[i] = x
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    result = [0] * k
    for i, v in enumerate(order):
        result[v] = image[i]
    return result


def find_induced(g: Graph, h: Graph) -> Optional[VertexSet]:
    """Vertex set of an induced copy of ``h`` in ``g``, or None."""
    if h.n < 1:
        raise ValueError("pattern must have at least one vertex")
    image = _match(g, h)
    return None if image is None else tuple(sorted(image))


def find_induced_mapping(g: Graph, h: Graph) -> Optional[list[int]]:
    """Like ``find_induced`` but returns the image of each pattern vertex."""
    return _match(g, h)


def freeness_witness(g: Graph, fam: ForbiddenFamily) -> Optional[tuple[str, VertexSet]]:
    """None if ``g`` is ``fam``-free, else (member name, induced copy)."""
    for label, h in fam.members:
        s = find_induced(g, h)
        if s is not None:
            return label, s
    return None


def _greedy_color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of ``cand``; returns vertices and colour bounds."""
    verts: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            verts.append(v)
            bounds.append(color)
    return verts, bounds


def max_clique(g: Graph) -> VertexSet:
    """A maximum clique, by branch and bound with a greedy colouring bound."""
    adj = g.adj
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        verts, bounds = _greedy_color_order(adj, cand)
        for idx in range(len(verts) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = verts[idx]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], g.vertex_mask())
    return tuple(sorted(best))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def max_stable_set(g: Graph) -> VertexSet:
    return max_clique(complement(g))


def independence_number(g: Graph) -> int:
    return len(max_stable_set(g))


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting)."""
    adj = g.adj
    out: list[VertexSet] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        # pivot maximising |P ∩ N(u)|
        pivot = max(bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            low = 1 << v
            bk(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low

    if g.n:
        bk(0, g.vertex_mask(), 0)
    out.sort()
    return out


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = list(s)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(not (g.adj[v] & m) for v in bits(m))


def is_very_good_stable_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is stable and meets every maximal clique of ``g``."""
    vs = list(s)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0,{g.n})")
    if not is_stable(g, vs):
        return False
    m = mask_of(vs)
    return all(mask_of(k) & m for k in maximal_cliques(g))


def is_module(g: Graph, m: Iterable[int]) -> bool:
    mask = mask_of(m)
    for x in bits(g.vertex_mask() & ~mask):
        seen = g.adj[x] & mask
        if seen and seen != mask:
            return False
    return True


def module_closure(g: Graph, seed: Iterable[int]) -> int:
    """Smallest module containing ``seed``, as a bitmask."""
    mask = mask_of(seed)
    outside = g.vertex_mask() & ~mask
    changed = True
    while changed:
        changed = False
        for x in bits(outside):
            seen = g.adj[x] & mask
            if seen and seen != mask:
                mask |= 1 << x
                outside &= ~(1 << x)
                changed = True
    return mask


def find_nontrivial_module(g: Graph) -> Optional[VertexSet]:
    """Some module M with 1 < |M| < n, or None if ``g`` is prime."""
    full = g.vertex_mask()
    for u, v in combinations(range(g.n), 2):
        m = module_closure(g, (u, v))
        if m != full:
            return tuple(bits(m))
    return None


def twin_classes(g: Graph) -> list[VertexSet]:
    """Classes of true twins (equal closed neighbourhoods), ordered by least member."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v] | 1 << v, []).append(v)
    return sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])
