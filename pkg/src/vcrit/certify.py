"""Certifying k-colourability for (gem, co-gem)-free graphs.

Every answer carries a witness that ``verify_certificate`` can check without
trusting the search: a k-colouring, an induced (k+1)-vertex-critical
subgraph (a clique or a C5 clique expansion), or an induced gem/co-gem
showing the input lies outside the class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .coloring import Coloring, k_colorable, verify_coloring
from .detectors import family, find_induced, max_clique, twin_classes
from .expansion import (
    Profile,
    canonical_profile,
    critical_profiles,
    dihedral_images,
    format_profile,
    is_critical_profile,
)
from .graph import Graph, are_isomorphic, bits, co_gem, gem, induced_subgraph

DEFAULT_MAX_LEVEL = 16

YES = "yes"
NO = "no"
OUT_OF_CLASS = "out_of_class"


class CertificationError(RuntimeError):
    """Raised when the search contradicts the characterization (a bug) or is refused."""


class EnumerationLimitError(CertificationError):
    pass


@dataclass(frozen=True)
class Certificate:
    verdict: str
    k: int
    coloring: Optional[tuple[int, ...]] = None
    witness: Optional[tuple[int, ...]] = None
    claimed: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "k": self.k,
            "coloring": None if self.coloring is None else list(self.coloring),
            "witness": None if self.witness is None else list(self.witness),
            "claimed": self.claimed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        def ints(x):
            if x is None:
                return None
            if not isinstance(x, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in x):
                raise ValueError("expected a list of integers or null")
            return tuple(x)

        if not isinstance(d, dict):
            raise ValueError("certificate must be a JSON object")
        missing = {"verdict", "k", "coloring", "witness", "claimed"} - d.keys()
        if missing:
            raise ValueError(f"certificate lacks fields {sorted(missing)}")
        if d["verdict"] not in (YES, NO, OUT_OF_CLASS):
            raise ValueError(f"unknown verdict {d['verdict']!r}")
        if not isinstance(d["k"], int) or isinstance(d["k"], bool):
            raise ValueError("k must be an integer")
        if d["claimed"] is not None and not isinstance(d["claimed"], str):
            raise ValueError("claimed must be a string or null")
        return cls(d["verdict"], d["k"], ints(d["coloring"]), ints(d["witness"]), d["claimed"])

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


def induced_c5s(g: Graph) -> Iterator[tuple[int, int, int, int, int]]:
    """Each induced 5-cycle once, as (c0..c4) with c0 least and c1 < c4."""
    adj = g.adj
    for a in range(g.n):
        above = g.vertex_mask() & ~((1 << (a + 1)) - 1)
        na = adj[a]
        for b in bits(na & above):
            nb = adj[b]
            for c in bits(nb & above & ~na):
                nc = adj[c]
                for d in bits(nc & above & ~na & ~nb):
                    for e in bits(adj[d] & na & above & ~nb & ~nc):
                        if b < e:
                            yield (a, b, c, d, e)


def _cliques_of_size(adj: tuple[int, ...], pool: int, size: int) -> Iterator[int]:
    """Masks of all cliques with ``size`` vertices inside ``pool``, lowest first."""
    if size == 0:
        yield 0
        return
    while pool and pool.bit_count() >= size:
        low = pool & -pool
        v = low.bit_length() - 1
        pool ^= low
        for rest in _cliques_of_size(adj, pool & adj[v], size - 1):
            yield rest | low


def _grow_bags(g: Graph, cycle: Sequence[int], q: Sequence[int]) -> Optional[list[int]]:
    """Bags A_i containing cycle[i] with |A_i| = q[i] forming an induced copy, or None."""
    adj = g.adj
    full = g.vertex_mask()
    cand = []
    for i in range(5):
        m = adj[cycle[i]] & adj[cycle[(i - 1) % 5]] & adj[cycle[(i + 1) % 5]]
        m &= ~adj[cycle[(i + 2) % 5]] & ~adj[cycle[(i + 3) % 5]]
        if m.bit_count() < q[i] - 1:
            return None
        cand.append(m)
    chosen = [0] * 5

    def place(i: int) -> bool:
        if i == 5:
            return True
        pool = cand[i]
        for j in range(i):
            for x in bits(chosen[j]):
                if (j - i) % 5 in (1, 4):
                    pool &= adj[x]
                else:
                    pool &= full & ~adj[x]
        for extra in _cliques_of_size(adj, pool, q[i] - 1):
            chosen[i] = extra | 1 << cycle[i]
            if place(i + 1):
                return True
        chosen[i] = 0
        return False

    if not place(0):
        return None
    return list(chosen)


def find_profile_copy(g: Graph, p: Sequence[int], cycles: Optional[list] = None) -> Optional[tuple[int, ...]]:
    """Vertex set inducing the C5 clique expansion with profile ``p``, or None."""
    if sum(p) > g.n:
        return None
    if cycles is None:
        cycles = list(induced_c5s(g))
    images = sorted(set(dihedral_images(p)))
    for cyc in cycles:
        for q in images:
            found = _grow_bags(g, cyc, q)
            if found is not None:
                mask = 0
                for m in found:
                    mask |= m
                return tuple(bits(mask))
    return None


def certify(g: Graph, k: int, max_level: int = DEFAULT_MAX_LEVEL) -> Certificate:
    """Decide k-colourability of a (gem, co-gem)-free graph with a certificate.

    Raises ``EnumerationLimitError`` if a profile search at level k + 1
    above ``max_level`` would be needed, and ``CertificationError`` if the
    search finds neither a colouring nor a critical subgraph.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    for name, pattern in (("gem", gem()), ("co-gem", co_gem())):
        hit = find_induced(g, pattern)
        if hit is not None:
            return Certificate(OUT_OF_CLASS, k, witness=hit, claimed=name)
    clique = max_clique(g)
    if len(clique) >= k + 1:
        return Certificate(NO, k, witness=clique[: k + 1], claimed=f"K{k + 1}")
    # a k-colourable graph has no (k+1)-critical induced subgraph, so trying
    # the colouring first cannot change the verdict of the profile search
    col = k_colorable(g, k)
    if col is not None:
        return Certificate(YES, k, coloring=col.assignment)
    if k + 1 > max_level:
        raise EnumerationLimitError(
            f"enumeration level too large: k + 1 = {k + 1} exceeds the ceiling {max_level}"
        )
    cycles = list(induced_c5s(g))
    for p in critical_profiles(k + 1):
        hit = find_profile_copy(g, p, cycles)
        if hit is not None:
            return Certificate(NO, k, witness=hit, claimed="profile:" + format_profile(p))
    raise CertificationError(
        f"graph is not {k}-colourable but contains no {k + 1}-vertex-critical induced subgraph"
    )


def _profile_of_witness(h: Graph) -> Optional[Profile]:
    """Cyclic bag sizes if ``h`` is a C5 clique expansion, else None."""
    classes = twin_classes(h)
    if len(classes) != 5:
        return None
    rep = [c[0] for c in classes]
    nbrs = [[j for j in range(5) if j != i and h.has_edge(rep[i], rep[j])] for i in range(5)]
    if any(len(x) != 2 for x in nbrs):
        return None
    order = [0]
    prev = -1
    while len(order) < 5:
        cur = order[-1]
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            return None
        prev = cur
        order.append(nxt[0])
    if len(set(order)) != 5 or order[0] not in nbrs[order[-1]]:
        return None
    return tuple(len(classes[i]) for i in order)  # type: ignore[return-value]


def _vertex_list_ok(g: Graph, w: Optional[Sequence[int]]) -> bool:
    return w is not None and len(set(w)) == len(w) and all(0 <= v < g.n for v in w)


def verify_certificate(g: Graph, k: int, cert: Certificate) -> bool:
    """Check a certificate against ``g`` and ``k`` from scratch."""
    try:
        if cert.k != k or k < 1:
            return False
        if cert.verdict == YES:
            if cert.coloring is None:
                return False
            return verify_coloring(g, Coloring(k, tuple(cert.coloring)))
        w = cert.witness
        if not _vertex_list_ok(g, w):
            return False
        h = induced_subgraph(g, w)
        if cert.verdict == OUT_OF_CLASS:
            pattern = {"gem": gem(), "co-gem": co_gem()}.get(cert.claimed or "")
            return pattern is not None and len(w) == 5 and are_isomorphic(h, pattern)
        if cert.verdict != NO or not cert.claimed:
            return False
        claimed = cert.claimed
        if claimed.startswith("K"):
            m = int(claimed[1:])
            return m == k + 1 and h.n == m and h.edge_count() == m * (m - 1) // 2
        if claimed.startswith("profile:"):
            p = tuple(int(x) for x in claimed[len("profile:"):].split(","))
            if len(p) != 5 or min(p) < 1 or k + 1 < 3 or not is_critical_profile(p, k + 1):
                return False
            if h.n != sum(p):
                return False
            found = _profile_of_witness(h)
            return found is not None and canonical_profile(found) == canonical_profile(p)
        return False
    except (ValueError, TypeError):
        return False


def in_class(g: Graph) -> bool:
    """True iff ``g`` is gem-free and co-gem-free."""
    return all(find_induced(g, f.members[0][1]) is None for f in (family("gem"), family("co-gem")))
