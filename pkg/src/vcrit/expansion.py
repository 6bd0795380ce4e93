"""Clique expansions, C5 expansion profiles and enumeration of critical graphs.

A profile ``(k1, ..., k5)`` names the clique expansion of the 5-cycle
v1 v2 v3 v4 v5 in which ``v_i`` is replaced by a clique of order ``k_i``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph, bits, complete_graph, cycle_graph

Profile = tuple[int, int, int, int, int]

C5 = cycle_graph(5)


def expand(base: Graph, sizes: Sequence[int]) -> Graph:
    """Clique expansion of ``base``: vertex ``i`` becomes a clique of ``sizes[i]``.

    Bags occupy consecutive index ranges in base-vertex order.
    """
    if len(sizes) != base.n:
        raise ValueError(f"need {base.n} bag sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError(f"bag sizes must be positive, got {tuple(sizes)}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    bag_mask = [((1 << sizes[i]) - 1) << starts[i] for i in range(base.n)]
    rows = []
    for i in range(base.n):
        outside = 0
        for j in bits(base.adj[i]):
            outside |= bag_mask[j]
        for v in range(starts[i], starts[i + 1]):
            rows.append(outside | (bag_mask[i] & ~(1 << v)))
    return Graph._trusted(starts[-1], tuple(rows))


def bags(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Vertex ranges of the bags produced by ``expand``."""
    out = []
    start = 0
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return out


def _check_profile(p: Sequence[int]) -> Profile:
    if len(p) != 5:
        raise ValueError(f"a profile has 5 bag sizes, got {len(p)}")
    if any(int(x) < 1 for x in p):
        raise ValueError(f"bag sizes must be positive, got {tuple(p)}")
    return tuple(int(x) for x in p)  # type: ignore[return-value]


def expand_c5(p: Sequence[int]) -> Graph:
    return expand(C5, _check_profile(p))


def profile_omega(p: Sequence[int]) -> int:
    """Clique number of the C5 expansion: largest sum of two cyclically adjacent bags."""
    p = _check_profile(p)
    return max(p[i] + p[(i + 1) % 5] for i in range(5))


def profile_chi(p: Sequence[int]) -> int:
    """Chromatic number of the C5 expansion: max(omega, ceil(n/2))."""
    p = _check_profile(p)
    n = sum(p)
    return max(profile_omega(p), (n + 1) // 2)


def is_critical_profile(p: Sequence[int], k: int) -> bool:
    """Whether the C5 expansion with profile ``p`` is k-vertex-critical (k >= 3).

    Holds iff the bags sum to 2k - 1 and every two cyclically adjacent bags
    sum to at most k - 1.
    """
    if k < 3:
        raise ValueError(f"the profile criterion needs k >= 3, got {k}")
    p = _check_profile(p)
    return sum(p) == 2 * k - 1 and all(p[i] + p[(i + 1) % 5] <= k - 1 for i in range(5))


def dihedral_images(p: Sequence[int]) -> list[Profile]:
    p = _check_profile(p)
    out = []
    for seq in (p, p[::-1]):
        for r in range(5):
            out.append(tuple(seq[r:] + seq[:r]))
    return out  # type: ignore[return-value]


def canonical_profile(p: Sequence[int]) -> Profile:
    """Lexicographically least of the 10 rotations/reflections."""
    return min(dihedral_images(p))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` into ``parts`` positive parts, lexicographic."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def critical_profiles(k: int) -> tuple[Profile, ...]:
    """Canonical profiles of the k-vertex-critical C5 clique expansions, ascending."""
    if k < 3:
        return ()
    found = set()
    for p in compositions(2 * k - 1, 5):
        if is_critical_profile(p, k):
            found.add(canonical_profile(p))
    return tuple(sorted(found))


def enumerate_k_critical(k: int) -> list[Graph]:
    """All k-vertex-critical (gem, co-gem)-free graphs: K_k, then C5 expansions."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return [complete_graph(k)] + [expand_c5(p) for p in critical_profiles(k)]


def count_table(k_max: int) -> list[int]:
    """num(k) for k = 1..k_max."""
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    return [1 + len(critical_profiles(k)) for k in range(1, k_max + 1)]


def format_profile(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_profile(text: str) -> Profile:
    parts = text.strip().split(",")
    try:
        return _check_profile([int(x) for x in parts])
    except ValueError as exc:
        raise ValueError(f"bad profile {text!r}: {exc}") from None
