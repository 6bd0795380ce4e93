"""Exact vertex colouring: k-colourability, chromatic number, verification."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .detectors import max_clique
from .graph import Graph, bits


@dataclass(frozen=True)
class Coloring:
    """Colour budget ``k`` and the colour of each vertex (index = vertex)."""

    k: int
    assignment: tuple[int, ...]

    def color_class(self, c: int) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.assignment) if x == c)

    def colors_used(self) -> int:
        return len(set(self.assignment))


def verify_coloring(g: Graph, c: Coloring) -> bool:
    """Straight edge scan: total, within budget, no monochromatic edge."""
    a = c.assignment
    if len(a) != g.n or c.k < 0:
        return False
    if any(not isinstance(x, int) or not 0 <= x < c.k for x in a):
        return False
    return all(a[u] != a[v] for u, v in g.edges())


def k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """A proper k-colouring of ``g`` if one exists, else None.

    Complete backtracking search.  A maximum clique is fixed to colours
    0..w-1 up front.  The remaining vertices are taken most-saturated first
    (ties: more uncoloured neighbours, then lower index), and the uncoloured
    true twins of the chosen vertex are coloured together with a *set* of
    colours.  New colours are only ever opened in index order.
    """
    if k < 1:
        raise ValueError(f"colour budget must be positive, got {k}")
    n = g.n
    if n == 0:
        return Coloring(k, ())
    clique = max_clique(g)
    if len(clique) > k:
        return None
    adj = g.adj
    closed = [adj[v] | 1 << v for v in range(n)]
    twins = [0] * n
    for v in range(n):
        for u in range(n):
            if closed[u] == closed[v]:
                twins[v] |= 1 << u
    color = [-1] * n
    classes = [0] * k
    # a maximum clique always contains whole twin classes
    for c, v in enumerate(clique):
        color[v] = c
        classes[c] |= 1 << v
    uncolored = g.vertex_mask()
    for v in clique:
        uncolored &= ~(1 << v)

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        best = -1
        best_key = None
        best_free = 0
        spare = k - used
        v_bits = uncolored
        while v_bits:
            low = v_bits & -v_bits
            v_bits ^= low
            v = low.bit_length() - 1
            row = adj[v]
            free = 0
            sat = 0
            for c in range(used):
                if classes[c] & row:
                    sat += 1
                else:
                    free |= 1 << c
            if free.bit_count() + spare < (twins[v] & uncolored).bit_count():
                return False
            key = (sat, (row & uncolored).bit_count(), -v)
            if best_key is None or key > best_key:
                best, best_key, best_free = v, key, free
        block = list(bits(twins[best] & uncolored))
        rest = uncolored & ~twins[best]
        size = len(block)
        free_colors = list(bits(best_free))
        for fresh in range(0, min(size, spare) + 1):
            new_colors = list(range(used, used + fresh))
            for old in combinations(free_colors, size - fresh):
                chosen = list(old) + new_colors
                for v, c in zip(block, chosen):
                    color[v] = c
                    classes[c] |= 1 << v
                if solve(rest, used + fresh):
                    return True
                for v, c in zip(block, chosen):
                    classes[c] &= ~(1 << v)
                    color[v] = -1
        return False

    if not solve(uncolored, len(clique)):
        return None
    return Coloring(k, tuple(color))


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """(chi(g), witness colouring), searching upward from the clique number."""
    if g.n == 0:
        return 0, Coloring(0, ())
    k = len(max_clique(g))
    while True:
        col = k_colorable(g, k)
        if col is not None:
            return k, col
        k += 1


def coloring_from_list(k: int, assignment: Sequence[int]) -> Coloring:
    return Coloring(k, tuple(int(x) for x in assignment))
