"""The ten special (gem, co-gem)-free base graphs G1..G10.

Vertex v_j of a drawing is stored at index j - 1.  For G2..G10 the marked
vertices are v1, v4, v6 (indices 0, 3, 5).

The related class H (not built here) partitions V into A1..A6 with A1
complete to A2 and A5, A2 complete to A3 and A6, A3 complete to A4 and A6,
A4 complete to A5, all other pairs anti-complete except A5-A6, which is
unconstrained.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .detectors import is_very_good_stable_set
from .expansion import bags, expand
from .graph import Graph, build_graph

# 1-based edge lists: (a, b) joins v_a and v_b
_EDGES: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((5, 4), (5, 1), (2, 1), (2, 3), (4, 3)),
    2: ((1, 2), (1, 5), (1, 7), (2, 3), (2, 6), (3, 4), (3, 6), (3, 7), (4, 5), (4, 7)),
    3: ((1, 2), (1, 5), (2, 3), (2, 6), (2, 7), (3, 4), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)),
    4: ((1, 2), (1, 5), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)),
    5: ((1, 2), (1, 5), (1, 7), (2, 3), (2, 6), (3, 4), (3, 6), (3, 7), (4, 5), (4, 7), (5, 6)),
    6: ((1, 2), (1, 5), (2, 3), (2, 6), (2, 8), (3, 4), (3, 6), (4, 5), (4, 7), (4, 8),
        (5, 7), (5, 8), (6, 7), (6, 8)),
    7: ((1, 2), (1, 5), (1, 8), (2, 3), (2, 6), (2, 7), (3, 4), (3, 6), (3, 7), (3, 8),
        (4, 5), (4, 8), (5, 6), (6, 7)),
    8: ((1, 2), (1, 5), (1, 7), (2, 3), (2, 6), (2, 7), (3, 4), (3, 6), (4, 5), (4, 7),
        (4, 8), (5, 8), (6, 8), (7, 8)),
    9: ((1, 2), (1, 5), (1, 7), (2, 3), (2, 6), (3, 4), (3, 6), (3, 7), (4, 5), (4, 7),
        (4, 8), (5, 6), (5, 8), (6, 8)),
    10: ((1, 2), (1, 5), (1, 7), (1, 8), (2, 3), (2, 6), (2, 7), (3, 4), (3, 6), (3, 8),
         (4, 5), (4, 7), (4, 9), (5, 8), (5, 9), (6, 8), (6, 9), (7, 9)),
}

_ORDERS = {1: 5, 2: 7, 3: 7, 4: 7, 5: 7, 6: 8, 7: 8, 8: 8, 9: 8, 10: 9}

MARKED = (0, 3, 5)


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    graph: Graph
    marked: Optional[tuple[int, int, int]]


def base_graph(i: int) -> CatalogEntry:
    if i not in _EDGES:
        raise ValueError(f"catalog id must be in 1..10, got {i}")
    g = build_graph(_ORDERS[i], [(a - 1, b - 1) for a, b in _EDGES[i]])
    return CatalogEntry(i, g, None if i == 1 else MARKED)


def all_entries() -> list[CatalogEntry]:
    return [base_graph(i) for i in range(1, 11)]


def very_good_check(i: int, sizes: Sequence[int], pick: Sequence[int] = (0, 0, 0)) -> bool:
    """Expand G_i by cliques of ``sizes`` and test the marked triple.

    ``pick[j]`` selects which member of the j-th marked bag is used.
    """
    if not 2 <= i <= 10:
        raise ValueError(f"very_good_check needs i in 2..10, got {i}")
    entry = base_graph(i)
    if len(sizes) != entry.graph.n:
        raise ValueError(f"G{i} has {entry.graph.n} vertices, got {len(sizes)} sizes")
    g = expand(entry.graph, sizes)
    groups = bags(sizes)
    triple = [groups[m][pick[j] % len(groups[m])] for j, m in enumerate(MARKED)]
    return is_very_good_stable_set(g, triple)


def random_sizes(i: int, rng: random.Random, max_size: int = 3) -> list[int]:
    return [rng.randint(1, max_size) for _ in range(_ORDERS[i])]
