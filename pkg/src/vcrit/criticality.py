"""Definition-level k-vertex-criticality testing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import chromatic_number, k_colorable
from .detectors import twin_classes
from .graph import Graph, induced_subgraph


@dataclass(frozen=True)
class CriticalityReport:
    """Outcome of a criticality test at budget ``k``.

    ``per_vertex[v]`` is chi(G - v).  When ``exact`` is False the value is
    only resolved to ``k - 1`` (meaning "at most k - 1") or ``k``, and it is
    left empty when chi(G) != k since the verdict is already decided.
    """

    k: int
    chi: int
    per_vertex: dict[int, int] = field(default_factory=dict)
    exact: bool = False

    @property
    def verdict(self) -> bool:
        return self.chi == self.k and len(self.per_vertex) > 0 and all(
            c < self.k for c in self.per_vertex.values()
        )

    def __bool__(self) -> bool:
        return self.verdict


def _deleted(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def is_k_vertex_critical(g: Graph, k: int, exact: bool = False) -> CriticalityReport:
    """Test chi(G) = k and chi(G - v) < k for every vertex v.

    One deletion is tested per class of true twins; deleting either of two
    true twins leaves isomorphic graphs.
    """
    if g.n < 1 or k < 1:
        raise ValueError("criticality needs n >= 1 and k >= 1")
    chi, _ = chromatic_number(g)
    per_vertex: dict[int, int] = {}
    if chi == k or exact:
        for cls in twin_classes(g):
            h = _deleted(g, cls[0])
            if exact:
                value = chromatic_number(h)[0]
            elif k == 1:
                value = 0 if h.n == 0 else 1
            else:
                value = k - 1 if k_colorable(h, k - 1) is not None else k
            for v in cls:
                per_vertex[v] = value
    return CriticalityReport(k=k, chi=chi, per_vertex=per_vertex, exact=exact)
