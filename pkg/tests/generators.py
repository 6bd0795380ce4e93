"""Random (gem, co-gem)-free instances."""

import random

from vcrit.catalog import base_graph, random_sizes
from vcrit.expansion import expand, expand_c5
from vcrit.graph import Graph, complement, disjoint_union, empty_graph, relabel


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


def random_cograph(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return empty_graph(1)
    a = rng.randint(1, n - 1)
    g = disjoint_union(random_cograph(rng, a), random_cograph(rng, n - a))
    return complement(g) if rng.random() < 0.5 else g


def random_c5_expansion(rng: random.Random, max_n: int = 22, max_bag: int = 5) -> Graph:
    while True:
        p = [rng.randint(1, max_bag) for _ in range(5)]
        if sum(p) <= max_n:
            return shuffled(expand_c5(p), rng)


def random_catalog_expansion(rng: random.Random) -> Graph:
    i = rng.randint(1, 10)
    return shuffled(expand(base_graph(i).graph, random_sizes(i, rng)), rng)


def in_class_corpus(rng: random.Random, count: int, catalog: bool = False) -> list[Graph]:
    out = []
    for idx in range(count):
        kind = idx % (3 if catalog else 2)
        if kind == 0:
            out.append(random_c5_expansion(rng))
        elif kind == 1:
            out.append(shuffled(random_cograph(rng, rng.randint(1, 22)), rng))
        else:
            out.append(random_catalog_expansion(rng))
    return out
