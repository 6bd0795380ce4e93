import random

import pytest

from vcrit.catalog import MARKED, all_entries, base_graph, random_sizes, very_good_check
from vcrit.detectors import family, freeness_witness, is_stable
from vcrit.graph import cycle_graph


def test_g1_is_c5():
    e = base_graph(1)
    assert e.graph == cycle_graph(5) and e.marked is None


@pytest.mark.parametrize(
    "i, order, size",
    [(1, 5, 5), (2, 7, 10), (3, 7, 11), (4, 7, 10), (5, 7, 11), (6, 8, 14),
     (7, 8, 14), (8, 8, 14), (9, 8, 14), (10, 9, 18)],
)
def test_orders_and_sizes(i, order, size):
    g = base_graph(i).graph
    assert (g.n, g.edge_count()) == (order, size)


def test_out_of_range():
    with pytest.raises(ValueError):
        base_graph(11)
    with pytest.raises(ValueError):
        very_good_check(1, [1] * 5)
    with pytest.raises(ValueError):
        very_good_check(2, [1] * 6)


def test_gem_and_co_gem_free():
    for e in all_entries():
        assert freeness_witness(e.graph, family("gem")) is None
        assert freeness_witness(e.graph, family("co-gem")) is None


def test_marked_vertices_are_stable():
    for i in range(2, 11):
        assert base_graph(i).marked == MARKED
        assert is_stable(base_graph(i).graph, MARKED)


def test_very_good_examples():
    assert very_good_check(2, [1] * 7)
    assert very_good_check(10, [1] * 9)
    assert very_good_check(3, [3, 2, 1, 3, 2, 3, 1])


@pytest.mark.parametrize("i", range(2, 11))
def test_very_good_on_random_expansions(i):
    rng = random.Random(i)
    for _ in range(20):
        sizes = random_sizes(i, rng)
        pick = [rng.randrange(3) for _ in range(3)]
        assert very_good_check(i, sizes, pick)
