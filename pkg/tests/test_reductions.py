import pytest

from sinkfvs import from_edge_list, ll_reduce

from helpers import brute_min_fvs_size, random_digraph


def test_three_cycle_reduces_to_one_forced_vertex():
    reduced, forced = ll_reduce(from_edge_list(3, [(0, 1), (1, 2), (2, 0)]))
    assert reduced.n == 0
    assert len(forced) == 1


def test_path_reduces_away():
    reduced, forced = ll_reduce(from_edge_list(3, [(0, 1), (1, 2)]))
    assert reduced.n == 0
    assert forced == []


def test_loop_is_forced():
    reduced, forced = ll_reduce(from_edge_list(1, [(0, 0)]))
    assert reduced.n == 0
    assert forced == [0]


def test_input_untouched():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    ll_reduce(g)
    assert g.arcs() == [(0, 1), (1, 2), (2, 0)]


def test_dense_core_is_kept():
    # complete digraph on 3 vertices: every vertex has in/out degree 2
    g = from_edge_list(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    reduced, forced = ll_reduce(g)
    assert reduced == g
    assert forced == []


@pytest.mark.parametrize("seed", range(80))
def test_reduction_preserves_tau(seed):
    g = random_digraph(1000 + seed, n=4 + seed % 9, p=0.15 + (seed % 6) * 0.07)
    reduced, forced = ll_reduce(g)
    assert set(forced).isdisjoint(reduced.vertices)
    for v in reduced.vertices:
        assert not reduced.has_loop(v)
        assert min(reduced.in_degree(v), reduced.out_degree(v)) >= 2
    assert brute_min_fvs_size(g) == len(forced) + brute_min_fvs_size(reduced)
    if reduced.n == 0:
        assert len(forced) == brute_min_fvs_size(g)
