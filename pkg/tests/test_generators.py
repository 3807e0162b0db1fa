import math

import pytest

from sinkfvs import GraphError, from_edge_list, gen_erdos_renyi, gen_k_regular, two_switch
from sinkfvs.generators import circulant
from sinkfvs.graphio import write_graph


def test_er_extremes():
    assert gen_erdos_renyi(10, 0.0, 1).num_arcs == 0
    full = gen_erdos_renyi(10, 1.0, 1)
    assert full.num_arcs == 90
    assert not any(full.has_loop(v) for v in full.vertices)


def test_er_deterministic():
    assert gen_erdos_renyi(40, 0.2, 5) == gen_erdos_renyi(40, 0.2, 5)
    assert gen_erdos_renyi(40, 0.2, 5) != gen_erdos_renyi(40, 0.2, 6)


def test_er_rejects_bad_p():
    with pytest.raises(ValueError):
        gen_erdos_renyi(5, 1.5, 0)


def test_er_arc_count_mean():
    n, p, reps = 100, 0.05, 200
    counts = [gen_erdos_renyi(n, p, s).num_arcs for s in range(reps)]
    mean = sum(counts) / reps
    sd = math.sqrt(sum((c - mean) ** 2 for c in counts) / (reps - 1))
    assert abs(mean - p * n * (n - 1)) <= 3 * sd / math.sqrt(reps)


def test_circulant_k1_is_hamiltonian_cycle():
    g = circulant(6, 1)
    assert g.arcs() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]


@pytest.mark.parametrize("n, k", [(10, 1), (10, 3), (30, 5), (12, 6)])
def test_k_regular_degrees(n, k):
    for seed in range(5):
        g = gen_k_regular(n, k, seed)
        assert all(g.out_degree(v) == k and g.in_degree(v) == k for v in g.vertices)
        assert not any(g.has_loop(v) for v in g.vertices)


def test_k_regular_is_mixed_and_reproducible():
    g = gen_k_regular(40, 3, 9)
    assert g != circulant(40, 3)
    assert write_graph(g) == write_graph(gen_k_regular(40, 3, 9))
    assert g != gen_k_regular(40, 3, 10)


def test_k_regular_rejects_bad_k():
    with pytest.raises(ValueError):
        gen_k_regular(5, 5, 0)
    with pytest.raises(ValueError):
        gen_k_regular(5, 0, 0)


def test_k_regular_without_any_legal_switch_gives_up():
    # the complete digraph admits no switch at all
    with pytest.raises(GraphError):
        gen_k_regular(4, 3, 0)


def test_two_switch_valid():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    h = two_switch(g, ((0, 1), (2, 3)))
    assert h.arcs() == [(0, 3), (2, 1)]
    assert [h.out_degree(v) for v in range(4)] == [g.out_degree(v) for v in range(4)]
    assert [h.in_degree(v) for v in range(4)] == [g.in_degree(v) for v in range(4)]


def test_two_switch_same_head_is_noop():
    g = from_edge_list(3, [(0, 2), (1, 2)])
    assert two_switch(g, ((0, 2), (1, 2))) is g


def test_two_switch_existing_arc_is_noop():
    g = from_edge_list(4, [(0, 1), (0, 3), (2, 3)])
    assert two_switch(g, ((0, 1), (2, 3))) is g


def test_two_switch_would_make_loop():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    # (0,1),(1,2) -> (0,2),(1,1)
    assert two_switch(g, ((0, 1), (1, 2))) is g


def test_two_switch_absent_arc():
    with pytest.raises(GraphError):
        two_switch(from_edge_list(3, [(0, 1)]), ((0, 1), (1, 2)))
