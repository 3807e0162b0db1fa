import random
from collections import Counter

import pytest

from sinkfvs import (
    GraphError,
    exact_min_fvs,
    fvs_sinkhorn,
    from_edge_list,
    gen_erdos_renyi,
    lower_bound,
    pack_cycles,
)
from sinkfvs.bounds import prefix_bound

from helpers import brute_min_fvs_size, figure_one_graph, random_digraph


def cycle(k, offset=0):
    return [(offset + i, offset + (i + 1) % k) for i in range(k)]


def check_certificate(g, cert):
    hits = Counter(v for c in cert.cycles for v in c)
    for c in cert.cycles:
        assert len(set(c)) == len(c)
        for a, b in zip(c, c[1:] + c[:1]):
            assert g.has_arc(a, b)
    assert all(cert.counts[v] == hits.get(v, 0) for v in g.vertices)
    assert max(cert.counts.values(), default=0) <= cert.k == 2
    top = sorted(cert.counts.values(), reverse=True)
    assert sum(top[:cert.t]) >= len(cert.cycles)
    if cert.t:
        assert sum(top[:cert.t - 1]) < len(cert.cycles)


def test_prefix_bound():
    assert prefix_bound([2, 2, 1, 1, 0], 5) == 3
    assert prefix_bound([1, 1], 0) == 0
    assert prefix_bound([2, 1], 2) == 1


def test_single_cycle():
    g = from_edge_list(5, cycle(5))
    cert = pack_cycles(g, [2])
    assert len(cert.cycles) == 1
    assert cert.cycles[0] == (2, 3, 4, 0, 1)
    assert cert.t == 1
    assert cert.ratio == 1.0
    assert lower_bound(g, [2]).t == 1


@pytest.mark.parametrize("m", [1, 2, 5])
def test_disjoint_cycles(m):
    g = from_edge_list(3 * m, [a for i in range(m) for a in cycle(3, 3 * i)])
    s = [3 * i for i in range(m)]
    first = pack_cycles(g, s)
    assert len(first.cycles) == m and first.t == m and first.ratio == 1.0
    cert = lower_bound(g, s)
    assert cert == first


def test_loop_cycle():
    g = from_edge_list(2, [(0, 0), (0, 1), (1, 0)])
    cert = lower_bound(g, [0])
    check_certificate(g, cert)
    assert cert.t == 1
    assert len(cert.cycles) == 2


def test_figure_one_minimum_fvs():
    g, names = figure_one_graph(2)
    s = [names[k] for k in ("b1", "d1", "b2", "d2")]
    cert = lower_bound(g, s)
    check_certificate(g, cert)
    # four 2-cycles in round one, then two cycles through z that saturate it
    assert [len(c) for c in cert.cycles] == [2, 2, 2, 2, 3, 3]
    assert cert.t == 3 <= 4
    assert cert.ratio == pytest.approx(4 / 3)
    assert cert.epsilon == pytest.approx(len(cert.cycles) / 4)


def test_rejects_non_fvs():
    with pytest.raises(GraphError):
        lower_bound(from_edge_list(3, cycle(3)), [])


def test_empty_fvs_on_dag():
    cert = lower_bound(from_edge_list(2, [(0, 1)]), [])
    assert cert.t == 0 and cert.ratio == 1.0 and cert.cycles == ()


def test_er_instance_with_sinkhorn_fvs():
    g = gen_erdos_renyi(50, 0.04, 11)
    s = fvs_sinkhorn(g).selected
    final = fvs_sinkhorn(g).final
    cert = lower_bound(g, final)
    check_certificate(g, cert)
    assert 1 <= cert.t <= len(exact_min_fvs(g, max_kernel=16)) <= len(final)
    assert cert.ratio >= 1.0
    assert len(s) >= len(final)


@pytest.mark.parametrize("seed", range(120))
def test_sound_against_brute_force(seed):
    rng = random.Random(seed)
    g = random_digraph(9000 + seed, rng.randint(2, 12), rng.uniform(0.1, 0.45))
    fvs = fvs_sinkhorn(g).final
    cert = lower_bound(g, fvs)
    check_certificate(g, cert)
    tau = brute_min_fvs_size(g)
    assert cert.t <= tau
    if tau:
        assert cert.t >= 1
        assert cert.ratio >= 1.0
