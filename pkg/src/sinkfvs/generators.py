"""Seeded random digraph generators.

All randomness comes from numpy's PCG64 bit generator seeded with the given
integer, so a (parameters, seed) pair yields the same graph on any platform.
"""
from __future__ import annotations

import numpy as np

from .digraph import DiGraph, GraphError


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_erdos_renyi(n: int, p: float, seed: int) -> DiGraph:
    """Each ordered pair ``(u, v)`` with ``u != v`` becomes an arc with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    draws = _rng(seed).random((n, n)) < p
    np.fill_diagonal(draws, False)
    return DiGraph({u: np.flatnonzero(draws[u]).tolist() for u in range(n)})


def circulant(n: int, k: int) -> DiGraph:
    """Arcs ``i -> i + d (mod n)`` for ``d = 1..k``."""
    return DiGraph({i: [(i + d) % n for d in range(1, k + 1)] for i in range(n)})


def _switch_ok(succ, u, v, x, y) -> bool:
    return (
        v != y
        and u != y
        and x != v
        and v not in succ[x]
        and y not in succ[u]
    )


def two_switch(g: DiGraph, arcs: tuple[tuple[int, int], tuple[int, int]]) -> DiGraph:
    """Replace ``(u, v), (x, y)`` by ``(u, y), (x, v)`` when that keeps the graph simple.

    Returns ``g`` itself when the switch is not allowed.
    """
    (u, v), (x, y) = arcs
    if not g.has_arc(u, v) or not g.has_arc(x, y):
        raise GraphError(f"arcs {arcs} not both present")
    if not _switch_ok(g.succ, u, v, x, y):
        return g
    succ = {w: set(t) for w, t in g.succ.items()}
    succ[u].remove(v)
    succ[x].remove(y)
    succ[u].add(y)
    succ[x].add(v)
    return DiGraph(succ)


def gen_k_regular(n: int, k: int, seed: int) -> DiGraph:
    """k-in, k-out regular digraph: the circulant on offsets ``1..k`` mixed by ``k*k*n`` 2-switches.

    Only accepted switches count.  Candidate pairs are drawn uniformly from
    the current arc list; after ``100*k*k*n`` proposals the generator gives up.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    succ = {i: {(i + d) % n for d in range(1, k + 1)} for i in range(n)}
    arcs = [(i, w) for i in range(n) for w in sorted(succ[i])]
    rng = _rng(seed)
    target = k * k * n
    budget = 100 * target
    accepted = 0
    attempts = 0
    m = len(arcs)
    while accepted < target:
        if attempts >= budget:
            raise GraphError(
                f"only {accepted} of {target} switches accepted after {budget} proposals"
            )
        # draw in blocks to keep the per-proposal overhead low
        picks = rng.integers(0, m, size=(1024, 2))
        for a, b in picks:
            if accepted >= target or attempts >= budget:
                break
            attempts += 1
            if a == b:
                continue
            u, v = arcs[a]
            x, y = arcs[b]
            if not _switch_ok(succ, u, v, x, y):
                continue
            succ[u].remove(v)
            succ[x].remove(y)
            succ[u].add(y)
            succ[x].add(v)
            arcs[a] = (u, y)
            arcs[b] = (x, v)
            accepted += 1
    return DiGraph(succ)
