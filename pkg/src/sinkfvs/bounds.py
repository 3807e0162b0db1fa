"""Cycle-packing lower bound on the minimum FVS size.

Given any collection X of cycles and the number of cycles through each
vertex, every FVS must cover X, so at least ``t`` vertices are needed where
``t`` is the smallest prefix of the largest counts summing to ``|X|``.  The
packing below collects cycles through the vertices of a known FVS while
capping each vertex at ``k = 2`` cycles.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace
from typing import Sequence

from .digraph import DiGraph, GraphError
from .solvers import is_fvs

OVERLAP = 2


@dataclass(frozen=True)
class LowerBoundCertificate:
    cycles: tuple[tuple[int, ...], ...]
    counts: dict[int, int]
    t: int
    fvs_size: int
    k: int = OVERLAP

    @property
    def ratio(self) -> float:
        """``|S| / t``, an upper bound on ``|S| / tau``; ``inf`` when nothing was packed."""
        if self.t == 0:
            return 1.0 if self.fvs_size == 0 else math.inf
        return self.fvs_size / self.t

    @property
    def epsilon(self) -> float:
        return len(self.cycles) / self.fvs_size if self.fvs_size else 0.0


def prefix_bound(counts, num_cycles: int) -> int:
    """Smallest t such that the t largest counts sum to at least ``num_cycles``."""
    total = 0
    t = 0
    for c in sorted(counts, reverse=True):
        if total >= num_cycles:
            break
        total += c
        t += 1
    return t


def _shortest_cycle_through(succ, s: int, blocked: set) -> list[int] | None:
    """BFS from ``s``; returns ``[s, ..., u]`` with ``u -> s`` closing the cycle."""
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in sorted(succ[u]):
            if w == s:
                path = [u]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    return None


def pack_cycles(g: DiGraph, s: Sequence[int]) -> LowerBoundCertificate:
    """One packing pass over ``s`` in the given order.

    Round-robin over ``s``: look for a shortest cycle through ``s[j]`` that
    avoids the rest of ``s``.  A found cycle bumps the weights of its
    vertices; vertices that reach weight ``k`` are deleted from the working
    graph together with the two cycle arcs at ``s[j]``.  The pass ends after
    a full round without a new cycle.
    """
    s = list(s)
    succ, pred = g.adjacency_sets()
    weight = {v: 0 for v in g.vertices}
    cycles: list[tuple[int, ...]] = []
    members = set(s)
    misses = 0
    i = 0
    while s and misses < len(s):
        sj = s[i % len(s)]
        i += 1
        cycle = None
        if sj in succ:
            cycle = _shortest_cycle_through(succ, sj, members - {sj})
        if cycle is None:
            misses += 1
            continue
        misses = 0
        full = [v for v in cycle if weight[v] == OVERLAP - 1]
        for v in cycle:
            weight[v] += 1
        cycles.append(tuple(cycle))
        # arcs of the cycle entering and leaving sj
        for a, b in ((cycle[-1], sj), (sj, cycle[1 % len(cycle)])):
            if a in succ and b in succ[a]:
                succ[a].discard(b)
                pred[b].discard(a)
        for v in full:
            for w in succ.pop(v):
                if w != v:
                    pred[w].discard(v)
            for u in pred.pop(v):
                if u != v:
                    succ[u].discard(v)
    t = prefix_bound(weight.values(), len(cycles))
    return LowerBoundCertificate(tuple(cycles), weight, t, len(s))


def lower_bound(g: DiGraph, s: Sequence[int]) -> LowerBoundCertificate:
    """Pack twice: once over ``s``, then over the members of ``s`` that got weight.

    The certificate with the larger ``t`` is kept; its ratio is measured
    against the full ``s``.

    Raises:
        GraphError: if ``s`` is not an FVS of ``g``.
    """
    s = list(s)
    if any(v not in g for v in s) or not is_fvs(g, s):
        raise GraphError("lower bound needs a feedback vertex set of the graph")
    best = pack_cycles(g, s)
    used = [v for v in s if best.counts[v] > 0]
    if len(used) != len(s):
        second = pack_cycles(g, used)
        if second.t > best.t:
            best = second
    return replace(best, fvs_size=len(s))
