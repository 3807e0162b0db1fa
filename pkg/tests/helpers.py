"""Independent oracles and fixtures shared by the test modules.

Nothing here calls into the solver code paths it is used to check: cycle
detection is a recursive DFS, permanents come from permutation sums and
minimum FVS sizes from plain subset enumeration.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations

from sinkfvs import DiGraph, from_edge_list


def random_digraph(seed: int, n: int, p: float, loops: bool = False) -> DiGraph:
    rng = random.Random(seed)
    arcs = [
        (u, v) for u in range(n) for v in range(n)
        if (u != v or loops) and rng.random() < p
    ]
    return from_edge_list(n, arcs)


def figure_one_graph(t: int) -> tuple[DiGraph, dict[str, int]]:
    """Hub ``z`` attached to ``t`` four-vertex gadgets; ``z`` is in no minimum FVS for t >= 2."""
    names = {"z": 0}
    arcs = []
    for i in range(1, t + 1):
        a, b, c, d = (4 * (i - 1) + k for k in (1, 2, 3, 4))
        names.update({f"a{i}": a, f"b{i}": b, f"c{i}": c, f"d{i}": d})
        arcs += [
            (0, a), (0, c),
            (a, b), (a, d),
            (b, c), (b, 0),
            (c, b), (c, d),
            (d, a), (d, 0),
        ]
    return from_edge_list(4 * t + 1, arcs), names


def dfs_has_cycle(succ, removed=frozenset()) -> bool:
    colour = {}

    def visit(v) -> bool:
        colour[v] = 1
        for w in succ[v]:
            if w in removed:
                continue
            state = colour.get(w)
            if state == 1 or (state is None and visit(w)):
                return True
        colour[v] = 2
        return False

    return any(v not in removed and v not in colour and visit(v) for v in succ)


def brute_min_fvs_size(g: DiGraph) -> int:
    succ = {v: list(g.succ[v]) for v in g.vertices}
    for k in range(g.n + 1):
        for combo in combinations(g.vertices, k):
            if not dfs_has_cycle(succ, frozenset(combo)):
                return k
    raise AssertionError("unreachable")


def all_fvs_of_size(g: DiGraph, k: int) -> list[tuple[int, ...]]:
    succ = {v: list(g.succ[v]) for v in g.vertices}
    return [c for c in combinations(g.vertices, k) if not dfs_has_cycle(succ, frozenset(c))]


def vertices_on_cycles(g: DiGraph) -> set[int]:
    """Vertices that can reach themselves, by a separate search per vertex."""
    out = set()
    for v in g.vertices:
        seen, stack = set(), list(g.succ[v])
        while stack:
            w = stack.pop()
            if w == v:
                out.add(v)
                break
            if w not in seen:
                seen.add(w)
                stack.extend(g.succ[w])
    return out


def brute_permanent(m) -> int:
    n = len(m)
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= m[i][sigma[i]]
            if not prod:
                break
        total += prod
    return total
