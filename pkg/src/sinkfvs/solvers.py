"""Feedback vertex set pipelines and the exact small-instance solver.

Every heuristic follows the same shape: reduce, pick a vertex, delete it,
reduce again, and repeat until nothing cyclic is left; the collected set
is then pruned to a minimal FVS.  The pipelines differ only in how a vertex
is picked and in whether the graph is split into strongly connected
components between picks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .digraph import (
    DiGraph,
    GraphError,
    _has_cycle,
    _on_cycle,
    _remove_vertex,
    _split_sccs,
    strongly_connected_components,
)
from .reductions import ll_reduce, reduce_in_place
from .scaling import GuardError, _sinkhorn_pick

EXACT_MAX_KERNEL = 16

Selector = Callable[[Mapping[int, Iterable[int]], Mapping[int, Iterable[int]]], int]


@dataclass(frozen=True)
class FvsResult:
    """Outcome of one pipeline run.

    ``selected`` is the full trace in the order vertices entered the set,
    including vertices forced by the loop reduction; ``final`` is the sorted
    minimal FVS left after redundancy removal.
    """

    selected: tuple[int, ...]
    final: tuple[int, ...]
    algorithm: str

    @property
    def size(self) -> int:
        return len(self.final)


# ---------------------------------------------------------------------------
# Selection rules
# ---------------------------------------------------------------------------

def _maxdeg_pick(succ, pred) -> int:
    best, best_deg = None, -1
    for v in sorted(succ):
        d = min(len(succ[v]), len(pred[v]))
        if d > best_deg:
            best, best_deg = v, d
    return best


def maxdeg_selection(g: DiGraph) -> int:
    """Vertex maximising ``min(out-degree, in-degree)``; ties to the smallest id."""
    if g.n == 0:
        raise GraphError("selection on an empty graph")
    return _maxdeg_pick(g.succ, g.pred)


def _stationary(succ: Mapping[int, Iterable[int]]) -> np.ndarray:
    verts = sorted(succ)
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    rows, cols = [], []
    for i, v in enumerate(verts):
        targets = sorted(succ[v])
        rows.extend([i] * len(targets))
        cols.extend(pos[w] for w in targets)
    rows = np.asarray(rows, dtype=np.intp)
    cols = np.asarray(cols, dtype=np.intp)
    outdeg = np.bincount(rows, minlength=n).astype(float)
    inv = 1.0 / outdeg
    x = np.full(n, 1.0 / n)
    # lazy walk (P + I) / 2 has the same stationary vector and is aperiodic
    for _ in range(20 * n):
        step = np.bincount(cols, weights=(x * inv)[rows], minlength=n)
        nxt = 0.5 * (x + step)
        delta = np.abs(nxt - x).sum()
        x = nxt
        if delta < 1e-12:
            break
    return x / x.sum()


def stationary_distribution(g: DiGraph) -> np.ndarray:
    """Stationary vector of the row-normalised adjacency matrix of a strongly connected graph.

    Entries follow ``g.vertices`` order.
    """
    comps = strongly_connected_components(g.succ)
    if g.n < 2 or len(comps) != 1:
        raise GraphError("stationary distribution needs a strongly connected graph with n >= 2")
    return _stationary(g.succ)


def _mfvsmean_pick(succ, pred) -> int:
    # largest summed mass == smallest mean return time
    pi = _stationary(succ) + _stationary(pred)
    cutoff = pi.max() * (1.0 - 1e-12)
    for i, v in enumerate(sorted(succ)):
        if pi[i] >= cutoff:
            return v
    raise AssertionError("unreachable")


def mfvsmean_selection(g: DiGraph) -> int:
    """Vertex maximising the summed stationary mass of ``g`` and its reverse."""
    comps = strongly_connected_components(g.succ)
    if g.n < 2 or len(comps) != 1:
        raise GraphError("MFVSmean selection needs a strongly connected graph with n >= 2")
    return _mfvsmean_pick(g.succ, g.pred)


def _sinkhorn_select(succ, pred) -> int:
    return _sinkhorn_pick(succ)


# ---------------------------------------------------------------------------
# Pipelines
# ---------------------------------------------------------------------------

def _delete_and_reduce(succ, pred, v, trace) -> None:
    touched = _remove_vertex(succ, pred, v)
    trace.append(v)
    reduce_in_place(succ, pred, trace, seeds=touched)


def _run_scc_pipeline(g: DiGraph, pick: Selector, label: str) -> FvsResult:
    succ, pred = g.adjacency_sets()
    trace: list[int] = []
    reduce_in_place(succ, pred, trace)
    pending = _split_sccs(succ, pred)
    while pending:
        s, p = pending.pop(0)
        if len(s) == 1 and not any(v in s[v] for v in s):
            continue
        v = pick(s, p)
        _delete_and_reduce(s, p, v, trace)
        pending[:0] = _split_sccs(s, p)
    final = remove_redundant(g, trace)
    return FvsResult(tuple(trace), final, label)


def fvs_sinkhorn(g: DiGraph) -> FvsResult:
    """Matrix-scaling heuristic with a strongly-connected-component worklist."""
    return _run_scc_pipeline(g, _sinkhorn_select, "sh")


def fvs_maxdeg(g: DiGraph) -> FvsResult:
    return _run_scc_pipeline(g, _maxdeg_pick, "maxdeg")


def fvs_mfvsmean(g: DiGraph) -> FvsResult:
    return _run_scc_pipeline(g, _mfvsmean_pick, "mfvsmean")


def fvs_sinkhorn_mod(g: DiGraph) -> FvsResult:
    """Matrix-scaling heuristic on the whole reduced graph, without SCC splitting."""
    succ, pred = g.adjacency_sets()
    trace: list[int] = []
    reduce_in_place(succ, pred, trace)
    while succ:
        v = _sinkhorn_pick(succ)
        _delete_and_reduce(succ, pred, v, trace)
    final = remove_redundant(g, trace)
    return FvsResult(tuple(trace), final, "sh-mod")


def is_fvs(g: DiGraph, s: Iterable[int]) -> bool:
    return not _has_cycle(g.succ, skip=set(s))


def is_minimal_fvs(g: DiGraph, s: Iterable[int]) -> bool:
    s = set(s)
    if not is_fvs(g, s):
        return False
    return all(_on_cycle(g.succ, v, blocked=s - {v}) for v in s)


def remove_redundant(g: DiGraph, selected: Sequence[int]) -> tuple[int, ...]:
    """Prune an FVS to a minimal one, scanning in reverse selection order.

    A vertex is dropped when putting it back into ``g`` minus the current set
    closes no cycle.  Since ``g`` minus the current set is acyclic, that is
    the same as asking whether the graph stays acyclic without it.

    Raises:
        GraphError: if ``selected`` is not an FVS of ``g``.
    """
    unknown = [v for v in selected if v not in g]
    if unknown:
        raise GraphError(f"unknown vertices {unknown[:5]}")
    current = set(selected)
    if not is_fvs(g, current):
        raise GraphError("selected vertices do not form a feedback vertex set")
    for v in reversed(selected):
        if v not in current:
            continue
        current.discard(v)
        if _on_cycle(g.succ, v, blocked=current):
            current.add(v)
    return tuple(sorted(current))


# ---------------------------------------------------------------------------
# Exact solver
# ---------------------------------------------------------------------------

def _acyclic_without(pred_masks: list[int], alive: int) -> bool:
    # repeatedly peel vertices with no live predecessor
    while alive:
        peeled = 0
        rest = alive
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if not pred_masks[i] & alive:
                peeled |= low
            rest ^= low
        if not peeled:
            return False
        alive &= ~peeled
    return True


def exact_min_fvs(g: DiGraph, max_kernel: int = EXACT_MAX_KERNEL) -> tuple[int, ...]:
    """A minimum FVS: reduce, then search kernel subsets by increasing size.

    Raises:
        GuardError: if the reduced kernel has more than ``max_kernel`` vertices.
    """
    kernel, forced = ll_reduce(g)
    if kernel.n > max_kernel:
        raise GuardError(f"exact search limited to kernels of n <= {max_kernel}, got {kernel.n}")
    verts = kernel.vertices
    pos = {v: i for i, v in enumerate(verts)}
    pred_masks = [0] * kernel.n
    for u, v in kernel.arcs():
        pred_masks[pos[v]] |= 1 << pos[u]
    full = (1 << kernel.n) - 1
    for size in range(kernel.n + 1):
        # any nonempty reduced kernel is cyclic, so size 0 only fits the empty one
        for combo in combinations(range(kernel.n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if _acyclic_without(pred_masks, full & ~mask):
                return tuple(sorted(forced + [verts[i] for i in combo]))
    raise AssertionError("unreachable: the full vertex set is an FVS")


PIPELINES: dict[str, Callable[[DiGraph], FvsResult]] = {
    "sh": fvs_sinkhorn,
    "sh-mod": fvs_sinkhorn_mod,
    "maxdeg": fvs_maxdeg,
    "mfvsmean": fvs_mfvsmean,
}


def solve(g: DiGraph, algo: str) -> FvsResult:
    if algo == "exact":
        final = exact_min_fvs(g)
        return FvsResult(final, final, "exact")
    try:
        pipeline = PIPELINES[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}") from None
    return pipeline(g)
