"""Levy-Low reductions: loop, in0_out0 and in1_out1, applied to a fixpoint."""
from __future__ import annotations

import heapq
from typing import Iterable

from .digraph import DiGraph, _exclude_vertex, _remove_vertex


def ll_reduce(g: DiGraph) -> tuple[DiGraph, list[int]]:
    """Reduce ``g`` until no rule applies.

    Returns the reduced graph and the forced vertices (those removed by the
    loop rule, which belong to every FVS) in the order they were forced.
    The input graph is not modified.
    """
    succ, pred = g.adjacency_sets()
    forced: list[int] = []
    reduce_in_place(succ, pred, forced)
    return DiGraph(succ), forced


def reduce_in_place(
    succ: dict[int, set[int]],
    pred: dict[int, set[int]],
    forced: list[int],
    seeds: Iterable[int] | None = None,
) -> None:
    """Apply the reductions to mutable adjacency maps.

    Candidates are processed smallest id first; a vertex whose neighbourhood
    changes is re-queued.  ``seeds`` restricts the initial candidates, which
    is valid when only those vertices could have become reducible (e.g. the
    neighbours of a freshly deleted vertex).  Forced vertices are appended to
    ``forced``.
    """
    heap = sorted(succ if seeds is None else (v for v in seeds if v in succ))
    queued = set(heap)
    while heap:
        v = heapq.heappop(heap)
        queued.discard(v)
        if v not in succ:
            continue
        outs = succ[v]
        ins = pred[v]
        if v in outs:
            forced.append(v)
            touched = _remove_vertex(succ, pred, v)
        elif not outs or not ins:
            touched = _remove_vertex(succ, pred, v)
        elif len(outs) == 1 or len(ins) == 1:
            touched = _exclude_vertex(succ, pred, v)
        else:
            continue
        for u in touched:
            if u not in queued:
                queued.add(u)
                heapq.heappush(heap, u)
