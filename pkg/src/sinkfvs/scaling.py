"""Sinkhorn-Knopp balancing of the loop-augmented adjacency matrix.

The balanced matrix is never formed during selection.  It is carried as a
pair of scaling vectors ``r`` and ``c`` so that the balanced entry of arc
``(i, j)`` is ``r[i] * c[j]``; one pass costs O(|arcs|).

Exact companions used as oracles on small graphs live here as well:
Ryser's permanent, a brute-force count of disjoint cycle unions, the exact
matrix balance and the entropy of a (doubly) stochastic matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .digraph import DiGraph, GraphError

PERMANENT_MAX_N = 30
ENUMERATION_MAX_N = 20

# relative slack when comparing diagonal values, absorbs summation-order noise
_TIE_RTOL = 1e-12


class GuardError(ValueError):
    """Input exceeds the size limit of an exponential-time routine."""


@dataclass(frozen=True)
class ScalingState:
    r: np.ndarray
    c: np.ndarray
    iterations: int = 0

    @classmethod
    def identity(cls, n: int) -> ScalingState:
        return cls(np.ones(n), np.ones(n), 0)

    def diagonal(self) -> np.ndarray:
        return self.r * self.c


class _Support:
    """Index arrays for the nonzero pattern of an adjacency matrix."""

    __slots__ = ("vertices", "rows", "cols", "n")

    def __init__(self, succ: Mapping[int, Iterable[int]], add_loops: bool):
        verts = sorted(succ)
        pos = {v: i for i, v in enumerate(verts)}
        rows: list[int] = []
        cols: list[int] = []
        for i, v in enumerate(verts):
            targets = sorted(succ[v])
            if add_loops and v not in succ[v]:
                targets.append(v)
            rows.extend([i] * len(targets))
            cols.extend(pos[w] for w in targets)
        self.vertices = verts
        self.n = len(verts)
        self.rows = np.asarray(rows, dtype=np.intp)
        self.cols = np.asarray(cols, dtype=np.intp)

    def row_sums(self, r: np.ndarray, c: np.ndarray) -> np.ndarray:
        return r * np.bincount(self.rows, weights=c[self.cols], minlength=self.n)

    def col_sums(self, r: np.ndarray, c: np.ndarray) -> np.ndarray:
        return c * np.bincount(self.cols, weights=r[self.rows], minlength=self.n)

    def sinkhorn_pass(self, c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        r = 1.0 / np.bincount(self.rows, weights=c[self.cols], minlength=self.n)
        c = 1.0 / np.bincount(self.cols, weights=r[self.rows], minlength=self.n)
        return r, c


def _require_loops(g: DiGraph) -> None:
    missing = [v for v in g.vertices if not g.has_loop(v)]
    if missing:
        raise GraphError(f"vertices without a loop: {missing[:5]}")


def augment_with_loops(g: DiGraph) -> DiGraph:
    """Add a loop at every vertex that lacks one (ones on the diagonal)."""
    return DiGraph({v: set(g.succ[v]) | {v} for v in g.vertices})


def sinkhorn_pass(g_aug: DiGraph, state: ScalingState) -> ScalingState:
    """One row normalisation followed by one column normalisation.

    ``g_aug`` must carry a loop at every vertex so that no sum vanishes.
    Scaling vectors are indexed by position in ``g_aug.vertices``.
    """
    _require_loops(g_aug)
    support = _Support(g_aug.succ, add_loops=False)
    r, c = support.sinkhorn_pass(np.asarray(state.c, dtype=float))
    return ScalingState(r, c, state.iterations + 1)


def sinkhorn_balance(
    g: DiGraph, tol: float = 1e-12, max_iter: int = 1_000_000
) -> ScalingState:
    """Run Sinkhorn on the loop-augmented matrix until row sums are within ``tol`` of 1.

    Column sums are exactly 1 after every pass (up to rounding), so only the
    row sums need watching.  Intended for oracle and property checks; the
    selection path uses a fixed pass count.
    """
    support = _Support(g.succ, add_loops=True)
    n = support.n
    c = np.ones(n)
    r = np.ones(n)
    for it in range(1, max_iter + 1):
        r, c = support.sinkhorn_pass(c)
        if n == 0 or np.max(np.abs(support.row_sums(r, c) - 1.0)) < tol:
            return ScalingState(r, c, it)
    return ScalingState(r, c, max_iter)


def balanced_matrix(g: DiGraph, state: ScalingState) -> np.ndarray:
    """Dense loop-augmented matrix scaled by ``state``, rows/cols in vertex order."""
    support = _Support(g.succ, add_loops=True)
    m = np.zeros((support.n, support.n))
    m[support.rows, support.cols] = state.r[support.rows] * state.c[support.cols]
    return m


def selection_iterations(n: int) -> int:
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def _argmin_smallest_id(values: np.ndarray, vertices: Sequence[int]) -> int:
    lo = values.min()
    slack = abs(lo) * _TIE_RTOL
    for i, v in enumerate(vertices):
        if values[i] <= lo + slack:
            return v
    raise AssertionError("unreachable")


def _sinkhorn_pick(succ: Mapping[int, Iterable[int]]) -> int:
    support = _Support(succ, add_loops=True)
    c = np.ones(support.n)
    for _ in range(selection_iterations(support.n)):
        r, c = support.sinkhorn_pass(c)
    return _argmin_smallest_id(r * c, support.vertices)


def sinkhorn_selection(g: DiGraph) -> int:
    """Vertex with the smallest balanced diagonal entry.

    Adds ones on the diagonal, runs ``max(1, ceil(log2 n))`` Sinkhorn passes
    and returns the argmin of the diagonal; ties go to the smallest id.
    """
    if g.n == 0:
        raise GraphError("selection on an empty graph")
    return _sinkhorn_pick(g.succ)


# ---------------------------------------------------------------------------
# Exact oracles
# ---------------------------------------------------------------------------

def adjacency_matrix(g: DiGraph, loops: bool = False) -> list[list[int]]:
    pos = {v: i for i, v in enumerate(g.vertices)}
    m = [[0] * g.n for _ in range(g.n)]
    for u, v in g.arcs():
        m[pos[u]][pos[v]] = 1
    if loops:
        for i in range(g.n):
            m[i][i] = 1
    return m


def permanent(m: Sequence[Sequence[int]]) -> int:
    """Exact permanent by Ryser's formula with Gray-code subset order.

    Entries must be integers; arithmetic is arbitrary precision.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n > PERMANENT_MAX_N:
        raise GuardError(f"permanent limited to n <= {PERMANENT_MAX_N}, got {n}")
    if n == 0:
        return 1
    rows = [[int(x) for x in row] for row in m]
    # nonzero (row, value) pairs of each column
    columns = [[(i, rows[i][j]) for i in range(n) if rows[i][j]] for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            for i, a in columns[j]:
                sums[i] += a
        else:
            for i, a in columns[j]:
                sums[i] -= a
        prod = math.prod(sums)
        if prod:
            total += -prod if gray.bit_count() & 1 else prod
    return -total if n & 1 else total


def _simple_cycles(g: DiGraph) -> list[int]:
    """Every simple cycle of ``g`` as a vertex bitmask (positions in g.vertices).

    Each cycle is rooted at its smallest vertex and extended only through
    larger vertices, so every cycle appears exactly once.
    """
    pos = {v: i for i, v in enumerate(g.vertices)}
    adj = [[pos[w] for w in g.succ[v]] for v in g.vertices]
    cycles = []
    for s in range(g.n):
        stack = [(s, 1 << s, iter(adj[s]))]
        while stack:
            v, mask, it = stack[-1]
            for w in it:
                if w == s:
                    cycles.append(mask)
                elif w > s and not mask >> w & 1:
                    stack.append((w, mask | 1 << w, iter(adj[w])))
                    break
            else:
                stack.pop()
    return cycles


def count_dcu(g: DiGraph) -> int:
    """Number of nonempty unions of vertex-disjoint cycles, by enumeration."""
    if g.n > ENUMERATION_MAX_N:
        raise GuardError(f"DCU enumeration limited to n <= {ENUMERATION_MAX_N}, got {g.n}")
    by_low: dict[int, list[int]] = {}
    for mask in _simple_cycles(g):
        low = (mask & -mask).bit_length() - 1
        by_low.setdefault(low, []).append(mask)

    memo: dict[tuple[int, int], int] = {}

    def ways(i: int, used: int) -> int:
        # unions (empty included) drawn from cycles whose lowest vertex is >= i
        if i == g.n:
            return 1
        key = (i, used)
        if key not in memo:
            total = ways(i + 1, used)
            if not used >> i & 1:
                for mask in by_low.get(i, ()):
                    if not mask & used:
                        total += ways(i + 1, used | mask)
            memo[key] = total
        return memo[key]

    return ways(0, 0) - 1


def matrix_balance(g: DiGraph) -> np.ndarray:
    """Exact matrix balance of the loop-augmented adjacency matrix.

    Entry ``(i, j)`` is ``a_ij * perm(minor_ij) / perm(A)``: the fraction of
    spanning cycle covers of the augmented graph that use arc ``(i, j)``.
    """
    if g.n > ENUMERATION_MAX_N:
        raise GuardError(f"matrix balance limited to n <= {ENUMERATION_MAX_N}, got {g.n}")
    a = adjacency_matrix(g, loops=True)
    n = g.n
    total = permanent(a)
    out = np.zeros((n, n))
    for i in range(n):
        rest_rows = [a[k] for k in range(n) if k != i]
        for j in range(n):
            if a[i][j]:
                minor = [row[:j] + row[j + 1:] for row in rest_rows]
                out[i, j] = float(Fraction(permanent(minor), total))
    return out


def entropy(m) -> float:
    """``-sum a log a`` with natural log and ``0 log 0 = 0``."""
    a = np.asarray(m, dtype=float)
    if (a < 0).any():
        raise ValueError("entropy needs non-negative entries")
    nz = a[a > 0]
    return float(-(nz * np.log(nz)).sum())
