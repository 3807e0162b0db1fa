"""Simple digraphs keyed by stable external vertex ids.

Vertices are identified by their id in the original input graph, so a
subgraph (an SCC, a reduced kernel, ...) reports vertices in the caller's
numbering without any translation table.  Loops are allowed, parallel arcs
are not.

The algorithms in this package mostly work on plain ``dict[int, set[int]]``
successor/predecessor maps; the helpers prefixed with an underscore operate
on those in place.  :class:`DiGraph` is the immutable public face.
"""
from __future__ import annotations

from collections import deque
from types import MappingProxyType
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Raised for malformed graphs or references to absent vertices/arcs."""


class DiGraph:
    """Immutable digraph with sorted adjacency.

    ``succ[v]`` and ``pred[v]`` are sorted tuples of vertex ids.  The vertex
    ids double as the external ids of the graph; a freshly built graph on
    ``n`` vertices uses ``0..n-1``.
    """

    __slots__ = ("_succ", "_pred", "_vertices")

    def __init__(self, succ: Mapping[int, Iterable[int]] | None = None):
        succ = succ or {}
        verts = sorted(succ)
        out: dict[int, tuple[int, ...]] = {}
        inn: dict[int, list[int]] = {v: [] for v in verts}
        for v in verts:
            targets = sorted(set(succ[v]))
            for w in targets:
                if w not in inn:
                    raise GraphError(f"arc ({v}, {w}) points to an unknown vertex")
                inn[w].append(v)
            out[v] = tuple(targets)
        self._vertices = tuple(verts)
        self._succ = MappingProxyType(out)
        # predecessors are appended in ascending source order, already sorted
        self._pred = MappingProxyType({v: tuple(p) for v, p in inn.items()})

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    ext_id = vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def succ(self) -> Mapping[int, tuple[int, ...]]:
        return self._succ

    @property
    def pred(self) -> Mapping[int, tuple[int, ...]]:
        return self._pred

    @property
    def num_arcs(self) -> int:
        return sum(len(t) for t in self._succ.values())

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (tail, head)."""
        return [(v, w) for v in self._vertices for w in self._succ[v]]

    def has_arc(self, u: int, v: int) -> bool:
        return u in self._succ and v in self._succ[u]

    def has_loop(self, v: int) -> bool:
        return self.has_arc(v, v)

    def out_degree(self, v: int) -> int:
        return len(self._succ[v])

    def in_degree(self, v: int) -> int:
        return len(self._pred[v])

    def adjacency_sets(self) -> tuple[dict[int, set[int]], dict[int, set[int]]]:
        """Mutable copies of the successor and predecessor maps."""
        return (
            {v: set(t) for v, t in self._succ.items()},
            {v: set(t) for v, t in self._pred.items()},
        )

    def reversed(self) -> DiGraph:
        return DiGraph(self._pred)

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return dict(self._succ) == dict(other._succ)

    def __hash__(self) -> int:
        return hash(tuple(self._succ.items()))

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, arcs={self.num_arcs})"


def from_edge_list(n: int, arcs: Iterable[tuple[int, int]]) -> DiGraph:
    """Build a digraph on vertices ``0..n-1``.

    Raises:
        GraphError: on a duplicate arc or an id outside ``[0, n)``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    succ: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
        if v in succ[u]:
            raise GraphError(f"duplicate arc ({u}, {v})")
        succ[u].add(v)
    return DiGraph(succ)


def induced_subgraph(g: DiGraph, keep: Iterable[int]) -> DiGraph:
    keep = set(keep)
    missing = keep.difference(g.succ)
    if missing:
        raise GraphError(f"unknown vertices {sorted(missing)}")
    return DiGraph({v: [w for w in g.succ[v] if w in keep] for v in keep})


def remove_vertices(g: DiGraph, drop: Iterable[int]) -> DiGraph:
    drop = set(drop)
    return induced_subgraph(g, [v for v in g.vertices if v not in drop])


def exclude(g: DiGraph, v: int) -> DiGraph:
    """Remove ``v`` and connect every predecessor to every successor.

    Arcs already present are not duplicated; a vertex that is both a
    predecessor and a successor of ``v`` receives a loop.
    """
    if v not in g:
        raise GraphError(f"vertex {v} not in graph")
    succ, pred = g.adjacency_sets()
    _exclude_vertex(succ, pred, v)
    return DiGraph(succ)


def is_acyclic(g: DiGraph) -> bool:
    """Topological-sort test; a loop counts as a cycle."""
    return not _has_cycle(g.succ)


def nontrivial_sccs(g: DiGraph) -> list[DiGraph]:
    """Induced subgraphs of the strongly connected components that carry a cycle.

    Components are returned in ascending order of their smallest vertex id.
    """
    return [
        induced_subgraph(g, comp)
        for comp in _cyclic_components(g.succ)
    ]


# ---------------------------------------------------------------------------
# In-place helpers over dict-of-set adjacency
# ---------------------------------------------------------------------------

def _remove_vertex(succ: dict, pred: dict, v: int) -> set[int]:
    """Delete ``v``; return its former neighbours."""
    outs = succ.pop(v)
    ins = pred.pop(v)
    for w in outs:
        if w != v:
            pred[w].discard(v)
    for u in ins:
        if u != v:
            succ[u].discard(v)
    touched = outs | ins
    touched.discard(v)
    return touched


def _exclude_vertex(succ: dict, pred: dict, v: int) -> set[int]:
    outs = succ[v] - {v}
    ins = pred[v] - {v}
    _remove_vertex(succ, pred, v)
    for u in ins:
        su = succ[u]
        for w in outs:
            if w not in su:
                su.add(w)
                pred[w].add(u)
    return ins | outs


def _has_cycle(succ: Mapping[int, Iterable[int]], skip: frozenset | set = frozenset()) -> bool:
    """Kahn's algorithm over ``succ`` with the vertices in ``skip`` deleted."""
    indeg = {v: 0 for v in succ if v not in skip}
    for v in indeg:
        for w in succ[v]:
            if w in indeg:
                indeg[w] += 1
    queue = deque(v for v, d in indeg.items() if d == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            if w in indeg:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return seen != len(indeg)


def _on_cycle(succ: Mapping[int, Iterable[int]], v: int, blocked: set | frozenset = frozenset()) -> bool:
    """True iff some cycle through ``v`` avoids ``blocked``."""
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in succ[u]:
            if w == v:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return False


def strongly_connected_components(succ: Mapping[int, Iterable[int]]) -> list[list[int]]:
    """Tarjan's algorithm with an explicit stack.

    Returns every SCC (trivial ones included) as a sorted vertex list; the
    list of components is in Tarjan's completion order (reverse topological).
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in sorted(succ):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(sorted(succ[root])))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(succ[w]))))
                    descended = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                comps.append(comp)
    return comps


def _cyclic_components(succ: Mapping[int, Iterable[int]]) -> list[list[int]]:
    comps = [
        c for c in strongly_connected_components(succ)
        if len(c) > 1 or c[0] in succ[c[0]]
    ]
    comps.sort(key=lambda c: c[0])
    return comps


def _split_sccs(succ: dict, pred: dict) -> list[tuple[dict, dict]]:
    """Split mutable adjacency into cyclic SCCs, dropping inter-component arcs."""
    parts = []
    for comp in _cyclic_components(succ):
        members = set(comp)
        s = {v: succ[v] & members for v in comp}
        p = {v: pred[v] & members for v in comp}
        parts.append((s, p))
    return parts
