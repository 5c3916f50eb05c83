"""Undirected simple graphs on vertices ``0..n-1``.

Everything here is deterministic: vertex sets are sorted tuples and all
searches visit vertices in increasing order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_CYCLE_LIMIT = 10**6

VertexSet = tuple  # sorted tuple of distinct vertex indices


class EnumerationLimitError(RuntimeError):
    """More induced cycles than the caller allowed."""


class GraphError(ValueError):
    pass


def vertex_set(vs: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vs)))


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Immutable simple graph stored as neighbour sets."""

    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.adj)
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise GraphError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < n or v not in self.adj[u]:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("one label per vertex is required")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs), None if labels is None else tuple(labels))

    @classmethod
    def from_matrix(cls, matrix, labels: Sequence[str] | None = None):
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if m.diagonal().any() or (m != m.T).any():
            raise GraphError("adjacency matrix must be symmetric with an empty diagonal")
        adj = tuple(frozenset(np.flatnonzero(row).tolist()) for row in m)
        return cls(adj, None if labels is None else tuple(labels))

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self.adj)) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def labels_of(self, vs: Iterable[int]) -> list[str]:
        return [self.label(v) for v in vs]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def closed_neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for v in vs:
            out.add(v)
            out |= self.adj[v]
        return frozenset(out)

    def induced(self, vs: Iterable[int]) -> tuple["SimpleGraph", VertexSet]:
        """Induced subgraph, relabelled ``0..k-1``; also returns the original vertices."""
        keep = vertex_set(vs)
        pos = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(pos[u] for u in self.adj[v] if u in pos) for v in keep)
        labels = None if self.labels is None else tuple(self.labels[v] for v in keep)
        return SimpleGraph(adj, labels), keep

    def with_universal_vertex(self, label: str = "u") -> "SimpleGraph":
        """Copy with one extra vertex adjacent to everything."""
        n = len(self.adj)
        adj = tuple(nb | {n} for nb in self.adj) + (frozenset(range(n)),)
        labels = None if self.labels is None else self.labels + (label,)
        return SimpleGraph(adj, labels)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {json.dumps(name)} {{"]
        for v in range(len(self.adj)):
            lines.append(f"  {v} [label={json.dumps(self.label(v))}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": len(self.adj),
            "edges": [list(e) for e in self.edges()],
            "labels": [self.label(v) for v in range(len(self.adj))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimpleGraph":
        return cls.from_edges(data["n"], [tuple(e) for e in data["edges"]], data.get("labels"))


def components(G: SimpleGraph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``G - removed``, ordered by least vertex."""
    gone = set(removed)
    seen = set(gone)
    out = []
    for s in range(len(G.adj)):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        out.append(tuple(sorted(comp)))
    return out


def _edges_within(G: SimpleGraph, vs: Iterable[int]) -> int:
    inside = set(vs)
    return sum(len(G.adj[v] & inside) for v in inside) // 2


def component_contains_cycle(G: SimpleGraph, component: Iterable[int]) -> bool:
    """A connected vertex set induces a cycle iff it is not a tree."""
    comp = vertex_set(component)
    if not comp:
        raise GraphError("empty component")
    inside = set(comp)
    reached = {comp[0]}
    queue = deque([comp[0]])
    while queue:
        v = queue.popleft()
        for u in G.adj[v] & inside:
            if u not in reached:
                reached.add(u)
                queue.append(u)
    if len(reached) != len(comp):
        raise GraphError("vertex set is not connected")
    return _edges_within(G, comp) >= len(comp)


def find_cycle(G: SimpleGraph, allowed: Iterable[int] | None = None) -> VertexSet | None:
    """Vertex set of some cycle in ``G[allowed]`` (least-vertex first search), or None."""
    inside = set(range(len(G.adj))) if allowed is None else set(allowed)
    parent: dict[int, int] = {}
    for root in sorted(inside):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for u in sorted(G.adj[v] & inside):
                if u == parent[v]:
                    continue
                if u in parent:
                    # non-tree edge (v, u): walk both up to the common ancestor
                    path_v = [v]
                    while path_v[-1] != -1:
                        path_v.append(parent[path_v[-1]])
                    anc = set(path_v)
                    cyc = [u]
                    while cyc[-1] not in anc:
                        cyc.append(parent[cyc[-1]])
                    top = cyc[-1]
                    cyc.extend(path_v[: path_v.index(top)])
                    return vertex_set(cyc)
                parent[u] = v
                stack.append(u)
    return None


def enumerate_induced_cycles(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> Iterator[VertexSet]:
    """Yield the vertex set of every chordless cycle of length >= 3, once each.

    Each cycle is found from its least vertex ``s`` by extending induced
    paths through vertices above ``s``; the closing vertex must exceed the
    second vertex so each cycle is reported in one direction only.  Raises
    :class:`EnumerationLimitError` before yielding cycle ``limit + 1``.
    """
    adj = G.adj
    emitted = 0

    for s in range(len(adj)):
        higher = [u for u in sorted(adj[s]) if u > s]
        for v1 in higher:
            # path is s, v1, ..., last; blocked = closed neighbourhood of the
            # interior vertices, which no extension may touch
            stack = [((s, v1), frozenset())]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                on_path = set(path)
                new_blocked = blocked | adj[path[-2]] if len(path) > 2 else blocked
                nexts = []
                for w in sorted(adj[last]):
                    if w <= s or w in on_path or w in new_blocked:
                        continue
                    if w in adj[s]:
                        if w > v1:
                            emitted += 1
                            if emitted > limit:
                                raise EnumerationLimitError(f"more than {limit} induced cycles")
                            yield vertex_set(path + (w,))
                        continue
                    nexts.append(w)
                for w in reversed(nexts):
                    stack.append((path + (w,), new_blocked))


def true_twin_classes(G: SimpleGraph) -> list[VertexSet]:
    """Classes of vertices with equal closed neighbourhoods, ordered by least vertex."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(len(G.adj)):
        groups.setdefault(G.adj[v] | {v}, []).append(v)
    return sorted(tuple(vs) for vs in groups.values())


def twin_representatives(G: SimpleGraph, keep: int = 3) -> VertexSet:
    """The ``keep`` least vertices of every true-twin class.

    Swapping two true twins is an automorphism, so a search over cycles
    that meet each class in at most ``keep`` vertices loses nothing when
    ``keep`` is at least the number of class members a cycle can use.
    """
    return vertex_set(v for cls in true_twin_classes(G) for v in cls[:keep])


# ---------------------------------------------------------------------------
# Minimum vertex cuts
# ---------------------------------------------------------------------------

class _FlowNetwork:
    """Integer-capacity residual network; maximum flow by Dinic's algorithm."""

    def __init__(self, size: int):
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * len(self.head)
        level[s] = 0
        queue = deque([s])
        to, cap = self.to, self.cap
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if cap[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        to, cap, head = self.to, self.cap, self.head
        flow = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * len(head)
            while True:
                # one augmenting path in the level graph, by iterative DFS
                path: list[int] = []
                u = s
                while u != t:
                    edges = head[u]
                    while it[u] < len(edges):
                        e = edges[it[u]]
                        if cap[e] > 0 and level[to[e]] == level[u] + 1:
                            break
                        it[u] += 1
                    if it[u] == len(edges):
                        if u == s:
                            break
                        level[u] = -1  # dead end
                        e = path.pop()
                        u = to[e ^ 1]
                        it[u] += 1
                        continue
                    e = edges[it[u]]
                    path.append(e)
                    u = to[e]
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                flow += push
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def separates(G: SimpleGraph, cut: Iterable[int], A: Iterable[int], B: Iterable[int]) -> bool:
    """True if no component of ``G - cut`` meets both ``A`` and ``B``."""
    A, B = set(A), set(B)
    for comp in components(G, cut):
        cs = set(comp)
        if cs & A and cs & B:
            return False
    return True


def weighted_min_vertex_cut(
    G: SimpleGraph, weights: Sequence[int], A: Iterable[int], B: Iterable[int]
) -> tuple[int, VertexSet] | None:
    """Minimum-weight vertex set outside ``A`` and ``B`` separating them.

    Returns None ("inseparable") when ``A`` and ``B`` intersect or are joined
    by an edge.  Each vertex ``v`` becomes an arc ``v_in -> v_out`` with
    capacity ``weights[v]`` (unbounded on ``A`` and ``B``).
    """
    A, B = vertex_set(A), vertex_set(B)
    sa, sb = set(A), set(B)
    if not A or not B:
        raise GraphError("both sides of a cut must be non-empty")
    if sa & sb or any(G.adj[a] & sb for a in A):
        return None
    n = len(G.adj)
    inf = sum(weights) + 1
    net = _FlowNetwork(2 * n + 2)
    source, sink = 2 * n, 2 * n + 1
    for v in range(n):
        net.add_edge(2 * v, 2 * v + 1, inf if v in sa or v in sb else weights[v])
    for u, v in G.edges():
        net.add_edge(2 * u + 1, 2 * v, inf)
        net.add_edge(2 * v + 1, 2 * u, inf)
    for a in A:
        net.add_edge(source, 2 * a, inf)
    for b in B:
        net.add_edge(2 * b + 1, sink, inf)
    value = net.max_flow(source, sink)
    side = net.reachable(source)
    cut = vertex_set(v for v in range(n) if 2 * v in side and 2 * v + 1 not in side)
    if sum(weights[v] for v in cut) != value or not separates(G, cut, A, B):
        raise RuntimeError("max-flow produced an invalid vertex cut")
    return value, cut


def min_vertex_cut(G: SimpleGraph, A: Iterable[int], B: Iterable[int]) -> tuple[int, VertexSet] | None:
    """Minimum vertex cut between ``A`` and ``B`` (unit weights), or None if inseparable."""
    return weighted_min_vertex_cut(G, [1] * len(G.adj), A, B)
