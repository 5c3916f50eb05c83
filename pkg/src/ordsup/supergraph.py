"""Order supergraphs, built directly or as a weighted divisibility quotient.

In S(G) two elements are adjacent when the order of one divides the order
of the other.  Elements of equal order are mutual twins, so S(G) is the
blow-up of a small weighted graph on the distinct element orders: each
order ``d`` becomes a clique of ``m(d)`` vertices and divisibility becomes
complete bipartite joins.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import SimpleGraph, components, enumerate_induced_cycles
from .groups import Group, OrderProfile, _check_cap, element_orders


def divisibility_matrix(orders) -> np.ndarray:
    """Boolean matrix ``M[i, j] = (o_i | o_j or o_j | o_i) and i != j``."""
    o = np.asarray(orders, dtype=np.int64)
    m = (o[None, :] % o[:, None] == 0) | (o[:, None] % o[None, :] == 0)
    np.fill_diagonal(m, False)
    return m


def order_supergraph(G: Group, cap: int | None = None) -> SimpleGraph:
    _check_cap(G.order, cap, f"S({G.name})")
    return SimpleGraph.from_matrix(divisibility_matrix(G.orders()), G.labels)


@dataclass(frozen=True)
class QuotientOrderGraph:
    """Distinct element orders with their multiplicities; edges are divisibility."""

    orders: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.orders) != len(self.weights) or list(self.orders) != sorted(set(self.orders)):
            raise ValueError("orders must be distinct and sorted, one weight each")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def node_count(self) -> int:
        return len(self.orders)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight(self, d: int) -> int:
        return self.weights[self.orders.index(d)]

    def adjacent(self, d1: int, d2: int) -> bool:
        return d1 != d2 and (d2 % d1 == 0 or d1 % d2 == 0)

    def neighbors(self, d: int) -> list[int]:
        return [e for e in self.orders if self.adjacent(d, e)]

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in itertools.combinations(self.orders, 2) if self.adjacent(a, b)]

    def as_graph(self) -> SimpleGraph:
        """The unweighted quotient as a graph on node indices, labelled by order."""
        idx = {d: i for i, d in enumerate(self.orders)}
        return SimpleGraph.from_edges(
            self.node_count, [(idx[a], idx[b]) for a, b in self.edges()], [str(d) for d in self.orders]
        )

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "weights": list(self.weights),
            "edges": [list(e) for e in self.edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuotientOrderGraph":
        q = cls(tuple(data["orders"]), tuple(data["weights"]))
        if "edges" in data and sorted(map(tuple, data["edges"])) != q.edges():
            raise ValueError("edge list does not match divisibility on the given orders")
        return q


def order_quotient_graph(profile: OrderProfile | Group) -> QuotientOrderGraph:
    if isinstance(profile, Group):
        profile = element_orders(profile)
    return QuotientOrderGraph(tuple(profile.orders), tuple(profile.counts[d] for d in profile.orders))


def expand(Q: QuotientOrderGraph, cap: int | None = None) -> tuple[SimpleGraph, list[int]]:
    """Blow up ``Q`` into a simple graph.

    Returns the graph and the order carried by each vertex.  Vertices of a
    node are consecutive and labelled ``"<order>#<k>"``.
    """
    _check_cap(Q.total_weight, cap, "expanded quotient")
    vertex_orders = [d for d, w in zip(Q.orders, Q.weights) for _ in range(w)]
    labels = [f"{d}#{k}" for d, w in zip(Q.orders, Q.weights) for k in range(w)]
    return SimpleGraph.from_matrix(divisibility_matrix(vertex_orders), labels), vertex_orders


def blown_up_component_has_cycle(Q: QuotientOrderGraph, component) -> bool:
    """Whether the blow-up of a connected node set contains a cycle.

    That happens when a node has weight at least 3 (a triangle inside its
    clique), when an edge has an endpoint of weight at least 2 (two twins
    plus a neighbour), or when the node set already has a cycle.
    """
    nodes = sorted(set(component))
    if not nodes:
        raise ValueError("empty component")
    w = {d: Q.weight(d) for d in nodes}
    if any(x >= 3 for x in w.values()):
        return True
    inner = [(a, b) for a, b in itertools.combinations(nodes, 2) if Q.adjacent(a, b)]
    if any(w[a] >= 2 or w[b] >= 2 for a, b in inner):
        return True
    return len(inner) >= len(nodes)


def quotient_components(Q: QuotientOrderGraph, removed=()) -> list[tuple[int, ...]]:
    """Connected node sets of ``Q`` minus ``removed`` (orders, not indices)."""
    H = Q.as_graph()
    idx = {d: i for i, d in enumerate(Q.orders)}
    comps = components(H, [idx[d] for d in removed])
    return [tuple(Q.orders[i] for i in c) for c in comps]


def quotient_chordless_cycles(Q: QuotientOrderGraph) -> list[tuple[int, ...]]:
    H = Q.as_graph()
    return [tuple(Q.orders[i] for i in c) for c in enumerate_induced_cycles(H)]


def class_signature(G: SimpleGraph, vertex_orders) -> tuple:
    """Canonical form of a graph whose vertices are partitioned by order.

    Verifies that every order class is a clique and a module (all members
    share their outside neighbourhood) and returns
    ``(sorted (order, size) pairs, sorted adjacent order pairs)``.  Two
    graphs with equal signatures are isomorphic.
    """
    vertex_orders = list(vertex_orders)
    if len(vertex_orders) != G.vertex_count:
        raise ValueError("one order per vertex is required")
    classes: dict[int, list[int]] = {}
    for v, d in enumerate(vertex_orders):
        classes.setdefault(d, []).append(v)
    reps = {}
    for d, members in classes.items():
        inside = set(members)
        outside = G.adj[members[0]] - inside
        for v in members:
            if G.adj[v] - inside != outside or len(G.adj[v] & inside) != len(inside) - 1:
                raise ValueError(f"order class {d} is not a clique module")
        reps[d] = members[0]
    sizes = tuple(sorted((d, len(m)) for d, m in classes.items()))
    adjacent = tuple(
        (a, b) for a, b in itertools.combinations(sorted(classes), 2) if G.has_edge(reps[a], reps[b])
    )
    return sizes, adjacent


