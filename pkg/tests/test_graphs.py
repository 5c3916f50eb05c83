import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from ordsup.graphs import (
    EnumerationLimitError,
    GraphError,
    SimpleGraph,
    component_contains_cycle,
    components,
    enumerate_induced_cycles,
    find_cycle,
    min_vertex_cut,
    separates,
    true_twin_classes,
    weighted_min_vertex_cut,
)
from ordsup.groups import make_dihedral
from ordsup.supergraph import order_supergraph


def complete(n):
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def two_triangles():
    return SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(rng, n, p):
    return SimpleGraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_construction_validation():
    with pytest.raises(GraphError):
        SimpleGraph((frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        SimpleGraph((frozenset({0}),))


def test_components_examples():
    assert components(SimpleGraph.from_edges(3, [])) == [(0,), (1,), (2,)]
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert sorted(map(len, components(g))) == [1, 3]


def test_dihedral_six_minus_identity():
    G = make_dihedral(3)
    S = order_supergraph(G)
    comps = components(S, [G.index(G.identity)])
    assert sorted(len(c) for c in comps) == [2, 3]


def test_component_contains_cycle_examples():
    assert component_contains_cycle(complete(3), range(3))
    assert not component_contains_cycle(path(5), range(5))
    assert not component_contains_cycle(complete(2), range(2))
    with pytest.raises(ValueError):
        component_contains_cycle(SimpleGraph.from_edges(2, []), [0, 1])


def test_induced_cycle_examples():
    assert sorted(enumerate_induced_cycles(complete(4))) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert list(enumerate_induced_cycles(cycle(5))) == [(0, 1, 2, 3, 4)]
    assert len(list(enumerate_induced_cycles(two_triangles()))) == 2


def test_induced_cycle_limit():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_induced_cycles(complete(8), limit=10))


def _is_chordless_cycle(G, vs):
    if len(vs) < 3:
        return False
    H, _ = G.induced(vs)
    return all(d == 2 for d in H.degrees()) and len(components(H)) == 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_induced_cycles_match_subset_filter(G):
    found = sorted(enumerate_induced_cycles(G))
    assert len(found) == len(set(found))
    expected = sorted(
        vs for k in range(3, G.vertex_count + 1) for vs in itertools.combinations(range(G.vertex_count), k)
        if _is_chordless_cycle(G, vs)
    )
    assert found == expected


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_find_cycle(G):
    c = find_cycle(G)
    has = any(len(comp) >= 3 and component_contains_cycle(G, comp) for comp in components(G))
    assert (c is not None) == has
    if c is not None:
        H, _ = G.induced(c)
        assert H.edge_count >= len(c)


def test_min_cut_examples():
    assert min_vertex_cut(path(3), [0], [2]) == (1, (1,))
    D10 = make_dihedral(5)
    S = order_supergraph(D10)
    orders = D10.orders()
    A = [v for v, o in enumerate(orders) if o == 5]
    B = [v for v, o in enumerate(orders) if o == 2]
    assert min_vertex_cut(S, A, B) == (1, (D10.index(D10.identity),))
    # triangles {0,1,2} and {3,4,5} joined by 0-6-3 and 1-7-4
    g = SimpleGraph.from_edges(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 6), (6, 3), (1, 7), (7, 4)])
    size, cut = min_vertex_cut(g, [0, 1, 2], [3, 4, 5])
    assert size == 2 and separates(g, cut, [0, 1, 2], [3, 4, 5])


def test_min_cut_inseparable():
    assert min_vertex_cut(complete(3), [0], [1]) is None
    assert min_vertex_cut(complete(3), [0, 1], [1]) is None


def _brute_min_cut(G, A, B):
    rest = [v for v in range(G.vertex_count) if v not in A and v not in B]
    for k in range(len(rest) + 1):
        for cut in itertools.combinations(rest, k):
            if separates(G, cut, A, B):
                return k
    raise AssertionError("no cut")


def _networkx_cut(G, A, B):
    # same vertex-split reduction, solved by networkx max flow
    big = G.vertex_count + 1
    D = nx.DiGraph()
    for v in range(G.vertex_count):
        D.add_edge(("in", v), ("out", v), capacity=big if v in A or v in B else 1)
    for u, v in G.edges():
        D.add_edge(("out", u), ("in", v), capacity=big)
        D.add_edge(("out", v), ("in", u), capacity=big)
    for a in A:
        D.add_edge("s", ("in", a), capacity=big)
    for b in B:
        D.add_edge(("out", b), "t", capacity=big)
    return nx.maximum_flow_value(D, "s", "t")


def test_min_cut_against_brute_force_and_networkx():
    rng = random.Random(7)
    checked = 0
    while checked < 150:
        n = rng.randint(4, 10)
        G = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]))
        A = rng.sample(range(n), rng.randint(1, 2))
        B = rng.sample([v for v in range(n) if v not in A], rng.randint(1, 2))
        res = min_vertex_cut(G, A, B)
        if res is None:
            assert any(G.has_edge(a, b) for a in A for b in B)
            continue
        size, cut = res
        assert separates(G, cut, A, B) and len(cut) == size
        assert size == _brute_min_cut(G, set(A), set(B))
        assert size == _networkx_cut(G, A, B)
        checked += 1


def test_weighted_cut_prefers_light_vertices():
    # 0 and 4 joined through 1 (weight 5) or through 2 and 3 (weight 1 each)
    g = SimpleGraph.from_edges(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])
    value, cut = weighted_min_vertex_cut(g, [1, 5, 1, 1, 1], [0], [4])
    assert value == 7 and cut == (1, 2, 3)
    value, cut = weighted_min_vertex_cut(g, [1, 1, 1, 1, 1], [0], [4])
    assert value == 3


def test_true_twins():
    g = complete(3).with_universal_vertex()
    assert true_twin_classes(g) == [(0, 1, 2, 3)]


def test_exports():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    dot = g.to_dot("P")
    assert dot.startswith('graph "P" {')
    assert dot.count(" -- ") == 2
    data = json.loads(json.dumps(g.to_json()))
    assert data == {"n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}
    back = SimpleGraph.from_json(data)
    assert back.adj == g.adj and back.labels == g.labels
