"""Cyclic vertex cutsets: decision, exact connectivity, and a brute-force oracle.

A set ``S`` is a cyclic vertex cutset of ``G`` when ``G - S`` has at least
two components that contain cycles.  The empty set counts when ``G`` is
already split that way, giving connectivity 0 (order supergraphs are always
connected, so this never matters for them).

Two vertex-disjoint cycles with no edge between them always yield a cyclic
cutset, and every cyclic cutset leaves such a pair behind; the cycles may
be taken chordless.  The exact routines search over pairs of chordless
cycles and take minimum vertex cuts between them.  Swapping true twins is
an automorphism, so cycles are drawn from :func:`twin_representatives`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .graphs import (
    DEFAULT_CYCLE_LIMIT,
    SimpleGraph,
    VertexSet,
    components,
    enumerate_induced_cycles,
    find_cycle,
    min_vertex_cut,
    twin_representatives,
    vertex_set,
    weighted_min_vertex_cut,
)
from .supergraph import (
    QuotientOrderGraph,
    blown_up_component_has_cycle,
    expand,
    quotient_chordless_cycles,
)

INFINITE = math.inf


@dataclass(frozen=True)
class CutsetCertificate:
    cutset: VertexSet
    witness_a: VertexSet
    witness_b: VertexSet

    def to_json(self, G: SimpleGraph, value=None) -> dict:
        out = {
            "cutset": G.labels_of(self.cutset),
            "witness_a": G.labels_of(self.witness_a),
            "witness_b": G.labels_of(self.witness_b),
        }
        if value is not None:
            out["value"] = "infinite" if value == INFINITE else int(value)
        return out


@dataclass(frozen=True)
class CkappaResult:
    """Cyclic vertex connectivity.

    ``value`` is an ``int``, :data:`INFINITE`, or ``None`` when a bounded
    brute-force search could not decide.
    """

    value: int | float | None
    certificate: CutsetCertificate | None = None

    @property
    def finite(self) -> bool:
        return self.value is not None and self.value != INFINITE

    def to_json(self, G: SimpleGraph) -> dict:
        if self.value is None:
            return {"value": "unknown"}
        if not self.finite:
            return {"value": "infinite"}
        return self.certificate.to_json(G, self.value)


def _is_cyclic(G: SimpleGraph, comp) -> bool:
    inside = set(comp)
    return sum(len(G.adj[v] & inside) for v in comp) // 2 >= len(comp)


def verify_certificate(G: SimpleGraph, cert: CutsetCertificate) -> bool:
    """Check a certificate from scratch against the definition."""
    cut, a, b = set(cert.cutset), set(cert.witness_a), set(cert.witness_b)
    n = G.vertex_count
    if not a or not b or any(not 0 <= v < n for v in cut | a | b):
        return False
    if cut & a or cut & b or a & b:
        return False
    comp_a = comp_b = None
    for comp in components(G, cut):
        cs = set(comp)
        if a <= cs:
            comp_a = comp
        if b <= cs:
            comp_b = comp
    if comp_a is None or comp_b is None or comp_a == comp_b:
        return False
    return _is_cyclic(G, comp_a) and _is_cyclic(G, comp_b)


def _checked(G: SimpleGraph, cert: CutsetCertificate) -> CutsetCertificate:
    if not verify_certificate(G, cert):
        raise RuntimeError(f"internal error: certificate {cert} does not verify")
    return cert


def representative_cycles(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> Iterator[VertexSet]:
    """Chordless cycles of ``G`` that use only twin representatives."""
    H, keep = G.induced(twin_representatives(G))
    for c in enumerate_induced_cycles(H, limit):
        yield tuple(keep[i] for i in c)


def find_cyclic_cutset(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> CutsetCertificate | None:
    """A verified cyclic vertex cutset, or None when ``G`` is not cyclically separable.

    Looks for a chordless cycle ``C`` such that ``G - N[C]`` still has a
    cycle ``D``; the cutset is then a minimum vertex cut between ``C`` and
    ``D``.
    """
    everything = set(range(G.vertex_count))
    tried = set()
    for C in representative_cycles(G, limit):
        closed = G.closed_neighborhood(C)
        if closed in tried:
            continue
        tried.add(closed)
        rest = everything - closed
        D = find_cycle(G, rest)
        if D is not None:
            _, cut = min_vertex_cut(G, C, D)
            return _checked(G, CutsetCertificate(cut, C, D))
    return None


def is_cyclically_separable(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> bool:
    return find_cyclic_cutset(G, limit) is not None


def cyclic_vertex_connectivity(G: SimpleGraph, limit: int = DEFAULT_CYCLE_LIMIT) -> CkappaResult:
    """Exact cyclic vertex connectivity with a verified certificate.

    Minimum over pairs of disjoint, mutually non-adjacent chordless cycles
    of the minimum vertex cut between them.  Ties go to the smaller cutset
    in lexicographic order, then to the earlier cycle pair.
    """
    cycles = list(representative_cycles(G, limit))
    closed = [G.closed_neighborhood(c) for c in cycles]
    best = None
    for i, j in itertools.combinations(range(len(cycles)), 2):
        if closed[i].intersection(cycles[j]):
            continue
        size, cut = min_vertex_cut(G, cycles[i], cycles[j])
        key = (size, cut, cycles[i], cycles[j])
        if best is None or key < best:
            best = key
    if best is None:
        return CkappaResult(INFINITE)
    size, cut, a, b = best
    return CkappaResult(size, _checked(G, CutsetCertificate(cut, a, b)))


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

ORACLE_MAX_SUBSETS = 5_000_000


def _oracle_twin_classes(G: SimpleGraph) -> list[list[int]]:
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in range(G.vertex_count):
        key = tuple(sorted(G.adj[v] | {v}))
        buckets.setdefault(key, []).append(v)
    return sorted(buckets.values())


def brute_force_ckappa(G: SimpleGraph, max_cut_size: int | None = None, use_twins: bool = True) -> CkappaResult:
    """Cyclic vertex connectivity by trying vertex sets in increasing size.

    Returns the smallest (then lexicographically least) cutset, with the two
    least cyclic components as witnesses.  If nothing is found up to
    ``max_cut_size`` the answer is :data:`INFINITE` when the bound reaches
    ``n - 6`` (two cycles need six vertices) and ``None`` otherwise.

    With ``use_twins`` the search visits one set per pattern of how many
    vertices to take from each true-twin class, always the least ones; any
    other set with the same pattern is its image under an automorphism and
    is lexicographically larger.
    """
    n = G.vertex_count
    bound = max(n - 6, 0) if max_cut_size is None else max_cut_size
    classes = _oracle_twin_classes(G) if use_twins else [[v] for v in range(n)]
    total = math.prod(len(c) + 1 for c in classes)
    if total > ORACLE_MAX_SUBSETS:
        raise ValueError(f"brute force would visit {total} vertex sets")

    by_size: dict[int, list[tuple[int, ...]]] = {}
    for counts in itertools.product(*(range(len(c) + 1) for c in classes)):
        by_size.setdefault(sum(counts), []).append(counts)

    for k in range(0, min(bound, n) + 1):
        found = []
        for counts in by_size.get(k, ()):
            S = vertex_set(v for c, m in zip(classes, counts) for v in c[:m])
            comps = components(G, S)
            cyclic = [c for c in comps if _is_cyclic(G, c)]
            if len(cyclic) >= 2:
                found.append((S, cyclic[0], cyclic[1]))
        if found:
            S, a, b = min(found)
            return CkappaResult(k, _checked(G, CutsetCertificate(S, a, b)))
    if bound >= n - 6:
        return CkappaResult(INFINITE)
    return CkappaResult(None)


# ---------------------------------------------------------------------------
# Quotient path
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientCertificate:
    """A cyclic cutset of the blow-up, given as whole order classes."""

    cutset: tuple[int, ...]
    witness_a: tuple[int, ...]
    witness_b: tuple[int, ...]

    def cutset_size(self, Q: QuotientOrderGraph) -> int:
        return sum(Q.weight(d) for d in self.cutset)

    def to_json(self, Q: QuotientOrderGraph, value=None) -> dict:
        out = {
            "cutset_orders": list(self.cutset),
            "witness_a_orders": list(self.witness_a),
            "witness_b_orders": list(self.witness_b),
            "cutset_size": self.cutset_size(Q),
        }
        if value is not None:
            out["value"] = "infinite" if value == INFINITE else int(value)
        return out

    def expand(self, Q: QuotientOrderGraph) -> tuple[SimpleGraph, CutsetCertificate]:
        """The blow-up of ``Q`` and this certificate in its vertex terms."""
        G, vertex_orders = expand(Q)

        def pick(orders):
            want = set(orders)
            return vertex_set(v for v, d in enumerate(vertex_orders) if d in want)

        return G, CutsetCertificate(pick(self.cutset), pick(self.witness_a), pick(self.witness_b))


def minimal_cyclic_node_sets(Q: QuotientOrderGraph) -> list[tuple[int, ...]]:
    """Inclusion-minimal connected node sets whose blow-up has a cycle.

    Every such set is a single node of weight >= 3, an edge with an endpoint
    of weight >= 2, or a chordless cycle of the quotient; any connected node
    set with a cyclic blow-up contains one of them.
    """
    out = {(d,) for d, w in zip(Q.orders, Q.weights) if w >= 3}
    out.update((a, b) for a, b in Q.edges() if Q.weight(a) >= 2 or Q.weight(b) >= 2)
    out.update(quotient_chordless_cycles(Q))
    cands = [c for c in out if blown_up_component_has_cycle(Q, c)]
    return sorted(cands, key=lambda c: (len(c), c))


def _separated_pairs(Q: QuotientOrderGraph):
    cands = minimal_cyclic_node_sets(Q)
    closed = [set(c).union(*(Q.neighbors(d) for d in c)) for c in cands]
    for i, j in itertools.combinations(range(len(cands)), 2):
        if not closed[i].intersection(cands[j]):
            yield cands[i], cands[j], closed[i]


def find_quotient_separation(Q: QuotientOrderGraph) -> QuotientCertificate | None:
    """Separating pair of cyclic node sets; the cutset is the neighbourhood of the first."""
    for a, b, closed_a in _separated_pairs(Q):
        return QuotientCertificate(tuple(sorted(closed_a - set(a))), a, b)
    return None


def quotient_is_cyclically_separable(Q: QuotientOrderGraph) -> bool:
    return find_quotient_separation(Q) is not None


@dataclass(frozen=True)
class QuotientCkappa:
    value: int | float
    certificate: QuotientCertificate | None = None

    @property
    def finite(self) -> bool:
        return self.value != INFINITE


def quotient_cyclic_vertex_connectivity(Q: QuotientOrderGraph) -> QuotientCkappa:
    """Cyclic vertex connectivity of the blow-up, computed on the quotient.

    A minimal vertex cut never splits an order class (a cut twin whose twin
    survives can be put back), so weighted node cuts on the quotient are
    exact.
    """
    H = Q.as_graph()
    idx = {d: i for i, d in enumerate(Q.orders)}
    best = None
    for a, b, _ in _separated_pairs(Q):
        value, cut = weighted_min_vertex_cut(H, Q.weights, [idx[d] for d in a], [idx[d] for d in b])
        key = (value, tuple(Q.orders[i] for i in cut), a, b)
        if best is None or key < best:
            best = key
    if best is None:
        return QuotientCkappa(INFINITE)
    value, cut, a, b = best
    return QuotientCkappa(value, QuotientCertificate(cut, a, b))
