"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (repeated in the pytest
terminal summary, or printed directly when run as a script) and then asserts.
"""

import itertools
import random
import sys
import time

from ordsup.audit import (
    audit_family,
    audit_row,
    compare_with_ledger,
    default_ledger_text,
    eppo_catalog,
    epo_catalog,
    load_ledger,
    nilpotent_catalog,
    reference_catalog,
    separability,
)
from ordsup.cli import main
from ordsup.connectivity import (
    INFINITE,
    brute_force_ckappa,
    cyclic_vertex_connectivity,
    is_cyclically_separable,
    quotient_is_cyclically_separable,
)
from ordsup.graphs import SimpleGraph
from ordsup.groups import make_dicyclic, make_dihedral
from ordsup.parsing import parse_group_spec
from ordsup.supergraph import class_signature, expand, order_quotient_graph, order_supergraph
from ordsup.theorems import alternating_predicate, dicyclic_predicate, dihedral_predicate, symmetric_predicate


RESULTS = []


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    RESULTS.append(line)
    print(line)
    sys.stdout.flush()
    assert ok, detail


def _corpus():
    """Small catalog groups as supergraphs, then seeded random graphs."""
    graphs = []
    for spec in reference_catalog(24):
        graphs.append((spec, order_supergraph(parse_group_spec(spec).build())))
    rng = random.Random(20240601)
    for i in range(200):
        n = rng.randint(6, 10)
        p = (0.2, 0.4, 0.6)[i % 3]
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        graphs.append((f"random#{i}", SimpleGraph.from_edges(n, edges)))
    return graphs


_ORACLE = {}


def _oracle(name, G):
    if name not in _ORACLE:
        _ORACLE[name] = brute_force_ckappa(G)
    return _ORACLE[name]


def test_criterion_1_dihedral():
    t = time.perf_counter()
    report_ = audit_family("dihedral", range(3, 65))
    elapsed = time.perf_counter() - t
    false_set = [r.params["n"] for r in report_.rows if not r.computed]
    agree = all(r.agree for r in report_.rows) and all(
        r.predicate == dihedral_predicate(r.params["n"]).holds for r in report_.rows
    )
    ok = agree and false_set == [3, 4, 6, 8, 12, 16, 32, 64] and elapsed < 10
    report(1, ok, f"dihedral 3..64 agree={agree}, non-separable at {false_set}, {elapsed:.1f}s")


def test_criterion_2_dicyclic():
    t = time.perf_counter()
    report_ = audit_family("dicyclic", range(2, 33))
    elapsed = time.perf_counter() - t
    false_set = [r.params["n"] for r in report_.rows if not r.computed]
    agree = all(r.computed == dicyclic_predicate(r.params["n"]).holds for r in report_.rows)
    ok = agree and false_set == [2, 4, 8, 16, 32] and elapsed < 10
    report(2, ok, f"dicyclic 2..32 agree={agree}, non-separable at {false_set}, {elapsed:.1f}s")


def test_criterion_3_symmetric_alternating():
    t = time.perf_counter()
    details, ok = [], True
    for family, pred, spec in (("symmetric", symmetric_predicate, "sym"), ("alternating", alternating_predicate, "alt")):
        for n in range(3, 8):
            row = audit_row(family, n)
            want_path = "quotient" if n == 7 else "direct+quotient"
            good = row.computed == (n >= 4) == pred(n).holds and row.path == want_path
            ok &= good
            details.append(f"{spec}{n}={'sep' if row.computed else 'no'}")
    elapsed = time.perf_counter() - t
    ok &= elapsed < 60
    report(3, ok, f"{' '.join(details)}, {elapsed:.1f}s")


def test_criterion_4_oracle_decision():
    t = time.perf_counter()
    corpus = _corpus()
    bad = [name for name, G in corpus if is_cyclically_separable(G) != (_oracle(name, G).value != INFINITE)]
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 120
    report(4, ok, f"{len(corpus)} graphs, {len(bad)} decision mismatches {bad[:5]}, {elapsed:.1f}s")


def test_criterion_5_oracle_value():
    corpus = _corpus()
    bad, definite = [], 0
    for name, G in corpus:
        oracle = _oracle(name, G)
        if oracle.value is None:
            continue
        definite += 1
        if cyclic_vertex_connectivity(G).value != oracle.value:
            bad.append(name)
    d10 = cyclic_vertex_connectivity(order_supergraph(make_dihedral(5))).value
    q12 = cyclic_vertex_connectivity(order_supergraph(make_dicyclic(3))).value
    ok = not bad and d10 == 1 and q12 == 2
    report(5, ok, f"{definite} definite oracle values, {len(bad)} mismatches, ckappa(D10)={d10}, ckappa(Q12)={q12}")


def test_criterion_6_quotient_expansion():
    t = time.perf_counter()
    specs = reference_catalog(400)
    bad = []
    for spec in specs:
        G = parse_group_spec(spec).build()
        S = order_supergraph(G)
        Q = order_quotient_graph(G)
        E, vo = expand(Q)
        if class_signature(S, G.orders()) != class_signature(E, vo):
            bad.append((spec, "signature"))
        elif quotient_is_cyclically_separable(Q) != is_cyclically_separable(S):
            bad.append((spec, "separability"))
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    report(6, ok, f"{len(specs)} catalog groups, {len(bad)} mismatches {bad[:3]}, {elapsed:.1f}s")


ANCHORS = [
    ("eppo", "alt:4", True),
    ("eppo", "sym:3", False),
    ("eppo", "alt:5", True),
    ("nilpotent", "cyclic:6", False),
    ("nilpotent", "cyclic:12", False),
    ("nilpotent", "cyclic:24", True),
    ("nilpotent", "cyclic:30", True),
    ("nilpotent", "product:cyclic:2*cyclic:2*cyclic:3", False),
]


def test_criterion_7_catalog_audits():
    ledger = load_ledger(default_ledger_text())
    problems = []
    counts = {}
    for family, catalog in (("eppo", eppo_catalog), ("epo", epo_catalog), ("nilpotent", nilpotent_catalog)):
        rep = audit_family(family, catalog())
        counts[family] = (len(rep.rows), len(rep.discrepancies))
        if not compare_with_ledger(rep, ledger).clean:
            problems.append(f"{family} ledger drift")
    for family, spec, expected in ANCHORS:
        row = audit_row(family, spec)
        sep = separability(parse_group_spec(spec))
        if not (row.agree and row.computed == expected == sep.separable):
            problems.append(f"anchor {spec}")
    ok = not problems
    summary = ", ".join(f"{f} {n} rows/{d} ledgered" for f, (n, d) in counts.items())
    report(7, ok, f"{summary}; {len(ANCHORS)} anchors; problems={problems}")


def test_criterion_8_determinism():
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as d:
        a, b = Path(d) / "j1.json", Path(d) / "j8.json"
        codes = []
        for jobs, out in (("1", a), ("8", b)):
            codes.append(main(["audit", "eppo", "--catalog", "--jobs", jobs, "--out", str(out)]))
        same = a.read_bytes() == b.read_bytes()
    ok = same and codes == [0, 0]
    report(8, ok, f"--jobs 1 vs --jobs 8 byte-identical={same}, exit codes {codes}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
