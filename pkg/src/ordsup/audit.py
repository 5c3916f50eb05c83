"""Audit theorem predicates against computed separability.

For every parameter the group is built (or only its order profile, above
the direct-graph threshold), separability is computed, the predicate is
evaluated, and a :class:`TheoremVerdict` row records both.  Below the
threshold separability is computed twice, on S(G) itself and on the order
quotient, and the two answers must agree.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Iterable

from . import __version__
from .connectivity import find_cyclic_cutset, find_quotient_separation
from .graphs import DEFAULT_CYCLE_LIMIT, EnumerationLimitError
from .groups import Group, OrderProfile, element_cap, element_orders, is_eppo, is_epo, prime_factors
from .parsing import GroupSpec, parse_group_spec
from .supergraph import order_quotient_graph, order_supergraph
from .theorems import (
    HypothesisError,
    alternating_predicate,
    dicyclic_predicate,
    dihedral_predicate,
    eppo_predicate,
    epo_predicate,
    nilpotent_predicate,
    symmetric_predicate,
)

DEFAULT_DIRECT_THRESHOLD = 2000

RANGE_FAMILIES = ("dihedral", "dicyclic", "symmetric", "alternating")
CATALOG_FAMILIES = ("eppo", "epo", "nilpotent")
FAMILIES = RANGE_FAMILIES + CATALOG_FAMILIES

_RANGE_SPEC = {"dihedral": "dihedral:{}", "dicyclic": "dicyclic:{}", "symmetric": "sym:{}", "alternating": "alt:{}"}
_RANGE_PREDICATE = {
    "dihedral": dihedral_predicate,
    "dicyclic": dicyclic_predicate,
    "symmetric": symmetric_predicate,
    "alternating": alternating_predicate,
}
_GROUP_PREDICATE = {"eppo": eppo_predicate, "epo": epo_predicate, "nilpotent": nilpotent_predicate}


class PathDisagreementError(RuntimeError):
    """Direct and quotient computations gave different answers."""


@dataclass(frozen=True)
class Caps:
    element_cap: int = field(default_factory=element_cap)
    direct_threshold: int = DEFAULT_DIRECT_THRESHOLD
    cycle_limit: int = DEFAULT_CYCLE_LIMIT


@dataclass(frozen=True)
class Separability:
    separable: bool
    path: str  # "direct+quotient" or "quotient"
    certificate: dict | None


def separability(
    target: GroupSpec | Group | OrderProfile, caps: Caps = Caps()
) -> Separability:
    """Decide cyclic separability of S(G), using both paths whenever S(G) is small enough."""
    group = None
    if isinstance(target, GroupSpec):
        size = target.order()
        if target.profile_only or (size is not None and size > caps.direct_threshold):
            profile = target.profile(caps.element_cap)
        else:
            group = target.build(caps.element_cap)
            profile = element_orders(group)
    elif isinstance(target, Group):
        group = target
        profile = element_orders(group)
    else:
        profile = target

    Q = order_quotient_graph(profile)
    qcert = find_quotient_separation(Q)
    if group is None or group.order > caps.direct_threshold:
        return Separability(qcert is not None, "quotient", None if qcert is None else qcert.to_json(Q))

    S = order_supergraph(group, caps.element_cap)
    try:
        cert = find_cyclic_cutset(S, caps.cycle_limit)
    except EnumerationLimitError:
        return Separability(qcert is not None, "quotient", None if qcert is None else qcert.to_json(Q))
    if (cert is None) != (qcert is None):
        raise PathDisagreementError(
            f"{group.name}: direct path says {cert is not None}, quotient path says {qcert is not None}"
        )
    return Separability(cert is not None, "direct+quotient", None if cert is None else cert.to_json(S))


# ---------------------------------------------------------------------------
# Catalogs
# ---------------------------------------------------------------------------

_PGROUPS = {
    2: ["cyclic:2", "cyclic:4", "cyclic:8", "cyclic:2*cyclic:2", "dicyclic:2"],
    3: ["cyclic:3", "cyclic:9", "cyclic:3*cyclic:3"],
    5: ["cyclic:5", "cyclic:25"],
    7: ["cyclic:7"],
}


def _product(parts: list[str]) -> str:
    factors = [f for p in parts for f in p.split("*")]
    return factors[0] if len(factors) == 1 else "product:" + "*".join(factors)


def eppo_catalog() -> list[str]:
    specs = ["sym:3", "sym:4", "alt:4", "alt:5"]
    specs += [f"dihedral:{n}" for n in (3, 4, 5, 8, 9, 16, 27)]
    specs += ["dicyclic:2", "dicyclic:4"]
    specs += [f"cyclic:{q}" for q in range(2, 33) if len(prime_factors(q)) == 1]
    specs += ["perm:(1 2 3 4 5),(2 3 5 4)"]
    small = ["cyclic:2", "cyclic:4", "dicyclic:2", "cyclic:3", "cyclic:9", "cyclic:5"]
    for a, b in itertools.combinations_with_replacement(small, 2):
        spec = _product([a, b])
        if is_eppo(parse_group_spec(spec).profile()):
            specs.append(spec)
    return specs


def epo_catalog() -> list[str]:
    return [s for s in eppo_catalog() if is_epo(parse_group_spec(s).profile())]


def nilpotent_catalog(max_order: int = 400, max_primes: int = 3) -> list[str]:
    specs = []
    choices = [[None] + opts for opts in _PGROUPS.values()]
    for pick in itertools.product(*choices):
        parts = [p for p in pick if p is not None]
        if not parts or len(parts) > max_primes:
            continue
        spec = _product(parts)
        if parse_group_spec(spec).order() <= max_order:
            specs.append(spec)
    return specs


CATALOGS = {"eppo": eppo_catalog, "epo": epo_catalog, "nilpotent": nilpotent_catalog}


def reference_catalog(max_order: int | None = None) -> list[str]:
    """Every catalog group plus small members of the named families, without repeats."""
    specs = eppo_catalog() + nilpotent_catalog()
    specs += [f"dihedral:{n}" for n in range(3, 13)]
    specs += [f"dicyclic:{n}" for n in range(2, 9)]
    specs += [f"sym:{n}" for n in (2, 5)] + [f"alt:{n}" for n in (3,)]
    seen, out = set(), []
    for s in specs:
        if s in seen:
            continue
        seen.add(s)
        size = parse_group_spec(s).order() or parse_group_spec(s).build().order
        if max_order is None or size <= max_order:
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# Rows and reports
# ---------------------------------------------------------------------------

@dataclass
class TheoremVerdict:
    family: str
    params: dict
    status: str  # "ok" or "hypothesis_failed"
    predicate: bool | None
    computed: bool | None
    agree: bool | None
    clauses: dict[str, bool]
    certificate: dict | None = None
    path: str | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def key(self) -> dict:
        return {"family": self.family, "params": self.params}


def audit_row(family: str, param, caps: Caps = Caps()) -> TheoremVerdict:
    """One audit row; ``param`` is ``n`` for range families and a spec string otherwise."""
    if family in RANGE_FAMILIES:
        n = int(param)
        params = {"n": n}
        pred = _RANGE_PREDICATE[family](n)
        spec = parse_group_spec(_RANGE_SPEC[family].format(n))
        sep = separability(spec, caps)
        return TheoremVerdict(
            family, params, "ok", pred.holds, sep.separable, pred.holds == sep.separable,
            pred.clauses, sep.certificate, sep.path,
        )
    if family not in _GROUP_PREDICATE:
        raise ValueError(f"unknown family {family!r}")
    spec = parse_group_spec(param)
    params = {"group": spec.raw}
    target = spec.profile(caps.element_cap) if spec.profile_only else spec.build(caps.element_cap)
    try:
        pred = _GROUP_PREDICATE[family](target)
    except HypothesisError as exc:
        return TheoremVerdict(family, params, "hypothesis_failed", None, None, None, {}, notes=[str(exc)])
    sep = separability(target, caps)
    notes = [f"clause {c} is vacuous under the hypothesis" for c in pred.vacuous]
    return TheoremVerdict(
        family, params, "ok", pred.holds, sep.separable, pred.holds == sep.separable,
        pred.clauses, sep.certificate, sep.path, notes,
    )


def _row_worker(args):
    family, param, caps = args
    return audit_row(family, param, caps)


@dataclass
class AuditReport:
    family: str
    rows: list[TheoremVerdict]
    metadata: dict

    @property
    def discrepancies(self) -> list[TheoremVerdict]:
        return [r for r in self.rows if r.status == "ok" and not r.agree]

    def to_json(self) -> dict:
        return {
            "metadata": self.metadata,
            "family": self.family,
            "rows": [r.to_json() for r in self.rows],
            "discrepancies": [r.key() for r in self.discrepancies],
        }

    def dumps_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def dumps_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "params", "status", "predicate", "computed", "agree", "path", "clauses"])
        for r in self.rows:
            params = ";".join(f"{k}={v}" for k, v in r.params.items())
            clauses = " ".join(f"{k}={int(v)}" for k, v in r.clauses.items())
            w.writerow([r.family, params, r.status, _cell(r.predicate), _cell(r.computed), _cell(r.agree), r.path or "", clauses])
        return buf.getvalue()


def _cell(x):
    return "" if x is None else str(int(x))


def audit_family(
    family: str,
    params: Iterable,
    caps: Caps = Caps(),
    jobs: int = 1,
) -> AuditReport:
    """Audit a family over ``params``; rows come back in input order for any ``jobs``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    params = list(params)
    work = [(family, p, caps) for p in params]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_worker, work))
    else:
        rows = [_row_worker(w) for w in work]
    metadata = {
        "tool": "ordsup",
        "version": __version__,
        "element_cap": caps.element_cap,
        "direct_threshold": caps.direct_threshold,
        "cycle_limit": caps.cycle_limit,
    }
    # a wall-clock stamp would break byte-identical reports; honour SOURCE_DATE_EPOCH only
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        metadata["timestamp"] = int(epoch)
    return AuditReport(family, rows, metadata)


# ---------------------------------------------------------------------------
# Known-discrepancies ledger
# ---------------------------------------------------------------------------

def ledger_entry(row: TheoremVerdict) -> dict:
    return {"family": row.family, "params": row.params, "predicate": row.predicate, "computed": row.computed}


def _entry_key(entry: dict) -> str:
    return json.dumps(entry, sort_keys=True)


def default_ledger_text() -> str:
    return resources.files("ordsup").joinpath("data/known_discrepancies.ndjson").read_text()


def load_ledger(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def dump_ledger(entries: Iterable[dict]) -> str:
    keys = sorted({_entry_key(e) for e in entries})
    return "".join(k + "\n" for k in keys)


@dataclass
class LedgerDiff:
    new: list[dict]
    resolved: list[dict]

    @property
    def clean(self) -> bool:
        return not self.new and not self.resolved


def compare_with_ledger(report: AuditReport, ledger: list[dict]) -> LedgerDiff:
    """Discrepancies not in the ledger, and ledger entries for audited rows that now agree."""
    audited = {_entry_key(r.key()) for r in report.rows}
    current = {_entry_key(ledger_entry(r)): ledger_entry(r) for r in report.discrepancies}
    known = {
        _entry_key(e): e
        for e in ledger
        if _entry_key({"family": e["family"], "params": e["params"]}) in audited
    }
    new = [current[k] for k in sorted(current) if k not in known]
    resolved = [known[k] for k in sorted(known) if k not in current]
    return LedgerDiff(new, resolved)
