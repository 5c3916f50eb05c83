"""``ordsup`` command line.

Exit codes: 0 success / separable, 1 negative verdict or new audit
discrepancy, 2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .audit import (
    CATALOG_FAMILIES,
    CATALOGS,
    FAMILIES,
    RANGE_FAMILIES,
    Caps,
    audit_family,
    compare_with_ledger,
    default_ledger_text,
    dump_ledger,
    ledger_entry,
    load_ledger,
    separability,
)
from .connectivity import (
    INFINITE,
    cyclic_vertex_connectivity,
    quotient_cyclic_vertex_connectivity,
)
from .graphs import EnumerationLimitError
from .groups import (
    GroupTooLargeError,
    all_sylow_facts,
    element_orders,
    is_eppo,
    is_epo,
    is_nilpotent,
)
from .parsing import SpecParseError, parse_group_spec
from .supergraph import order_quotient_graph, order_supergraph

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# direct graphs are stored densely while being built
GRAPH_VERTEX_CAP = 20000


class UsageError(Exception):
    pass


@contextmanager
def _output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load(spec_text: str, caps: Caps):
    """Parse a spec; return (spec, group or None, profile)."""
    spec = parse_group_spec(spec_text)
    size = spec.order()
    if spec.profile_only or (size is not None and size > caps.element_cap):
        if size is not None and size > caps.element_cap and not spec.profile_only:
            raise GroupTooLargeError(f"{spec.raw} has {size} elements, above the cap of {caps.element_cap}")
        return spec, None, spec.profile(caps.element_cap)
    group = spec.build(caps.element_cap)
    return spec, group, element_orders(group)


def cmd_group(args, caps: Caps) -> int:
    spec, group, profile = _load(args.spec, caps)
    info = {
        "name": group.name if group is not None else spec.raw,
        "order": profile.group_order,
        "exponent": profile.exponent,
        "profile": profile.to_json(),
        "eppo": is_eppo(profile),
        "epo": is_epo(profile),
        "nilpotent": is_nilpotent(group if group is not None else profile),
        "sylow": [f.to_json() for f in all_sylow_facts(profile)],
    }
    if args.json:
        sys.stdout.write(_dump(info))
        return EXIT_OK
    print(f"group     {info['name']}")
    print(f"order     {info['order']}")
    print(f"exponent  {info['exponent']}")
    print("profile   " + ", ".join(f"{d}:{m}" for d, m in profile.items()))
    print(f"EPPO {info['eppo']}  EPO {info['epo']}  nilpotent {info['nilpotent']}")
    for f in info["sylow"]:
        print(
            f"  p={f['prime']}: Sylow order {f['sylow_order']}, exponent {f['exponent']}, "
            f"{f['p_element_count']} p-elements, normal {f['is_normal']}"
        )
    return EXIT_OK


def cmd_graph(args, caps: Caps) -> int:
    spec, group, profile = _load(args.spec, caps)
    if args.quotient:
        Q = order_quotient_graph(profile)
        if args.json:
            with _output(args.json) as fh:
                fh.write(_dump(Q.to_json()))
        if args.dot:
            H = Q.as_graph()
            labels = tuple(f"{d} (x{w})" for d, w in zip(Q.orders, Q.weights))
            with _output(args.dot) as fh:
                fh.write(type(H)(H.adj, labels).to_dot(f"quotient {spec.raw}"))
        if not (args.json or args.dot):
            print(f"quotient of {spec.raw}: {Q.node_count} orders, {len(Q.edges())} edges")
        return EXIT_OK
    if group is None:
        raise GroupTooLargeError(f"{spec.raw} is profile-only; use --quotient")
    if group.order > args.max_vertices:
        raise GroupTooLargeError(f"S({spec.raw}) would have {group.order} vertices; use --quotient")
    S = order_supergraph(group, caps.element_cap)
    if args.json:
        with _output(args.json) as fh:
            fh.write(json.dumps(S.to_json()) + "\n")
    if args.dot:
        with _output(args.dot) as fh:
            fh.write(S.to_dot(f"S({spec.raw})"))
    if not (args.json or args.dot):
        print(f"S({spec.raw}): {S.vertex_count} vertices, {S.edge_count} edges")
    return EXIT_OK


def _fmt(labels) -> str:
    return "{" + ", ".join(str(x) for x in labels) + "}"


def cmd_analyze(args, caps: Caps) -> int:
    spec, group, profile = _load(args.spec, caps)
    if args.mode == "separable":
        sep = separability(group if group is not None else profile, caps)
        if args.json:
            sys.stdout.write(_dump({"separable": sep.separable, "path": sep.path, "certificate": sep.certificate}))
        elif sep.separable:
            cert = sep.certificate
            cut = cert["cutset"] if "cutset" in cert else [f"[order {d}]" for d in cert["cutset_orders"]]
            print(f"separable, cutset {_fmt(cut)}")
        else:
            print("not separable")
        return EXIT_OK if sep.separable else EXIT_NEGATIVE

    Q = order_quotient_graph(profile)
    qres = quotient_cyclic_vertex_connectivity(Q)
    out = None
    if group is not None and group.order <= caps.direct_threshold:
        S = order_supergraph(group, caps.element_cap)
        try:
            res = cyclic_vertex_connectivity(S, caps.cycle_limit)
        except EnumerationLimitError:
            res = None
        if res is not None:
            if res.value != qres.value:
                raise RuntimeError(f"direct and quotient connectivity disagree: {res.value} vs {qres.value}")
            out = res.to_json(S)
            out["path"] = "direct+quotient"
    if out is None:
        out = {"value": "infinite"} if qres.value == INFINITE else qres.certificate.to_json(Q, qres.value)
        out["path"] = "quotient"
    if args.json:
        sys.stdout.write(_dump(out))
    elif out["value"] == "infinite":
        print("ckappa = infinite (not separable)")
    else:
        cut = out["cutset"] if "cutset" in out else [f"[order {d}]" for d in out["cutset_orders"]]
        print(f"ckappa = {out['value']}, cutset {_fmt(cut)}")
    return EXIT_OK if out["value"] != "infinite" else EXIT_NEGATIVE


def cmd_audit(args, caps: Caps) -> int:
    family = args.family
    if args.group:
        if family not in CATALOG_FAMILIES:
            raise UsageError(f"--group applies to {', '.join(CATALOG_FAMILIES)}")
        params = args.group
    elif args.catalog:
        if family not in CATALOGS:
            raise UsageError(f"family {family} has no catalog; use --from/--to")
        params = CATALOGS[family]()
    else:
        if family not in RANGE_FAMILIES:
            raise UsageError(f"family {family} takes --catalog or --group")
        if args.from_ is None or args.to is None:
            raise UsageError("--from and --to are required")
        if args.from_ > args.to:
            raise UsageError(f"empty range {args.from_}..{args.to}")
        params = range(args.from_, args.to + 1)
    try:
        report = audit_family(family, params, caps, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    text = report.dumps_csv() if args.format == "csv" else report.dumps_json()
    with _output(args.out) as fh:
        fh.write(text)

    if args.write_ledger:
        with open(args.write_ledger, "w", encoding="utf-8") as fh:
            fh.write(dump_ledger(ledger_entry(r) for r in report.discrepancies))
    if args.ledger:
        with open(args.ledger, encoding="utf-8") as fh:
            ledger = load_ledger(fh.read())
    else:
        ledger = load_ledger(default_ledger_text())
    diff = compare_with_ledger(report, ledger)
    for e in diff.new:
        print(f"new discrepancy: {json.dumps(e, sort_keys=True)}", file=sys.stderr)
    for e in diff.resolved:
        print(f"ledger entry no longer reproduced: {json.dumps(e, sort_keys=True)}", file=sys.stderr)
    return EXIT_OK if diff.clean else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordsup", description="Order supergraphs and cyclic vertex connectivity.")
    p.add_argument("--threshold", type=int, default=None, help="largest |G| handled on the direct graph (default 2000)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="orders, Sylow facts and classification of a group")
    g.add_argument("spec")
    g.add_argument("--json", action="store_true")

    gr = sub.add_parser("graph", help="export S(G) or its order quotient")
    gr.add_argument("spec")
    gr.add_argument("--dot", metavar="PATH")
    gr.add_argument("--json", metavar="PATH")
    gr.add_argument("--quotient", action="store_true")
    gr.add_argument("--max-vertices", type=int, default=GRAPH_VERTEX_CAP)

    a = sub.add_parser("analyze", help="cyclic separability or cyclic vertex connectivity")
    a.add_argument("mode", choices=("separable", "ckappa"))
    a.add_argument("spec")
    a.add_argument("--json", action="store_true")

    au = sub.add_parser("audit", help="compare a theorem with computation")
    au.add_argument("family", choices=FAMILIES)
    au.add_argument("--from", dest="from_", type=int)
    au.add_argument("--to", type=int)
    au.add_argument("--catalog", action="store_true")
    au.add_argument("--group", action="append", metavar="SPEC")
    au.add_argument("--format", choices=("json", "csv"), default="json")
    au.add_argument("--out", default="-")
    au.add_argument("--jobs", type=int, default=1)
    au.add_argument("--ledger", metavar="PATH", help="known-discrepancies file (default: the bundled one)")
    au.add_argument("--write-ledger", metavar="PATH")
    return p


COMMANDS = {"group": cmd_group, "graph": cmd_graph, "analyze": cmd_analyze, "audit": cmd_audit}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = Caps() if args.threshold is None else Caps(direct_threshold=args.threshold)
        return COMMANDS[args.command](args, caps)
    except SpecParseError as exc:
        print(f"ordsup: bad group spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"ordsup: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupTooLargeError as exc:
        print(f"ordsup: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        # ORDSUP_ELEMENT_CAP and similar configuration problems
        print(f"ordsup: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
