"""Command-line front end.

Subcommands: ``invariants``, ``seifert-check``, ``reconstruct``,
``parallel``, ``selftest``.  Inputs are PD text files (or ``@name`` for a
bundled catalog diagram); ``reconstruct`` takes a map JSON file whose
weight entries carry ``cd`` labels.  Output is plain and byte-deterministic
(no colour; NO_COLOR is honoured trivially).

Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
3 inadmissible input (e.g. a non-Eulerian labeling).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .catalog import CATALOG, CATALOG_ORDER
from .diagrams import (checkerboard, canonical_states, parse_pd, parse_state,
                       state_ribbon_graph, tait_graph)
from .errors import NotEulerian, RibbonlinkError
from .maps import CombinatorialMap
from .parallels import parallel_genus_report, parallel_tait
from .seifert import reconstruct_link, verify_seifert_characterization

ROW_ORDER = ("tait_black", "tait_white", "allA", "allB", "seifert")


def _load_diagram(source):
    if source.startswith("@"):
        name = source[1:]
        if name not in CATALOG:
            raise RibbonlinkError(
                f"unknown catalog diagram {name!r}; "
                f"available: {', '.join(CATALOG_ORDER)}")
        text = CATALOG[name]
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_pd(text)


def _json(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


# ----------------------------------------------------------------------
# invariants


def invariants_data(diagram, which_coloring="canonical", emit_maps=False):
    colorings = checkerboard(diagram)
    coloring = colorings[0] if which_coloring == "canonical" else colorings[1]
    states = canonical_states(diagram, coloring)
    graphs = {
        "tait_black": tait_graph(diagram, coloring),
        "tait_white": tait_graph(diagram, coloring.swapped()),
        "allA": state_ribbon_graph(diagram, states["allA"], coloring),
        "allB": state_ribbon_graph(diagram, states["allB"], coloring),
        "seifert": state_ribbon_graph(diagram, states["seifert"], coloring),
    }
    rows = []
    for key in ROW_ORDER:
        c = graphs[key].counts()
        row = {"graph": key, "v": c.v, "e": c.e, "k": c.k, "p": c.p, "g": c.g}
        if emit_maps:
            row["map"] = graphs[key].to_json_dict()
        rows.append(row)
    return {"crossings": diagram.n,
            "components": len(diagram.components),
            "coloring": which_coloring,
            "rows": rows}, graphs


def _invariants_text(data):
    lines = ["graph       v   e   k   p   g"]
    for row in data["rows"]:
        lines.append("%-10s %3d %3d %3d %3d %3d"
                     % (row["graph"], row["v"], row["e"], row["k"],
                        row["p"], row["g"]))
    return "\n".join(lines) + "\n"


def _invariants_csv(data):
    lines = ["graph,v,e,k,p,g"]
    for row in data["rows"]:
        lines.append("{graph},{v},{e},{k},{p},{g}".format(**row))
    return "\n".join(lines) + "\n"


def render_invariants_text(catalog_name):
    data, _ = invariants_data(parse_pd(CATALOG[catalog_name]))
    return _invariants_text(data)


def cmd_invariants(args):
    diagram = _load_diagram(args.file)
    data, graphs = invariants_data(diagram, args.coloring, args.emit_maps)
    if args.format == "json":
        sys.stdout.write(_json(data))
    elif args.format == "csv":
        sys.stdout.write(_invariants_csv(data))
    elif args.format == "dot":
        for key in ROW_ORDER:
            sys.stdout.write(graphs[key].underlying_graph().to_dot(key))
    else:
        sys.stdout.write(_invariants_text(data))
    return 0


# ----------------------------------------------------------------------
# seifert-check


def seifert_report_data(diagram, which_coloring="canonical"):
    colorings = checkerboard(diagram)
    coloring = colorings[0] if which_coloring == "canonical" else colorings[1]
    rep = verify_seifert_characterization(diagram, coloring)
    rep["coloring"] = which_coloring
    return rep


def _seifert_text(rep):
    lines = []
    for chk in rep["checks"]:
        lines.append("%-38s %s" % (chk["name"],
                                   "pass" if chk["pass"] else
                                   "FAIL " + chk["detail"]))
    lines.append("all checks: %s" % ("pass" if rep["all_pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def render_seifert_text(catalog_name):
    return _seifert_text(seifert_report_data(parse_pd(CATALOG[catalog_name])))


def cmd_seifert_check(args):
    diagram = _load_diagram(args.file)
    rep = seifert_report_data(diagram, args.coloring)
    if args.format == "json":
        sys.stdout.write(_json(rep))
    else:
        sys.stdout.write(_seifert_text(rep))
    return 0 if rep["all_pass"] else 1


# ----------------------------------------------------------------------
# reconstruct


def cmd_reconstruct(args):
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    base = CombinatorialMap.from_json_dict(data)
    labels = {}
    for entry in data.get("weights", ()):
        if "cd" in entry:
            labels[int(entry["edge"])] = entry["cd"]
    missing = set(base.edge_labels) - set(labels)
    if missing:
        raise RibbonlinkError(
            f"cd labels missing for edges {sorted(missing)}")
    _diagram, pd_text = reconstruct_link(base, labels)
    if args.format == "json":
        sys.stdout.write(_json({"pd": pd_text}))
    else:
        sys.stdout.write(pd_text + "\n")
    return 0


# ----------------------------------------------------------------------
# parallel


def cmd_parallel(args):
    diagram = _load_diagram(args.file)
    coloring, _ = checkerboard(diagram)
    if args.state in ("allA", "allB", "seifert"):
        state = canonical_states(diagram, coloring)[args.state]
    else:
        state = parse_state(args.state, diagram.n)
    report = parallel_genus_report(diagram, coloring, state, args.r)
    counts = [parallel_tait(diagram, coloring, k).counts_record()
              for k in range(1, args.r + 2)]
    if args.format == "csv":
        lines = ["r,v,e,f"]
        for rec in counts:
            lines.append("{r},{v},{e},{f}".format(**rec))
        sys.stdout.write("\n".join(lines) + "\n")
    elif args.format == "json":
        for rec in counts:
            rec["face_sizes"] = {str(k): v for k, v in rec["face_sizes"].items()}
        sys.stdout.write(_json({"counts": counts, "report": report}))
    else:
        lines = ["state %s  base genus %d  edges %d"
                 % (report["state"], report["base_genus"], report["base_edges"])]
        for rec in report["records"]:
            lines.append(
                "r=%d oracle=%d ca4=%d iterated_ca4=%d printed_ca1=%d "
                "ca3=%d adjudication=%s ca5=(%s,%s)"
                % (rec["r"], rec["oracle_genus"], rec["ca4_value"],
                   rec["ca4_iterated_value"], rec["ca1_value"],
                   rec["ca3_value"], rec["adjudication"],
                   "ok" if rec["ca5_item1"] else "FAIL",
                   "ok" if rec["ca5_item2"] else "FAIL"))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


# ----------------------------------------------------------------------
# selftest


def cmd_selftest(args):
    only = set(args.only.split(",")) if args.only else None
    ok = acceptance.run_all(quick=args.quick, only=only,
                            out=lambda line: print(line, flush=True))
    return 0 if ok else 1


# ----------------------------------------------------------------------


def build_parser():
    top = argparse.ArgumentParser(
        prog="ribbonlink",
        description="Ribbon graphs of link diagrams: Tait graphs, state "
                    "graphs, partial duals, Seifert graphs, parallels.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants",
                       help="v,e,k,p,g for the Tait/all-A/all-B/Seifert graphs")
    p.add_argument("file", help="PD file, or @name for a catalog diagram")
    p.add_argument("--coloring", choices=("canonical", "swapped"),
                   default="canonical")
    p.add_argument("--format", choices=("text", "json", "csv", "dot"),
                   default="text")
    p.add_argument("--emit-maps", action="store_true",
                   help="include map JSON per row (json format)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("seifert-check",
                       help="run the Seifert-characterization checks")
    p.add_argument("file")
    p.add_argument("--coloring", choices=("canonical", "swapped"),
                   default="canonical")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_seifert_check)

    p = sub.add_parser("reconstruct",
                       help="rebuild an oriented diagram from a cd-labeled "
                            "plane map (map JSON with cd weights)")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("parallel",
                       help="genus report for the r-fold parallels")
    p.add_argument("file")
    p.add_argument("-r", type=int, required=True,
                   help="largest index of the recurrence to check "
                        "(builds blow-ups up to r+1)")
    p.add_argument("--state", default="seifert",
                   help="A/B string, or allA / allB / seifert")
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default="text")
    p.set_defaults(func=cmd_parallel)

    p = sub.add_parser("selftest", help="run every acceptance suite")
    p.add_argument("--quick", action="store_true",
                   help="smaller corpora (smoke test)")
    p.add_argument("--only", default="",
                   help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_selftest)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotEulerian as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.violations:
            print("violating vertices: " + ", ".join(exc.violations),
                  file=sys.stderr)
        return 3
    except RibbonlinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
