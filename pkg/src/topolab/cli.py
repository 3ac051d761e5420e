"""Command-line front end: ``topolab {generate,product,compute,partition,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .closed_forms import MINIMUMS, Family
from .errors import TopolabError
from .graph import Graph, make_complete, make_cycle, make_path, parse_graph, serialize_graph
from .harness import run_sweep
from .indices import IndexKind, edge_partition, index_exact
from .ops import corona, join

GENERATORS = {"path": make_path, "cycle": make_cycle, "complete": make_complete}
PRODUCTS = {"join": join, "corona": corona}


def _split_list(values: Sequence[str]) -> list[str]:
    out: list[str] = []
    for v in values:
        out.extend(p for p in v.split(",") if p)
    return out


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read(), source="<stdin>")
    return parse_graph(Path(path).read_text(encoding="utf-8"), source=path)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(args: argparse.Namespace) -> int:
    _emit(serialize_graph(GENERATORS[args.kind](args.n)), args.out)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    g = PRODUCTS[args.op](_read_graph(args.g1), _read_graph(args.g2))
    _emit(serialize_graph(g), args.out)
    return 0


def cmd_compute(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    kinds = [IndexKind.parse(k) for k in _split_list(args.kinds)]
    values = {k: index_exact(g, k) for k in kinds}
    if args.format == "json":
        doc = {k.value: {"exact": str(v), "float": float(f"{float(v):.9e}")} for k, v in values.items()}
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        lines = [f"{v} ≈ {float(v):.6f}" for v in values.values()]
        if len(kinds) > 1:
            lines = [f"{k.value}: {line}" for k, line in zip(kinds, lines)]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    part = edge_partition(_read_graph(args.graph))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "count"])
        w.writerows([a, b, c] for (a, b), c in part.items())
        _emit(buf.getvalue(), args.out)
    else:
        _emit("\n".join(f"({a},{b}),{c}" for (a, b), c in part.items()), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = _split_list(args.families)
    if "all" in names:
        fams = [f for f in Family
                if max(MINIMUMS[f][0], 2) <= args.r_max and max(MINIMUMS[f][1], 2) <= args.s_max]
    else:
        fams = [Family.parse(n) for n in names]
    kinds = [IndexKind.parse(k) for k in _split_list(args.kinds)]
    report = run_sweep(fams, args.r_max, args.s_max, kinds, audit=args.audit)
    _emit(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    for hit in report.unexpected_discrepancies:
        print(f"unlisted statement discrepancy: {hit.family} {hit.kind} r={hit.r} s={hit.s}",
              file=sys.stderr)
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topolab", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a path, cycle or complete graph")
    g.add_argument("kind", choices=sorted(GENERATORS))
    g.add_argument("n", type=int)
    g.set_defaults(func=cmd_generate)

    pr = sub.add_parser("product", help="join or corona of two edge-list files")
    pr.add_argument("op", choices=sorted(PRODUCTS))
    pr.add_argument("g1")
    pr.add_argument("g2")
    pr.set_defaults(func=cmd_product)

    c = sub.add_parser("compute", help="exact index values of a graph")
    c.add_argument("graph")
    c.add_argument("--kinds", nargs="+", default=["eso,eu,so"])
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_compute)

    pa = sub.add_parser("partition", help="degree-pair edge partition of a graph")
    pa.add_argument("graph")
    pa.add_argument("--format", choices=["text", "csv"], default="text")
    pa.set_defaults(func=cmd_partition)

    v = sub.add_parser("verify", help="sweep closed forms against the oracle")
    v.add_argument("--families", nargs="+", default=["all"])
    v.add_argument("--r-max", type=int, default=10)
    v.add_argument("--s-max", type=int, default=10)
    v.add_argument("--kinds", nargs="+", default=["eso,eu"])
    v.add_argument("--format", choices=["csv", "json"], default="csv")
    v.add_argument("--audit", action="store_true")
    v.set_defaults(func=cmd_verify)

    for sp in (g, pr, c, pa, v):
        sp.add_argument("--out", metavar="FILE")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (TopolabError, ValueError, OSError) as exc:
        print(f"topolab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
