"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or an unresolved twist in
``module --no-trivial-det``), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Optional, Sequence

from .derivation import decompose
from .diagram import Frame, make_diagram
from .enumeration import canonical_order, poincare_polynomial, rect_enumerate, recursive_enumerate
from .errors import BoundExceeded, DiagramError, NontrivialTwistUnresolved
from .module import rank_table_records
from .render import RenderSpec, render_ascii, render_ascii_gallery, render_svg, render_svg_diagrams
from .verify import DEFAULT_MAX_N, run_checks

log = logging.getLogger("spinorwitt")

FORMATS = ("text", "json", "csv", "svg")
MAX_N = 30


class UsageError(Exception):
    pass


def _positive(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {k}")
    return k


def _parts(value: str) -> list[int]:
    value = value.strip().strip("()[]")
    try:
        return [int(p) for p in value.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"parts must be comma-separated integers, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", default="-", help="output path (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="spinorwitt",
        description="Even shifted Young diagrams and the total Witt group of spinor varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("enumerate", parents=[common], help="list the even shifted diagrams for OG+(n)")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("module", parents=[common], help="graded module, rank table and derivation trace")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--no-trivial-det", action="store_true",
                   help="keep the det twist of even-n splits instead of trivialising it")

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N)

    p = sub.add_parser("poincare", parents=[common], help="Poincare polynomial of the diagram weights")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("render", parents=[common], help="ASCII (text) or SVG pictures")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--parts", type=_parts, default=None, help="render one diagram, e.g. 6,5,2,1")
    p.add_argument("--cell-px", type=int, default=20)

    p = sub.add_parser("rect", parents=[common], help="even Young diagrams in a rectangle")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--cols", type=_positive, required=True)
    return parser


def _require_format(args, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} supports --format {'|'.join(allowed)}, got {args.format}")


def _check_n(n: int) -> None:
    if n > MAX_N:
        raise BoundExceeded(f"--n is limited to {MAX_N}, got {n}")


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_enumerate(args) -> tuple[str, int]:
    _require_format(args, ("text", "json", "csv"))
    _check_n(args.n)
    ds = recursive_enumerate(args.n)
    records = [d.to_dict() for d in ds.diagrams()]
    if args.format == "json":
        return _json(records), 0
    if args.format == "csv":
        return _csv([["n", "parts", "weight"]] + [[args.n, " ".join(map(str, r["parts"])), r["weight"]] for r in records]), 0
    lines = [f"# {len(ds)} even shifted diagrams in staircase({args.n - 1})"]
    lines += [f"{p}\t{p.weight}" for p in ds]
    return "\n".join(lines) + "\n", 0


def cmd_module(args) -> tuple[str, int]:
    _require_format(args, ("text", "json", "csv"))
    _check_n(args.n)
    trivial_det = not args.no_trivial_det
    code = 0
    try:
        module, trace = decompose(args.n, trivial_det=trivial_det)
    except NontrivialTwistUnresolved as exc:
        log.error("%s", exc)
        module, trace, code = exc.module, exc.trace, 1
    payload = {
        "n": args.n,
        "trivial_det": trivial_det,
        "unresolved_twist": code == 1,
        "rank": module.rank,
        "generators": module.to_list(),
        "rank_table": rank_table_records(module),
        "trace": [s.to_dict() for s in trace],
    }
    if args.format == "json":
        return _json(payload), code
    if args.format == "csv":
        rows = [["degree", "residue", "twist", "provenance"]]
        rows += [[g["degree"], g["residue"], ";".join(g["twist"]), g["provenance"]] for g in payload["generators"]]
        return _csv(rows), code
    lines = [f"W^tot(OG+({args.n})) is free of rank {module.rank} over W^tot(S)"]
    lines.append("generators (degree, residue mod 4, twist):")
    lines += [f"  {g['degree']:>4}  {g['residue']}  [{','.join(g['twist'])}]" for g in payload["generators"]]
    lines.append("rank table (residue, twist -> rank):")
    lines += [f"  {r['residue']}  [{','.join(r['twist'])}]  {r['rank']}" for r in payload["rank_table"]]
    lines.append("trace:")
    lines += [f"  {s['rule']:<10} n={s['n']:<3} shift={s['shift']:<4} twist=[{','.join(s['twist'])}]  {s['cite']}"
              for s in payload["trace"]]
    return "\n".join(lines) + "\n", code


def cmd_verify(args) -> tuple[str, int]:
    _require_format(args, ("text", "json"))
    _check_n(args.max_n)
    results = run_checks(args.max_n)
    for r in results:
        log.info("%s %s in %.3fs", r.name, "ok" if r.ok else "FAILED", r.seconds)
    code = 0 if all(r.ok for r in results) else 1
    if args.format == "json":
        return _json({"max_n": args.max_n, "ok": code == 0, "checks": [r.to_dict() for r in results]}), code
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    return "\n".join(lines) + "\n", code


def cmd_poincare(args) -> tuple[str, int]:
    _require_format(args, ("text", "json", "csv"))
    _check_n(args.n)
    p = poincare_polynomial(args.n)
    if args.format == "json":
        return _json({"n": args.n, "coefficients": p.dense()}), 0
    if args.format == "csv":
        return _csv([["degree", "coefficient"]] + [[d, c] for d, c in p.coefficients.items()]), 0
    return f"{p}\n", 0


def cmd_render(args) -> tuple[str, int]:
    _require_format(args, ("text", "svg"))
    _check_n(args.n)
    color = os.environ.get("WITT_DIAGRAMS_COLOR", "0") == "1" and args.format == "text"
    try:
        spec = RenderSpec(cell_px=args.cell_px, color=color)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.parts is not None:
        d = make_diagram(Frame.staircase(args.n - 1), args.parts)
        if args.format == "svg":
            return render_svg_diagrams([d], spec), 0
        return render_ascii(d, spec), 0
    ds = recursive_enumerate(args.n)
    if args.format == "svg":
        return render_svg(ds, spec), 0
    return render_ascii_gallery(ds, spec), 0


def cmd_rect(args) -> tuple[str, int]:
    _require_format(args, ("text", "json", "csv"))
    found = canonical_order(rect_enumerate(args.rows, args.cols))
    frame = Frame.rectangle(args.rows, args.cols)
    records = [make_diagram(frame, p).to_dict() for p in found]
    if args.format == "json":
        return _json(records), 0
    if args.format == "csv":
        return _csv([["rows", "cols", "parts", "weight"]]
                    + [[args.rows, args.cols, " ".join(map(str, r["parts"])), r["weight"]] for r in records]), 0
    lines = [f"# {len(records)} even Young diagrams in a {args.rows}x{args.cols} rectangle"]
    lines += ["(" + ",".join(map(str, r["parts"])) + f")\t{r['weight']}" for r in records]
    return "\n".join(lines) + "\n", 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "module": cmd_module,
    "verify": cmd_verify,
    "poincare": cmd_poincare,
    "render": cmd_render,
    "rect": cmd_rect,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        old_err, sys.stderr = sys.stderr, stderr
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr = old_err
    except SystemExit as exc:
        return int(exc.code or 0)

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)

    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, BoundExceeded, DiagramError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2

    if args.out == "-":
        stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
