"""Command-line interface.

Inputs are file paths, ``-`` for stdin, or ``@name`` for bundled data:
``@x1``/``@xp`` for bikei, ``@ex-proper``/``@second`` for modules and
``@8^{-1,-1}_1`` for catalog diagrams.  Results go to stdout, errors and
progress to stderr.  Exit codes: 0 success, 1 domain error (including a
failed verification or a table mismatch), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .bikei import Bikei, enumerate_bikei, verify
from .coloring import enumerate_colorings
from .diagram import MarkedGraphDiagram, fuzz_moves, load, smooth
from .enhance import enhanced_polynomial
from .errors import BikeiKitError, InputError
from .module import (
    NAIVE_WORK_BOUND, BikeiModule, load_module, parse_block, reidemeister2_violation,
    search_modules, verify_module,
)

SCHEMA = "bikeikit/1"


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc


def read_bikei(source: str) -> Bikei:
    if source.startswith("@"):
        return catalog.bikei(source[1:])
    return Bikei.from_text(_read(source))


def read_diagram(source: str) -> MarkedGraphDiagram:
    if source.startswith("@"):
        return catalog.get(source[1:]).diagram
    return load(_read(source))


def read_module(source: str, base: Bikei | None, modulus: int | None) -> BikeiModule:
    """JSON module file, or the block text form when ``--bikei`` and ``--mod`` are given."""
    if source.startswith("@"):
        return catalog.module(source[1:])
    text = _read(source)
    if text.lstrip().startswith("{"):
        return load_module(text, base)
    if base is None or modulus is None:
        raise InputError("a block-matrix module file needs --bikei and --mod")
    return BikeiModule.from_matrices(base, modulus, *parse_block(text, base.n))


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- subcommands ---------------------------------------------------------


def cmd_bikei_verify(args) -> int:
    # parse without validating so a failing table can be reported
    if args.file.startswith("@"):
        U, O = catalog.bikei(args.file[1:]).tables()
    else:
        text = _read(args.file).strip()
        if text.startswith("{"):
            data = json.loads(text)
            U, O = data.get("under"), data.get("over")
            if U is None or O is None:
                raise InputError("bikei JSON needs 'under' and 'over'")
        else:
            rows = [line.split() for line in text.splitlines() if line.strip()]
            try:
                n = int(rows[0][0])
                vals = [[int(v) for v in r] for r in rows[1:]]
            except (IndexError, ValueError) as exc:
                raise InputError(f"malformed bikei text: {exc}") from exc
            if len(vals) != 2 * n:
                raise InputError(f"expected 2*{n} table rows after the size line")
            U, O = vals[:n], vals[n:]
    report = verify(U, O)
    v = report.violation
    payload = {"kind": "bikei-verify", "ok": report.ok}
    if v is not None:
        payload.update(axiom=v.axiom, witness=list(v.witness))
    _emit(args, payload, str(report))
    return 0 if report.ok else 1


def cmd_bikei_enumerate(args) -> int:
    found = enumerate_bikei(args.n, max_n=args.max_n)
    if args.count_only:
        _emit(args, {"kind": "bikei-count", "n": args.n, "count": len(found)}, str(len(found)))
        return 0
    text = "\n\n".join(X.to_block() for X in found)
    _emit(args, {"kind": "bikei-list", "n": args.n, "bikei": [X.to_json() for X in found]}, text)
    return 0


def cmd_module_verify(args) -> int:
    base = read_bikei(args.bikei)
    text = _read(args.file) if not args.file.startswith("@") else None
    if text is None:
        M = catalog.module(args.file[1:])
        T, S, R, m = M.T, M.S, M.R, M.modulus
    elif text.lstrip().startswith("{"):
        data = json.loads(text)
        T, S, R, m = data["T"], data["S"], data["R"], int(data["modulus"])
    else:
        if args.mod is None:
            raise InputError("a block-matrix module file needs --mod")
        T, S, R = parse_block(text, base.n)
        m = args.mod
    report = verify_module(base, m, T, S, R)
    payload = {"kind": "module-verify", "ok": report.ok}
    lines = [str(report)]
    if report.violation is not None:
        payload.update(axiom=report.violation.axiom, witness=list(report.violation.witness))
    else:
        M = BikeiModule.from_matrices(base, m, [list(r) for r in T], [list(r) for r in S], [list(r) for r in R])
        r2 = reidemeister2_violation(M)
        payload["r2_ok"] = r2 is None
        lines.append("r2 conditions: ok" if r2 is None else f"r2 conditions: {r2}")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_module_search(args) -> int:
    base = read_bikei(args.bikei)
    workers = args.workers if args.workers is not None else int(os.environ.get("BIKEIKIT_WORKERS", "1"))
    found = search_modules(
        base, args.mod, pruned=not args.naive, workers=workers,
        work_bound=args.work_bound, progress=_progress,
    )
    if args.r2_only:
        found = [M for M in found if reidemeister2_violation(M) is None]
    if args.count_only:
        _emit(args, {"kind": "module-count", "modulus": args.mod, "count": len(found)}, str(len(found)))
        return 0
    text = "\n\n".join(M.to_block() for M in found)
    payload = {
        "kind": "module-list", "modulus": args.mod,
        "modules": [{"T": M.T, "S": M.S, "R": M.R} for M in found],
    }
    _emit(args, payload, text)
    return 0


def cmd_color(args) -> int:
    X = read_bikei(args.bikei)
    d = read_diagram(args.diagram)
    fs = enumerate_colorings(d, X)
    if args.count:
        _emit(args, {"kind": "color-count", "count": len(fs)}, str(len(fs)))
        return 0
    lines = [str(len(fs))] + [" ".join(map(str, f.vector())) for f in fs]
    _emit(args, {"kind": "colorings", "count": len(fs), "colorings": [list(f.vector()) for f in fs]}, "\n".join(lines))
    return 0


def cmd_invariant(args) -> int:
    base = read_bikei(args.bikei) if args.bikei else None
    M = read_module(args.module, base, args.mod)
    d = read_diagram(args.diagram)
    p = enhanced_polynomial(d, M)
    _emit(args, {"kind": "enhanced-polynomial", "polynomial": str(p), **p.to_json()}, str(p))
    return 0


def cmd_smooth(args) -> int:
    d = read_diagram(args.diagram)
    dirs = ("plus", "minus") if args.direction == "both" else (args.direction,)
    out = {k: smooth(d, k) for k in dirs}
    text = "\n".join(f"{k}: {s}" if len(dirs) > 1 else str(s) for k, s in out.items())
    _emit(args, {"kind": "smoothing", **{k: str(s) for k, s in out.items()}}, text)
    return 0


def cmd_fuzz(args) -> int:
    d = read_diagram(args.diagram)
    out = fuzz_moves(d, args.seed, args.k, max_moves=args.max_moves)
    _emit(args, {"kind": "fuzz", "seed": args.seed, "diagrams": [str(e) for e in out]}, "\n".join(map(str, out)))
    return 0


def cmd_reproduce(args) -> int:
    override = read_module(args.module, None, None) if args.module else None
    rows = catalog.reproduce(args.table, override)
    lines, payload_rows = [], []
    for r in rows:
        got = "(no diagram)" if r.got is None else str(r.got)
        mark = "ok" if r.ok else "MISMATCH"
        lines.append(f"{mark:8}  {r.name:14}  expected {r.expected}  got {got}  [{r.status}]")
        payload_rows.append({
            "name": r.name, "expected": str(r.expected), "got": None if r.got is None else str(r.got),
            "ok": r.ok, "status": r.status,
        })
    matched = sum(r.ok for r in rows)
    lines.append(f"{matched}/{len(rows)} rows match")
    _emit(args, {"kind": "reproduce", "table": args.table, "rows": payload_rows}, "\n".join(lines))
    return 0 if matched == len(rows) else 1


def cmd_catalog(args) -> int:
    es = catalog.entries()
    lines = [f"{e.name:14} {e.ch_index:3}  {e.status:11} {e.file or '-'}" for e in es]
    payload = {
        "kind": "catalog", "version": catalog.version(),
        "entries": [{"name": e.name, "file": e.file, "status": e.status, "ch_index": e.ch_index,
                     "orientable": e.orientable} for e in es],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bikeikit", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bikei", help="verify or enumerate bikei").add_subparsers(dest="action", required=True)
    bv = b.add_parser("verify")
    bv.add_argument("file")
    bv.set_defaults(func=cmd_bikei_verify)
    be = b.add_parser("enumerate")
    be.add_argument("n", type=int)
    be.add_argument("--max-n", type=int, default=4)
    be.add_argument("--count-only", action="store_true")
    be.set_defaults(func=cmd_bikei_enumerate)

    m = sub.add_parser("module", help="verify or search bikei modules").add_subparsers(dest="action", required=True)
    mv = m.add_parser("verify")
    mv.add_argument("file", help="module JSON, or block text with --mod")
    mv.add_argument("--bikei", required=True)
    mv.add_argument("--mod", type=int)
    mv.set_defaults(func=cmd_module_verify)
    ms = m.add_parser("search")
    ms.add_argument("--bikei", required=True)
    ms.add_argument("--mod", type=int, required=True)
    ms.add_argument("--count-only", action="store_true")
    ms.add_argument("--naive", action="store_true", help="walk the raw coefficient space")
    ms.add_argument("--work-bound", type=int, default=NAIVE_WORK_BOUND)
    ms.add_argument("--workers", type=int, help="default: $BIKEIKIT_WORKERS or 1")
    ms.add_argument("--r2-only", action="store_true", help="keep modules meeting the R2 bead conditions")
    ms.set_defaults(func=cmd_module_search)

    c = sub.add_parser("color", help="bikei colorings of a diagram")
    c.add_argument("--bikei", required=True)
    c.add_argument("--diagram", required=True)
    c.add_argument("--count", action="store_true")
    c.set_defaults(func=cmd_color)

    i = sub.add_parser("invariant", help="enhanced polynomial of a diagram")
    i.add_argument("--module", required=True)
    i.add_argument("--bikei", help="base bikei for a block-matrix module file")
    i.add_argument("--mod", type=int)
    i.add_argument("--diagram", required=True)
    i.set_defaults(func=cmd_invariant)

    s = sub.add_parser("smooth", help="smooth every marked vertex")
    s.add_argument("--diagram", required=True)
    s.add_argument("--direction", choices=("plus", "minus", "both"), default="both")
    s.set_defaults(func=cmd_smooth)

    f = sub.add_parser("fuzz", help="random Omega_1/2/4 insertions")
    f.add_argument("--diagram", required=True)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("-k", type=int, default=5)
    f.add_argument("--max-moves", type=int, default=3)
    f.set_defaults(func=cmd_fuzz)

    r = sub.add_parser("reproduce", help="recompute a published table from the catalog")
    r.add_argument("--table", choices=("ex-proper", "second"), required=True)
    r.add_argument("--module", help="use this module instead of the table's own")
    r.set_defaults(func=cmd_reproduce)

    cl = sub.add_parser("catalog", help="list catalog entries")
    cl.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BikeiKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (json.JSONDecodeError, KeyError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
