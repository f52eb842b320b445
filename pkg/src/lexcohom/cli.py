"""Command-line surface.

Exit codes: 0 = success / all checks passed, 1 = a theorem check failed,
2 = usage, parse or resource errors (including uncertified windows).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import zstable
from .betti import betti_table, corners
from .core import MonomialIdeal, RingContext
from .embeddings import embedding_horizon, ideal_dims, lex_segment_ideal, lpp_ideal
from .errors import ResourceLimitError, WindowUncertifiedError
from .hilbert import hilbert_series
from .ioformat import (ParseError, as_monomial_ideal, format_ideal,
                       parse_ideal_file, write_ideal_file)
from .localcohom import cohomology_table
from .verify import THEOREMS, FamilySpec, run_family

USAGE_ERROR, THEOREM_FAILURE, OK = 2, 1, 0


def _read_ideal(args) -> MonomialIdeal:
    text = open(args.input).read() if args.input else sys.stdin.read()
    ctx, polys = parse_ideal_file(text)
    if args.char:
        ctx = RingContext(ctx.n, args.char, ctx.powers, ctx.z)
        from .groebner import Polynomial
        polys = [Polynomial.make(ctx, list(p.coeffs)) for p in polys]
    return as_monomial_ideal(ctx, polys)


def _parse_window(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def _emit_json(args, payload: dict):
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
            fh.write("\n")


def _ctx_json(ctx: RingContext) -> dict:
    return {"n": ctx.nx, "char": ctx.char, "powers": list(ctx.powers), "z": ctx.z}


def cmd_hilb(args) -> int:
    I = _read_ideal(args)
    hs = hilbert_series(I)
    upto = args.window[1] if args.window else 2 * max(I.max_gen_degree(), 1) + I.ctx.n
    window = hs.quotient_window(upto)
    print("numerator:", " ".join(map(str, hs.numer)))
    print(f"quotient dims 0..{upto}:", " ".join(map(str, window)))
    _emit_json(args, {
        "schema_version": 1, "command": "hilb", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I), "numerator": list(hs.numer),
        "quotient_dims": list(window),
    })
    return OK


def cmd_lex(args) -> int:
    I = _read_ideal(args)
    if I.ctx.powers:
        print("error: lex expects a ring without powers (use lpp)", file=sys.stderr)
        return USAGE_ERROR
    D = embedding_horizon(I.ctx, I.max_gen_degree())
    L = lex_segment_ideal(I.ctx, ideal_dims(I, D))
    print(format_ideal(L))
    _emit_json(args, {
        "schema_version": 1, "command": "lex", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I), "lex": format_ideal(L),
    })
    return OK


def cmd_lpp(args) -> int:
    I = _read_ideal(args)
    L = lpp_ideal(I)
    print(format_ideal(L))
    _emit_json(args, {
        "schema_version": 1, "command": "lpp", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I), "lpp": format_ideal(L),
    })
    return OK


def cmd_betti(args) -> int:
    I = _read_ideal(args)
    T = betti_table(I)
    for (i, j) in sorted(T.entries):
        if i > 0:
            print(f"beta[{i},{j}] = {T.entries[(i, j)]}")
    cs = corners(T)
    print(f"projdim {T.projdim}  regularity {T.regularity}  corners "
          + " ".join(f"({c.i},{c.slope})" for c in cs))
    _emit_json(args, {
        "schema_version": 1, "command": "betti", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I),
        "betti": [[i, j, v] for (i, j), v in sorted(T.entries.items())],
        "projdim": T.projdim, "regularity": T.regularity,
        "corners": [[c.i, c.slope, c.value] for c in cs],
    })
    return OK


def cmd_cohom(args) -> int:
    I = _read_ideal(args)
    T = cohomology_table(I, args.window, backend=args.backend)
    for i in range(T.n + 1):
        tail = T.tails[i]
        mark = "certified" if tail.certified else "UNCERTIFIED"
        print(f"H^{i} on [{T.lo},{T.hi}]: "
              + " ".join(map(str, T.rows[i]))
              + f"   tail {[str(c) for c in tail.coeffs]} ({mark})")
    if not T.all_certified():
        print("error: tail not certified; widen the window with --window",
              file=sys.stderr)
        return USAGE_ERROR
    _emit_json(args, {
        "schema_version": 1, "command": "cohom", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I), "backend": args.backend,
        "cohomology": [
            {"i": i, "lo": T.lo, "hi": T.hi, "values": list(T.rows[i]),
             "tail_poly": [str(c) for c in T.tails[i].coeffs],
             "certified": T.tails[i].certified}
            for i in range(T.n + 1)
        ],
    })
    return OK


def cmd_zstabilize(args) -> int:
    I = _read_ideal(args)
    dec = zstable.z_stabilize(I)
    J = zstable.z_recompose(dec)
    sys.stdout.write(write_ideal_file(J.ctx, J.gens))
    _emit_json(args, {
        "schema_version": 1, "command": "zstabilize", "context": _ctx_json(I.ctx),
        "ideal": format_ideal(I), "stabilized": format_ideal(J),
        "components": [format_ideal(c) for c in dec.components],
    })
    return OK


def _parse_family(text: str, args) -> FamilySpec:
    fields: dict = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        key = key.strip().lower()
        if key == "n":
            fields["n"] = int(val)
        elif key == "d":
            fields["powers"] = tuple(int(x) for x in val.split(":") if x)
        elif key in ("maxdeg", "max_deg"):
            fields["max_deg"] = int(val)
        elif key == "z":
            fields["with_z"] = val.strip() in ("", "1", "true", "yes")
        else:
            raise ValueError(f"unknown family key {key!r}")
    if "n" not in fields:
        raise ValueError("family needs n=<int>")
    if args.max_deg is not None:
        fields["max_deg"] = args.max_deg
    fields["char"] = args.char or 32003
    fields["seed"] = args.seed
    fields["count"] = args.samples
    fields["mode"] = "exhaustive" if args.exhaustive else "random"
    return FamilySpec(**fields)


def cmd_verify(args) -> int:
    spec = _parse_family(args.family, args)
    if args.theorem in ("embedding-lemmas", "recurrences", "zstabilize") \
            and not spec.with_z:
        spec = FamilySpec(**{**spec.__dict__, "with_z": True})
    report = run_family(args.theorem, spec, jobs=args.jobs)
    s = report.summary()
    for r in report.records:
        if not r.passed:
            bad = [k for k, v in r.checks.items() if not v]
            print(f"FAIL {r.ideal}  checks: {', '.join(bad)}  at {r.first_fail}")
    print(f"{args.theorem}: {s['passed']}/{s['total']} instances passed")
    _emit_json(args, report.to_json_dict())
    return OK if report.passed else THEOREM_FAILURE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lexcohom",
        description="Exact Hilbert series, Betti tables, local cohomology and "
                    "lex-plus-power verification for monomial quotients.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, window=False):
        p.add_argument("--input", help="ideal file (default: stdin)")
        p.add_argument("--char", type=int, default=None,
                       help="override the coefficient characteristic")
        p.add_argument("--json", help="write a JSON report to this path")
        if window:
            p.add_argument("--window", type=_parse_window, default=None,
                           metavar="LO:HI")

    p = sub.add_parser("hilb", help="Hilbert series and quotient dims")
    common(p, window=True)
    p.set_defaults(fn=cmd_hilb)

    p = sub.add_parser("lex", help="lex-segment ideal with the same Hilbert function")
    common(p)
    p.set_defaults(fn=cmd_lex)

    p = sub.add_parser("lpp", help="lex-plus-power ideal with the same Hilbert function")
    common(p)
    p.set_defaults(fn=cmd_lpp)

    p = sub.add_parser("betti", help="graded Betti table, regularity, corners")
    common(p)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("cohom", help="local-cohomology Hilbert functions")
    common(p, window=True)
    p.add_argument("--backend", choices=("combinatorial", "ext"),
                   default="combinatorial")
    p.set_defaults(fn=cmd_cohom)

    p = sub.add_parser("zstabilize", help="stabilize along the last variable")
    common(p)
    p.set_defaults(fn=cmd_zstabilize)

    p = sub.add_parser("verify", help="run a theorem check over a family")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("--family", required=True,
                   help="e.g. n=2,d=2:2,maxdeg=3 (d values separated by ':')")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=None, dest="max_deg",
                   help="override the family's maxdeg")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--json", help="write the JSON report to this path")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except WindowUncertifiedError as exc:
        print(f"error: {exc}\nhint: widen the window with --window", file=sys.stderr)
        return USAGE_ERROR
    except (ResourceLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
