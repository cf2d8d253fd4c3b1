"""Command-line interface: ``amub <command> ...``.

Exit codes: 0 success, 1 verification mismatch or bound violation,
2 bad parameters or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bases import DEFAULT_TOL, realify_collection, tensor_collections
from .bundle import certify, compare_certificate, read_bundle, write_bundle
from .combinatorics import (
    family_is_mols,
    hadamard_paley,
    hadamard_sylvester,
    mols_macneish,
    mols_prime_power,
)
from .constructions import build
from .errors import AmubError, BundleFormatError, NotOrthonormal
from .reports import bounds_report, render_bounds, render_table1, table1_json, table1_rows

FAMILY_PARAMS = {
    "standard": ("d", "field"),
    "mub-pp": ("q",),
    "amub-gauss": ("q",),
    "amub-jacobi": ("q",),
    "amub-ec": ("p", "a", "b", "m"),
    "hadamard-pair": ("k", "q"),
}


class UsageError(Exception):
    pass


def _spec_from_args(family: str, args) -> dict:
    if family not in FAMILY_PARAMS:
        raise UsageError(f"unknown family {family!r}")
    params = {}
    for name in FAMILY_PARAMS[family]:
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    if family == "standard":
        params.setdefault("field", "C")
        if "d" not in params:
            raise UsageError("family standard needs --d")
    elif family != "hadamard-pair":
        missing = [n for n in FAMILY_PARAMS[family] if n not in params]
        if missing:
            raise UsageError(f"family {family} needs " + ", ".join(f"--{n}" for n in missing))
    return {"id": family, "params": params}


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def cmd_construct(args) -> int:
    if args.family == "realify":
        if not args.inner:
            raise UsageError("family realify needs --inner FAMILY")
        spec = {"id": "realify", "params": {"inner": _spec_from_args(args.inner, args)}}
    else:
        spec = _spec_from_args(args.family, args)
    coll = build(spec, args.tol)
    report = certify(coll)
    write_bundle(coll, args.out, report)
    summary = {"out": str(args.out), "field": coll.field, "dimension": coll.d, "basis_count": coll.n,
               "gamma": report.gamma if report else None}
    _emit(args, f"wrote {args.out}: field {coll.field}, d={coll.d}, n={coll.n}"
          + (f", gamma={report.gamma:.10f}" if report else ""), summary)
    return 0


def cmd_verify(args) -> int:
    try:
        coll, embedded = read_bundle(args.path, args.tol)
    except NotOrthonormal as exc:
        print(f"MISMATCH: {exc}")
        return 1
    report = certify(coll)
    problems = compare_certificate(embedded, report)
    if args.regenerate and coll.construction:
        try:
            fresh = build(coll.construction, args.tol)
        except AmubError as exc:
            problems.append(f"cannot regenerate: {exc}")
        else:
            if fresh.vectors.shape != coll.vectors.shape or \
                    np.max(np.abs(fresh.vectors - coll.vectors)) > coll.tau:
                problems.append("data differs from regenerated construction")
    payload = {"certificate": report.to_dict() if report else None, "problems": problems,
               "status": "ok" if not problems else "mismatch"}
    text = report.to_text() if report else f"single basis, d={coll.d}: orthonormal"
    if problems:
        text += "\n" + "\n".join(f"MISMATCH: {p}" for p in problems)
    _emit(args, text, payload)
    return 1 if problems else 0


def cmd_realify(args) -> int:
    coll, _ = read_bundle(args.path, args.tol)
    out = realify_collection(coll)
    report = certify(out)
    write_bundle(out, args.out, report)
    _emit(args, f"wrote {args.out}: field R, d={out.d}, n={out.n}",
          {"out": str(args.out), "dimension": out.d, "basis_count": out.n})
    return 0


def cmd_tensor(args) -> int:
    left, _ = read_bundle(args.left, args.tol)
    right, _ = read_bundle(args.right, args.tol)
    out = tensor_collections(left, right)
    report = certify(out)
    write_bundle(out, args.out, report)
    _emit(args, f"wrote {args.out}: field {out.field}, d={out.d}, n={out.n}",
          {"out": str(args.out), "dimension": out.d, "basis_count": out.n})
    return 0


def cmd_table1(args) -> int:
    rows = table1_rows(args.max_q, args.max_p)
    _emit(args, render_table1(rows), table1_json(rows))
    return 1 if any(r.status == "VIOLATED" for r in rows) else 0


def cmd_bounds(args) -> int:
    rep = bounds_report(args.d, args.n, args.field)
    _emit(args, render_bounds(rep), rep)
    return 0


def cmd_mols(args) -> int:
    if args.macneish:
        fam = mols_macneish(mols_prime_power(args.macneish[0]), mols_prime_power(args.macneish[1]))
    elif args.q is not None:
        fam = mols_prime_power(args.q)
    else:
        raise UsageError("mols needs --q Q or --macneish Q1 Q2")
    ok = family_is_mols(fam)
    blocks = []
    for k, sq in enumerate(fam):
        blocks.append(f"L{k + 1}:\n" + "\n".join(" ".join(f"{x:>3}" for x in row) for row in sq.grid))
    text = "\n\n".join(blocks) + f"\n\norder {fam[0].order}, size {len(fam)}, mutually orthogonal: {ok}"
    _emit(args, text, {"order": fam[0].order, "size": len(fam), "orthogonal": ok,
                       "squares": [list(map(list, sq.grid)) for sq in fam]})
    return 0 if ok else 1


def cmd_hadamard(args) -> int:
    if (args.k is None) == (args.q is None):
        raise UsageError("hadamard needs exactly one of --k K or --q Q")
    h = hadamard_sylvester(args.k) if args.k is not None else hadamard_paley(args.q)
    rows = ["".join("+" if x > 0 else "-" for x in row) for row in h.entries]
    _emit(args, "\n".join(rows) + f"\norder {h.order}: H H^T = d I verified",
          {"order": h.order, "entries": h.entries.tolist()})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="tolerance base; tau(d) = tol * max(1, sqrt(d))")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="amub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a family and write a bundle")
    p.add_argument("--family", required=True,
                   choices=sorted(FAMILY_PARAMS) + ["realify"])
    p.add_argument("--inner", choices=sorted(FAMILY_PARAMS), help="complex family for realify")
    for name in ("q", "p", "a", "b", "m", "k", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--field", choices=("C", "R"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="recompute and check a bundle certificate")
    p.add_argument("path")
    p.add_argument("--regenerate", action="store_true",
                   help="also rebuild from the construction record and compare data")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realify", parents=[common], help="complex bundle -> real bundle in 2d")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_realify)

    p = sub.add_parser("tensor", parents=[common], help="tensor two bundles")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("table1", parents=[common], help="realified AMUB table at desk scale")
    p.add_argument("--max-q", type=int, default=13)
    p.add_argument("--max-p", type=int, default=13)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("bounds", parents=[common], help="Welch bounds and MUB caps for d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--field", choices=("C", "R"), default="C")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mols", parents=[common], help="prime-power or MacNeish MOLS")
    p.add_argument("--q", type=int)
    p.add_argument("--macneish", type=int, nargs=2, metavar=("Q1", "Q2"))
    p.set_defaults(func=cmd_mols)

    p = sub.add_parser("hadamard", parents=[common], help="Sylvester or Paley matrix")
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_hadamard)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BundleFormatError as exc:
        print(f"error: malformed bundle: {exc}", file=sys.stderr)
        return 2
    except (AmubError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
