"""Command-line interface.

Subcommands: `imm` (one super-immanant), `schur` (a Schur supersymmetric
polynomial), `berezinian` (characteristic-series coefficients), and `check`
(run an identity family and report pass/fail per case, exit 0 iff all pass).
"""

from __future__ import annotations

import argparse
import json
import sys

from superimm.immanants import (
    characteristic_coefficients,
    generator_matrix,
    load_supermatrix,
    super_immanant,
)
from superimm.superring import poly_to_terms
from superimm.supersym import schur_super, schur_super_jacobi_trudi_grid
from superimm.verify import sweep

CHECK_NAMES = (
    "vanishing",
    "kostant",
    "schur-weyl",
    "littlewood1",
    "littlewood2",
    "lmw",
    "macmahon",
    "newton",
    "goulden-jackson",
    "littlewood3",
    "berezinian",
    "hessenberg",
    "all",
)


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _matrix_from_args(args):
    if args.matrix:
        with open(args.matrix, "r", encoding="utf-8") as fh:
            return load_supermatrix(fh.read())
    if args.m is None or args.n is None:
        raise SystemExit("either --matrix FILE or both --m and --n are required")
    return generator_matrix(args.m, args.n)


def _cmd_imm(args) -> int:
    x = _matrix_from_args(args)
    shape = _parse_ints(args.shape)
    rows = _parse_ints(args.rows)
    cols = _parse_ints(args.cols) if args.cols else rows
    value = super_immanant(shape, x, rows, cols)
    print(value)
    if args.json:
        print(json.dumps(poly_to_terms(value)))
    return 0


def _cmd_schur(args) -> int:
    shape = _parse_ints(args.shape)
    if args.form == "jacobi-trudi":
        grid = schur_super_jacobi_trudi_grid(shape, args.m, args.n)
        for row in grid:
            print("  ".join("." if k is None else f"S[{k}]" for k in row))
    else:
        print(schur_super(shape, args.m, args.n))
    return 0


def _cmd_berezinian(args) -> int:
    x = _matrix_from_args(args)
    coeffs = characteristic_coefficients(x, args.order)
    for k, c in enumerate(coeffs):
        sign = "" if k % 2 == 0 else "-"
        print(f"u^{k}: {sign}({c})")
    return 0


def _cmd_check(args) -> int:
    reports = sweep(
        args.name,
        args.m,
        args.n,
        args.max_r,
        order=args.order,
        seed=args.seed,
        trials=args.trials,
    )
    width = max(len(r.name) for r in reports)
    failures = 0
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        failures += not rep.passed
        detail = {k: v for k, v in rep.params.items() if k != "identity"}
        print(f"{rep.name:<{width}}  {status}  cases={rep.cases:<5d} {detail}")
        if not rep.passed:
            print(f"  witness: {rep.witness}")
    print(f"{len(reports) - failures}/{len(reports)} checks passed")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([rep.to_dict() for rep in reports], fh, indent=2, sort_keys=True)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superimm",
        description="Exact super-immanant calculus and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_imm = sub.add_parser("imm", help="print one super-immanant")
    p_imm.add_argument("--lambda", dest="shape", required=True, help="partition, e.g. 2,1")
    p_imm.add_argument("--rows", required=True, help="row multi-index, e.g. 1,2,2")
    p_imm.add_argument("--cols", default=None, help="column multi-index (default: rows)")
    p_imm.add_argument("--matrix", default=None, help="matrix document (JSON)")
    p_imm.add_argument("--m", type=int, default=None)
    p_imm.add_argument("--n", type=int, default=None)
    p_imm.add_argument("--json", action="store_true", help="also print serialized terms")
    p_imm.set_defaults(func=_cmd_imm)

    p_schur = sub.add_parser("schur", help="print a Schur supersymmetric polynomial")
    p_schur.add_argument("--lambda", dest="shape", required=True)
    p_schur.add_argument("--m", type=int, required=True)
    p_schur.add_argument("--n", type=int, required=True)
    p_schur.add_argument("--form", choices=("expanded", "jacobi-trudi"), default="expanded")
    p_schur.set_defaults(func=_cmd_schur)

    p_ber = sub.add_parser("berezinian", help="characteristic-series coefficients")
    p_ber.add_argument("--matrix", default=None, help="matrix document (JSON)")
    p_ber.add_argument("--m", type=int, default=None)
    p_ber.add_argument("--n", type=int, default=None)
    p_ber.add_argument("--order", type=int, required=True)
    p_ber.set_defaults(func=_cmd_berezinian)

    p_check = sub.add_parser("check", help="run an identity family")
    p_check.add_argument("name", choices=CHECK_NAMES)
    p_check.add_argument("--m", type=int, required=True)
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--max-r", type=int, default=3)
    p_check.add_argument("--order", type=int, default=3)
    p_check.add_argument("--seed", type=int, default=20240613)
    p_check.add_argument("--trials", type=int, default=10)
    p_check.add_argument("--out", default=None, help="write all reports as JSON")
    p_check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
