"""Command-line surface.

Verbs: homfly, idempotent, expand-closure, lr, meridian-eigenvalue, verify.
Output is plain text or JSON (--format, or the SKEINALG_FORMAT environment
variable).  Exit codes: 0 success/verified, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .annulus import expand_closure
from .braids import parse_braid
from .hecke import E_lambda, from_braid, render_hecke
from .partitions import c_lambda, lr_coeffs, parse_partition, render_partition
from .scalars import render_rational
from .trace import homfly
from . import verify as verification


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinalg",
        description="Exact Hecke algebra / annulus skein computations",
    )
    parser.add_argument(
        "--format",
        choices=["plain", "json"],
        default=os.environ.get("SKEINALG_FORMAT", "plain"),
        help="output format (default from SKEINALG_FORMAT, else plain)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("homfly", help="framed Homfly polynomial of a braid closure")
    p.add_argument("braid", help="braid word, e.g. '1 -2 1' or 's1 s2''")
    p.add_argument("--width", type=int, default=None)

    p = sub.add_parser("idempotent", help="print the idempotent of a Young diagram")
    p.add_argument("partition", help="comma-separated shape, e.g. '2,1'")

    p = sub.add_parser("expand-closure", help="closure expansion on the Schur basis")
    p.add_argument("--braid", required=True)
    p.add_argument("--width", type=int, default=None)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    p.add_argument("lam", help="first shape, e.g. '2,1'")
    p.add_argument("mu", help="second shape, e.g. '1'")

    p = sub.add_parser("meridian-eigenvalue", help="eigenvalue of the encircled closure")
    p.add_argument("partition")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "target",
        choices=[
            "all",
            "symmetrizer",
            "mirror",
            "idempotents",
            "trace",
            "meridian",
            "eigenvalues",
            "cprime",
            "ringhom",
            "identity",
            "schur",
        ],
    )
    p.add_argument("--max-n", type=int, default=5, help="largest braid width (default 5)")
    p.add_argument("--max-cells", type=int, default=5, help="largest diagram size (default 5)")
    return parser


def _emit(args, payload: dict, plain: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _partition_lines(expansion) -> str:
    return "\n".join(
        f"{render_partition(shape) or '()'} : {value}"
        for shape, value in sorted(expansion.items(), reverse=True)
    )


def _run_verify(args) -> int:
    targets = {
        "all": lambda: verification.run_all(args.max_n, args.max_cells),
        "symmetrizer": lambda: verification.check_symmetrizer_laws(args.max_n),
        "mirror": lambda: verification.check_mirror_invariance(args.max_n),
        "idempotents": lambda: verification.check_idempotents(args.max_cells),
        "trace": lambda: verification.check_trace(),
        "meridian": lambda: verification.check_meridian_eigenvectors(args.max_cells),
        "eigenvalues": lambda: verification.check_eigenvalue_agreement(),
        "cprime": lambda: verification.check_cprime(max_cells=args.max_cells),
        "ringhom": lambda: verification.check_ringhom(args.max_cells),
        "identity": lambda: verification.check_identity_decomposition(args.max_n),
        "schur": lambda: verification.check_schur_oracle(),
    }
    checks = targets[args.target]()
    passed = all(c.passed for c in checks)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "target": args.target,
                    "checks": [
                        {"name": c.name, "pass": c.passed, "detail": c.detail}
                        for c in checks
                    ],
                    "pass": passed,
                },
                sort_keys=True,
            )
        )
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f"  [{c.detail}]" if c.detail else ""
            print(f"{status}: {c.name}{suffix}")
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.verb == "homfly":
            word = parse_braid(args.braid, args.width)
            value = homfly(from_braid(word))
            _emit(
                args,
                {
                    "braid": args.braid,
                    "width": word.width,
                    "homfly": render_rational(value),
                },
                render_rational(value),
            )
        elif args.verb == "idempotent":
            shape = parse_partition(args.partition)
            element = E_lambda(shape)
            _emit(
                args,
                {
                    "partition": list(shape),
                    "terms": {
                        " ".join(str(v + 1) for v in p): render_rational(c)
                        for p, c in sorted(element.coeffs.items())
                    },
                },
                render_hecke(element),
            )
        elif args.verb == "expand-closure":
            word = parse_braid(args.braid, args.width)
            expansion = expand_closure(from_braid(word))
            rendered = {shape: render_rational(c) for shape, c in expansion.items()}
            _emit(
                args,
                {
                    "braid": args.braid,
                    "width": word.width,
                    "expansion": [
                        {"partition": list(shape), "coeff": rendered[shape]}
                        for shape in sorted(rendered, reverse=True)
                    ],
                },
                _partition_lines(rendered),
            )
        elif args.verb == "lr":
            lam = parse_partition(args.lam)
            mu = parse_partition(args.mu)
            coeffs = lr_coeffs(lam, mu)
            _emit(
                args,
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "coefficients": [
                        {"partition": list(shape), "coeff": coeffs[shape]}
                        for shape in sorted(coeffs, reverse=True)
                    ],
                },
                _partition_lines(coeffs),
            )
        elif args.verb == "meridian-eigenvalue":
            shape = parse_partition(args.partition)
            value = c_lambda(shape)
            _emit(
                args,
                {"partition": list(shape), "eigenvalue": render_rational(value)},
                render_rational(value),
            )
        elif args.verb == "verify":
            return _run_verify(args)
        return 0
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
