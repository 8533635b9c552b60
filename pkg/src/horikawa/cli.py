"""Command-line front end.

Subcommands: ``tables`` regenerates reference tables against the embedded
goldens, ``replace`` computes the stable-limit record for a user element,
``git`` runs the stability test, ``sextic`` prints a plane-sextic report,
and ``verify`` runs the full acceptance suite.  Exit codes: 0 success,
1 mismatch, 2 usage error, 3 domain error.  Output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import tables as tables_mod
from . import verification
from .degeneration import stable_surface_datum
from .git import GitError, NormalFormQuintic, is_git_stable
from .poly import PolynomialError, SparsePolynomial, parse_polynomial
from .sextics import (
    NotTransformableError,
    ZW_NAMES,
    line_incidence,
    sample_model,
    sextic_moduli_dimension,
    sextic_model,
    singular_scan,
)
from .weights import SIGMA_ORDER, UElement, WeightError, sigma_generic_necessary

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

XY = ("x", "y")
XYZ = ("x", "y", "z")


def _print(text: str):
    sys.stdout.write(text + "\n")


def _fail_usage(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_USAGE


def _fail_domain(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_DOMAIN


def _render_tables(reports, fmt: str):
    if fmt == "json":
        _print(json.dumps([r.to_json() for r in reports], indent=2))
        return
    chunks = []
    for report in reports:
        if fmt == "tsv":
            chunks.append(f"## {report.tableId}\n" + report.to_tsv())
        else:
            chunks.append(f"### {report.tableId}\n" + report.to_markdown())
    _print("\n\n".join(chunks))


def cmd_tables(args) -> int:
    if args.id == "all":
        reports = tables_mod.build_all()
    else:
        try:
            reports = [tables_mod.build_table(args.id)]
        except KeyError as exc:
            return _fail_usage(str(exc.args[0]))
    _render_tables(reports, args.format)
    mismatched = [m for r in reports for m in r.mismatches]
    if mismatched:
        for m in mismatched:
            sys.stderr.write(f"mismatch: {m}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _load_element(sigma: str, path: str) -> UElement:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read().strip()
    if not text:
        raise PolynomialError("empty input file")
    if text.startswith("{"):
        data = json.loads(text)
        return UElement.from_json(data)
    poly = parse_polynomial(text, XYZ)
    return UElement.from_polynomial(sigma, poly)


def cmd_replace(args) -> int:
    if args.sigma not in SIGMA_ORDER:
        return _fail_usage(f"unknown singularity class {args.sigma!r}")
    try:
        u = _load_element(args.sigma, args.ufile)
    except (OSError, json.JSONDecodeError, PolynomialError) as exc:
        return _fail_usage(f"cannot parse element file: {exc}")
    except WeightError as exc:
        return _fail_domain(str(exc))
    checklist = sigma_generic_necessary(u)
    if not checklist["all_pass"]:
        failed = [k for k, v in checklist.items() if k != "all_pass" and not v]
        return _fail_domain(f"element fails necessary genericity checks: {', '.join(failed)}")
    datum = stable_surface_datum(args.sigma, u)
    _print(json.dumps(datum.to_json(), indent=2))
    return EXIT_OK


def cmd_git(args) -> int:
    try:
        with open(args.qfile, "r", encoding="utf-8") as handle:
            lines = [line.strip() for line in handle if line.strip()]
    except OSError as exc:
        return _fail_usage(str(exc))
    if len(lines) != 4:
        return _fail_usage(f"expected 4 forms (q4, q6, q8, q10), found {len(lines)} lines")
    forms: List[SparsePolynomial] = []
    for line, degree in zip(lines, (4, 6, 8, 10)):
        try:
            form = parse_polynomial(line, XY) if line != "0" else SparsePolynomial.zero(XY)
        except PolynomialError as exc:
            return _fail_usage(f"cannot parse {line!r}: {exc}")
        if not form.is_zero and (not form.is_homogeneous() or form.total_degree() != degree):
            return _fail_usage(f"{line!r} is not homogeneous of degree {degree}")
        forms.append(form)
    try:
        nf = NormalFormQuintic(*forms)
    except GitError as exc:
        return _fail_usage(str(exc))
    _print(json.dumps(is_git_stable(nf).to_json(), indent=2))
    return EXIT_OK


def cmd_sextic(args) -> int:
    if args.type not in ZW_NAMES:
        return _fail_usage(f"--type must be one of {', '.join(ZW_NAMES)}")
    try:
        if args.sample:
            model = sample_model(args.type)
        elif args.ufile:
            u = _load_element(args.type, args.ufile)
            model = sextic_model(args.type, u)
        else:
            return _fail_usage("provide --sample or --ufile")
    except (OSError, PolynomialError) as exc:
        return _fail_usage(str(exc))
    except (WeightError, NotTransformableError) as exc:
        return _fail_domain(str(exc))
    payload = {
        "model": model.to_json(),
        "lineIncidence": line_incidence(model).to_json(),
        "singularScan": singular_scan(model).to_json(),
        "moduliDimension": sextic_moduli_dimension(args.type),
    }
    _print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verification.run_all()
    for result in results:
        _print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        for r in failed:
            for detail in r.details:
                sys.stderr.write(f"criterion {r.number}: {detail}\n")
        return EXIT_MISMATCH
    _print(f"all {len(results)} acceptance criteria passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horikawa",
        description="Exact computations for two-component stable degenerations of Horikawa surfaces",
    )
    sub = parser.add_subparsers(dest="command")

    p_tables = sub.add_parser("tables", help="regenerate reference tables")
    p_tables.add_argument("--id", default="all", help="table id or 'all'")
    p_tables.add_argument("--format", choices=("json", "tsv", "md"), default="json")
    p_tables.set_defaults(func=cmd_tables)

    p_replace = sub.add_parser("replace", help="stable limit record for an element")
    p_replace.add_argument("sigma", help="singularity class, e.g. W12")
    p_replace.add_argument("ufile", help="file with the element (text polynomial or JSON)")
    p_replace.set_defaults(func=cmd_replace)

    p_git = sub.add_parser("git", help="stability of a normal-form quintic cover")
    p_git.add_argument("qfile", help="file with four lines: q4, q6, q8, q10")
    p_git.set_defaults(func=cmd_git)

    p_sextic = sub.add_parser("sextic", help="plane-sextic model report")
    p_sextic.add_argument("--type", required=True, help="one of the Z/W classes")
    p_sextic.add_argument("--sample", action="store_true", help="use the bundled sample")
    p_sextic.add_argument("--ufile", help="file with a custom element")
    p_sextic.set_defaults(func=cmd_sextic)

    p_verify = sub.add_parser("verify", help="run the acceptance suite")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help()
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
