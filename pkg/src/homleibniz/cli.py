"""Command line interface.

Exit status: 0 when every requested check holds, 1 when some check fails
(the counterexample is printed), 2 on usage or load errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from . import powers
from .akivis import HomAkivisAlgebra, check_hom_akivis_identity
from .algebra import CheckReport, Element, HomAlgebra, format_rational, parse_rational
from .constructions import (
    GenerationError,
    NotEndomorphismError,
    catalog,
    random_hom_leibniz,
    yau_twist,
)
from .fileformat import FormatError, dump, load, parse_matrix
from .identities import check_hom_jacobi, commutator_algebra
from .registry import IDENTITY_NAMES, run_named

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ORDINALS = {2: "second", 3: "third", 4: "fourth", 5: "fifth", 6: "sixth",
             7: "seventh", 8: "eighth", 9: "ninth", 10: "tenth"}


class UsageError(Exception):
    pass


def report_to_json(r: CheckReport) -> dict:
    witness = None
    if r.witness is not None:
        if r.witness.kind == "basis":
            data = [i + 1 for i in r.witness.data]
        else:
            data = [format_rational(c) for c in r.witness.data]
        witness = {"kind": r.witness.kind, "data": data}
    residual = None if r.residual is None else [format_rational(c) for c in r.residual.coords]
    out = {"identity": r.identity, "holds": r.holds, "witness": witness, "residual": residual}
    if r.detail is not None:
        out["detail"] = r.detail
    return out


def _split_warning(identity: str) -> tuple[str, str]:
    if " [warning:" in identity:
        base, rest = identity.split(" [warning:", 1)
        return base, " [warning:" + rest
    return identity, ""


def power_label(identity: str, n_max: int) -> str:
    base, warn = _split_warning(identity)
    if base.startswith("hom-power-associative-"):
        n = int(base.rsplit("-", 1)[1])
        label = f"{_ORDINALS.get(n, f'{n}th')} Hom-power associativity"
    else:
        label = {
            "hom-power-associative": "Hom-power associativity",
            "cube-vanishes": "x^3 = 0",
            "twisted-cube-criterion": "alpha(x) x^2 = 0",
            "right-powers-vanish": f"x^k = 0 for 3 <= k <= {max(n_max, 3)}",
            "left-powers-annihilate": f"a^k alpha(z) = 0 for 2 <= k <= {n_max}",
            "left-cube-annihilates": f"left powers x(x(...x)) annihilate, up to {max(n_max, 3)} factors",
            "power-associative": "power associativity",
        }.get(base, base)
    return label + warn


def render(r: CheckReport, label: str | None = None) -> str:
    label = label or r.identity
    if r.holds:
        return f"{label}: holds"
    w = r.witness
    where = f"x = {w}" if w.kind == "point" else str(w)
    extra = []
    if r.detail:
        extra.append(r.detail)
    if r.residual is not None:
        extra.append(f"residual {r.residual}")
    text = f"{label}: FAILS, witness {where}"
    return text + (f" ({'; '.join(extra)})" if extra else "")


def _emit(args, algebra_name, command, reports, labels=None) -> int:
    holds = all(r.holds for r in reports)
    if args.json:
        doc = {
            "algebra": algebra_name,
            "command": command,
            "holds": holds,
            "reports": [report_to_json(r) for r in reports],
        }
        print(json.dumps(doc, indent=2))
    else:
        for k, r in enumerate(reports):
            print(render(r, labels[k] if labels else None))
    return EXIT_OK if holds else EXIT_FAIL


def _load(path: str, strict: bool):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        obj = load(path, strict=strict)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return obj


def _load_hom_algebra(path: str, strict: bool) -> HomAlgebra:
    obj = _load(path, strict)
    if not isinstance(obj, HomAlgebra):
        raise UsageError(f"{path} holds a Hom-Akivis structure, not a Hom-algebra")
    return obj


def _parse_element(text: str, n: int) -> Element:
    parts = [p for p in text.split(",")]
    try:
        coords = tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"--element: {exc}") from None
    if len(coords) != n:
        raise UsageError(f"--element: expected {n} coordinates, got {len(coords)}")
    return Element(coords)


def cmd_check(args) -> int:
    obj = _load(args.file, args.strict)
    names = list(IDENTITY_NAMES) if args.all or not args.identity else args.identity
    unknown = [n for n in names if n not in IDENTITY_NAMES]
    if unknown:
        raise UsageError(f"unknown identity {unknown[0]!r}; valid names: {', '.join(IDENTITY_NAMES)}")
    if isinstance(obj, HomAkivisAlgebra):
        if args.all or not args.identity:
            names = ["hom-akivis"]
        if names != ["hom-akivis"]:
            raise UsageError("a Hom-Akivis file supports only the hom-akivis identity")
        return _emit(args, obj.name, "check", [check_hom_akivis_identity(obj)])
    return _emit(args, obj.name, "check", [run_named(obj, n) for n in names])


def cmd_powers(args) -> int:
    A = _load_hom_algebra(args.file, args.strict)
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    x = _parse_element(args.element, A.dim)
    tower = powers.element_tower(A, x, args.max_n, left=args.left)
    var = "a" if args.left else "x"
    if args.json:
        print(json.dumps({
            "algebra": A.name,
            "element": [format_rational(c) for c in x.coords],
            "side": "left" if args.left else "right",
            "powers": [[format_rational(c) for c in p.coords] for p in tower],
        }, indent=2))
    else:
        for k, p in enumerate(tower, start=1):
            print(f"{var}^{k} = {p}")
    return EXIT_OK


def cmd_power_assoc(args) -> int:
    A = _load_hom_algebra(args.file, args.strict)
    if args.max_n < 3:
        raise UsageError("--max-n must be at least 3")
    reports = powers.power_report(A, args.max_n)
    labels = [power_label(r.identity, args.max_n) for r in reports]
    return _emit(args, A.name, "power-assoc", reports, labels)


def cmd_twist(args) -> int:
    L = _load_hom_algebra(args.file, args.strict)
    try:
        M = parse_matrix(Path(args.map).read_text(encoding="utf-8"), L.dim)
    except OSError as exc:
        raise FormatError(f"cannot read {args.map}: {exc.strerror}") from None
    if not L.twist_is_identity:
        raise UsageError("twist expects an untwisted algebra (identity twist)")
    try:
        A = yau_twist(L, M, name=args.name or (f"{L.name}-twisted" if L.name else None))
    except NotEndomorphismError as exc:
        print(render(exc.report))
        return EXIT_FAIL
    dump(A, args.output)
    print(f"wrote {args.output}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = catalog()
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        for e in entries:
            dump(e.algebra, out / f"{e.name}.alg")
        print(f"exported {len(entries)} algebras to {out}")
        return EXIT_OK
    width = max(len(e.name) for e in entries)
    for e in entries:
        print(f"{e.name:<{width}}  dim {e.algebra.dim}  {e.note}")
    return EXIT_OK


FUZZ_CHECKS = (
    "multiplicative",
    "left-hom-leibniz",
    "associator-form",
    "anticommutator-annihilates",
    "bracket-derivation",
    "jacobian-cyclic-form",
    "hom-akivis",
    "cube-vanishes",
    "right-powers-vanish",
    "left-powers-annihilate",
)


def fuzz_reports(A: HomAlgebra) -> list[CheckReport]:
    """Checks that must hold for every Hom-Leibniz algebra, plus three equivalences."""
    reports = [run_named(A, n) for n in FUZZ_CHECKS]
    crit = run_named(A, "twisted-cube-criterion")
    reports.append(_agreement("admissible-iff-commutator-hom-jacobi",
                              run_named(A, "hom-lie-admissible"),
                              check_hom_jacobi(commutator_algebra(A))))
    reports.append(_agreement("cube-criterion-iff-third-power", crit,
                              run_named(A, "hom-power-associative-3")))
    reports.append(_agreement("cube-criterion-iff-hom-power-associative", crit,
                              run_named(A, "hom-power-associative")))
    return reports


def _agreement(name: str, a: CheckReport, b: CheckReport) -> CheckReport:
    """Holds when both verdicts agree; otherwise carries the failing side's witness."""
    if a.holds == b.holds:
        return CheckReport(name)
    failed = b if a.holds else a
    return replace(failed, identity=name, detail=f"only {failed.identity} fails")


def cmd_fuzz(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    results = []
    ok = True
    for seed in range(args.seed, args.seed + args.count):
        try:
            A = random_hom_leibniz(seed, args.dim)
        except (GenerationError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        reports = fuzz_reports(A)
        passed = all(r.holds for r in reports)
        ok = ok and passed
        results.append((A, reports, passed))
        if args.export:
            out = Path(args.export)
            out.mkdir(parents=True, exist_ok=True)
            dump(A, out / f"{A.name}.alg")
    if args.json:
        print(json.dumps([
            {"algebra": A.name, "holds": passed, "reports": [report_to_json(r) for r in reps]}
            for A, reps, passed in results
        ], indent=2))
    else:
        for A, reps, passed in results:
            print(f"{A.name}: {'ok' if passed else 'FAILED'}")
            for r in reps:
                if not r.holds:
                    print("  " + render(r))
        print(f"{sum(p for _, _, p in results)}/{len(results)} passed")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homleibniz", description="Exact checks for Hom-Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, json_flag=True):
        if json_flag:
            sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--strict", action="store_true", help="reject non-multiplicative twists")

    c = sub.add_parser("check", help="run identity checks")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--identity", action="append", metavar="NAME",
                   help=f"one of: {', '.join(IDENTITY_NAMES)} (repeatable)")
    g.add_argument("--all", action="store_true", help="run every identity (default)")
    common(c)
    c.set_defaults(func=cmd_check)

    pw = sub.add_parser("powers", help="print the Hom-power tower of an element")
    pw.add_argument("file")
    pw.add_argument("--element", required=True, help='coordinates, e.g. "0,1" or "1/2,-3"')
    pw.add_argument("--left", action="store_true", help="left Hom-powers instead of right")
    pw.add_argument("--max-n", type=int, default=powers.DEFAULT_MAX_N)
    common(pw)
    pw.set_defaults(func=cmd_powers)

    pa = sub.add_parser("power-assoc", help="symbolic Hom-power associativity verdicts")
    pa.add_argument("file")
    pa.add_argument("--max-n", type=int, default=powers.DEFAULT_MAX_N)
    common(pa)
    pa.set_defaults(func=cmd_power_assoc)

    tw = sub.add_parser("twist", help="Yau twist by an endomorphism")
    tw.add_argument("file")
    tw.add_argument("--map", required=True, help="matrix file: JSON list of rows of rationals")
    tw.add_argument("-o", "--output", required=True)
    tw.add_argument("--name")
    common(tw, json_flag=False)
    tw.set_defaults(func=cmd_twist)

    ca = sub.add_parser("catalog", help="list or export the built-in algebras")
    ca.add_argument("--export", metavar="DIR")
    ca.set_defaults(func=cmd_catalog)

    fz = sub.add_parser("fuzz", help="generate and self-check random Hom-Leibniz algebras")
    fz.add_argument("--seed", type=int, required=True)
    fz.add_argument("--dim", type=int, required=True)
    fz.add_argument("--count", type=int, required=True)
    fz.add_argument("--export", metavar="DIR")
    fz.add_argument("--json", action="store_true")
    fz.set_defaults(func=cmd_fuzz)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
