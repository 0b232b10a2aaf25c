"""Command-line interface.

Every command accepts ``--format json|md`` (JSON is the default and is
lossless: rationals are emitted as "p/q" strings).  Exit codes: 0 success,
1 property or verification failure, 2 usage error, 3 malformed input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Any

import numpy as np

from . import verify as verify_mod
from .analysis import (
    alter_scalar_space,
    annihilator,
    check_homomorphism,
    classify_super_alternative,
    recognize_alternative_division,
    subalgebra_census,
    zero_divisor_search,
)
from .construct import Grading, named_algebra
from .core import Algebra, Element
from .errors import (
    CdalgError,
    MalformedInputError,
    UnknownAlgebraError,
)
from .fileio import (
    algebra_to_dict,
    fraction_to_str,
    load_algebra,
    parse_element,
    save_algebra,
)
from .linalg import Subspace
from .lowdim import (
    build_3d,
    canonical_params_3d,
    equiv_4d,
    extract_params_4d,
    geometric_type,
    hyperboloid_config,
    is_division_4d,
)
from .properties import (
    PropertyReport,
    is_alternative,
    is_locally_complex,
    is_nicely_normed,
    is_quadratic,
    is_super_alternative,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    if isinstance(value, Element):
        return [fraction_to_str(c) for c in value.coords]
    if isinstance(value, Subspace):
        return {
            "dim": value.dim,
            "basis": [[fraction_to_str(c) for c in row] for row in value.rows],
        }
    if isinstance(value, Grading):
        return {
            "even": _jsonable(value.even),
            "odd": _jsonable(value.odd),
        }
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def element_text(algebra: Algebra, x: Element) -> str:
    parts = []
    for i, c in enumerate(x.coords):
        if c == 0:
            continue
        label = algebra.label(i)
        if c == 1:
            term = label
        elif c == -1:
            term = f"-{label}"
        else:
            term = f"{fraction_to_str(c)}*{label}"
        parts.append(term)
    if not parts:
        return "0"
    text = parts[0]
    for term in parts[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_jsonable(payload), indent=1))
        return
    for key, value in payload.items():
        value = _jsonable(value)
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        print(f"{key}: {value}")


def _load_source(spec: str) -> tuple[Algebra, Grading | None, str | None]:
    """Resolve a CLI operand as a built-in name or a JSON file path."""
    try:
        bundle = named_algebra(spec)
        return bundle.algebra, bundle.grading, bundle.name
    except UnknownAlgebraError:
        pass
    algebra, grading = load_algebra(spec)
    return algebra, grading, None


def _parse_rationals(text: str, expected: int, what: str) -> list[Fraction]:
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    if len(parts) != expected:
        raise MalformedInputError(f"{what} needs {expected} comma-separated rationals")
    try:
        return [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"bad rational in {what}: {exc}") from exc


def _params_from_args(args) -> tuple:
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            T = [[Fraction(str(x)) for x in row] for row in data["T"]]
            u = [Fraction(str(x)) for x in data["u"]]
        except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
            raise MalformedInputError(f"bad parameter file {args.file}: {exc}") from exc
        return T, u
    if args.T is None:
        raise MalformedInputError("need either a parameter file or --T")
    flat = _parse_rationals(args.T, 9, "--T")
    T = [flat[0:3], flat[3:6], flat[6:9]]
    u = _parse_rationals(args.u, 3, "--u") if args.u else [Fraction(0)] * 3
    return T, u


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    bundle = named_algebra(args.name)
    payload = algebra_to_dict(bundle.algebra, bundle.grading)
    if args.out:
        save_algebra(args.out, bundle.algebra, bundle.grading)
        _emit({"written": args.out, "dim": bundle.algebra.dim}, args.format)
    else:
        print(json.dumps(payload, indent=1))
    return EXIT_OK


def cmd_table(args) -> int:
    algebra, _, _ = _load_source(args.name)
    n = algebra.dim
    labels = [algebra.label(i) for i in range(n)]
    cells = [
        [element_text(algebra, algebra.table_entry(i, j)) for j in range(n)]
        for i in range(n)
    ]
    if args.format == "json":
        _emit({"labels": labels, "table": cells}, "json")
    elif args.format == "csv":
        print("," + ",".join(labels))
        for lab, row in zip(labels, cells):
            print(lab + "," + ",".join(row))
    else:
        width = max(len(c) for row in cells for c in row)
        width = max(width, max(len(l) for l in labels))
        header = " | ".join(l.rjust(width) for l in [""] + labels)
        print(header)
        print("-" * len(header))
        for lab, row in zip(labels, cells):
            print(" | ".join(c.rjust(width) for c in [lab] + row))
    return EXIT_OK


def cmd_check(args) -> int:
    algebra, grading, _ = _load_source(args.target)
    wanted = args.property
    report = PropertyReport()

    def want(key: str) -> bool:
        return wanted in ("all", key)

    if want("quadratic"):
        q = is_quadratic(algebra)
        report.set("quadratic", "yes" if q.holds else "no",
                   None if q.holds else element_text(algebra, q.witness))
    if want("lc"):
        lc = is_locally_complex(algebra)
        witness = None
        if not lc.holds and lc.counterexample is not None:
            witness = {
                "kind": lc.counterexample_kind,
                "element": element_text(algebra, lc.counterexample),
            }
        report.set("locally_complex", "yes" if lc.holds else "no", witness)
    if want("alt"):
        alt = is_alternative(algebra)
        witness = None
        if not alt.holds:
            x, y, law = alt.witness
            witness = {"law": law, "x": element_text(algebra, x), "y": element_text(algebra, y)}
        report.set("alternative", "yes" if alt.holds else "no", witness)
    if want("superalt"):
        if grading is None:
            report.set("super_alternative", "unknown", "no grading available")
        else:
            sa = is_super_alternative(algebra, grading)
            witness = None
            if not sa.holds:
                u, x, law = sa.witness
                witness = {"law": law, "u": element_text(algebra, u), "x": element_text(algebra, x)}
            report.set("super_alternative", "yes" if sa.holds else "no", witness)
    if want("nn"):
        report.set("nicely_normed", "yes" if is_nicely_normed(algebra) else "no")
    if wanted == "all":
        report.set("commutative", "yes" if algebra.is_commutative() else "no")
        zd = zero_divisor_search(algebra, budget=args.budget, seed=args.seed)
        if zd.status == "found":
            x, y = zd.pair
            report.set("has_zero_divisors", "yes",
                       {"x": element_text(algebra, x), "y": element_text(algebra, y)})
        elif zd.status == "none_found":
            report.set("has_zero_divisors", "no")
        else:
            report.set("has_zero_divisors", "unknown", f"search exhausted after {zd.tried} candidates")
    _emit({"flags": report.flags, "witnesses": report.witnesses}, args.format)
    return EXIT_OK


def cmd_recognize(args) -> int:
    algebra, _, _ = _load_source(args.target)
    rec = recognize_alternative_division(algebra)
    _emit({"tag": rec.tag, "iso": rec.iso}, args.format)
    return EXIT_OK


def cmd_classify_super(args) -> int:
    algebra, grading, _ = _load_source(args.target)
    if grading is None:
        raise MalformedInputError("classify-super needs a grading in the input file")
    rec = classify_super_alternative(algebra, grading)
    _emit({"tag": rec.tag, "iso": rec.iso}, args.format)
    return EXIT_OK


def cmd_classify3(args) -> int:
    if args.params:
        t, s = _parse_rationals(" ".join(args.params).replace(" ", ","), 2, "--params")
        algebra = build_3d(t, s)
    else:
        if not args.file:
            raise MalformedInputError("classify3 needs a file or --params t,s")
        algebra, _, _ = _load_source(args.file)
    form = canonical_params_3d(algebra)
    _emit({"t": form.t, "s": form.s}, args.format)
    return EXIT_OK


def cmd_classify4(args) -> int:
    if args.T or args.file and args.file.endswith(".json") and not _looks_like_algebra(args.file):
        T, u = _params_from_args(args)
    else:
        algebra, _, _ = _load_source(args.file)
        params = extract_params_4d(algebra)
        T, u = [list(r) for r in params.t_matrix], list(params.u)
    gt = geometric_type(T, tol=args.tol)
    payload: dict[str, Any] = {"T": T, "u": u, "rank": gt.rank, "kind": gt.kind}
    division = is_division_4d(T, u, tol=args.tol)
    payload["division"] = division.is_division
    if division.pair is not None:
        payload["zero_divisor_pair"] = division.pair
        payload["pair_exact"] = division.exact
    if gt.kind == "hyperboloid":
        config = hyperboloid_config((T, u), tol=args.tol)
        payload["configuration"] = {
            "delta": list(config.delta),
            "u": list(config.u),
            "c": list(config.c),
        }
    _emit(payload, args.format)
    return EXIT_OK


def _looks_like_algebra(path: str) -> bool:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return "constants" in data
    except Exception:
        return False


def cmd_iso4(args) -> int:
    def load_params(path: str):
        class Holder:
            file = path
            T = None
            u = None

        return _params_from_args(Holder)

    T1, u1 = load_params(args.a)
    T2, u2 = load_params(args.b)
    res = equiv_4d(
        ([[float(x) for x in r] for r in T1], [float(x) for x in u1]),
        ([[float(x) for x in r] for r in T2], [float(x) for x in u2]),
        tol=args.tol,
    )
    payload = {"equivalent": res.equivalent, "borderline": res.borderline}
    if res.witness is not None:
        payload["witness"] = res.witness
    _emit(payload, args.format)
    return EXIT_OK


def cmd_division4(args) -> int:
    T, u = _params_from_args(args)
    res = is_division_4d(T, u, tol=args.tol)
    payload: dict[str, Any] = {"division": res.is_division}
    if res.pair is not None:
        payload["zero_divisor_pair"] = res.pair
        payload["pair_exact"] = res.exact
    _emit(payload, args.format)
    return EXIT_OK


def cmd_ann(args) -> int:
    algebra, _, _ = _load_source(args.target)
    x = parse_element(args.element, algebra)
    ann = annihilator(algebra, x)
    _emit(
        {
            "element": element_text(algebra, x),
            "dim": ann.dim,
            "basis": [element_text(algebra, Element(r)) for r in ann.rows],
        },
        args.format,
    )
    return EXIT_OK


def cmd_zerodiv(args) -> int:
    algebra, _, _ = _load_source(args.target)
    res = zero_divisor_search(algebra, budget=args.budget, seed=args.seed)
    payload: dict[str, Any] = {
        "status": res.status,
        "definitive": res.definitive,
        "tried": res.tried,
    }
    if res.pair is not None:
        payload["x"] = element_text(algebra, res.pair[0])
        payload["y"] = element_text(algebra, res.pair[1])
    _emit(payload, args.format)
    return EXIT_OK


def cmd_alterscalar(args) -> int:
    algebra, _, _ = _load_source(args.target)
    space = alter_scalar_space(algebra)
    _emit(
        {
            "solution_dim": space.solutions.dim,
            "has_alter_scalars": space.has_alter_scalars,
            "basis": [element_text(algebra, Element(r)) for r in space.solutions.rows],
        },
        args.format,
    )
    return EXIT_OK


def cmd_embed_check(args) -> int:
    source, _, _ = _load_source(getattr(args, "from"))
    target, _, _ = _load_source(args.to)
    try:
        with open(args.map, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        matrix = [[Fraction(str(x)) for x in row] for row in data["matrix"]]
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"bad map file {args.map}: {exc}") from exc
    res = check_homomorphism(matrix, source, target)
    payload: dict[str, Any] = {"holds": res.holds}
    if not res.holds:
        payload["violation"] = res.violation
    _emit(payload, args.format)
    return EXIT_OK if res.holds else EXIT_CHECK_FAILED


def cmd_subalg(args) -> int:
    algebra, _, _ = _load_source(args.target)
    dims = [int(d) for d in args.dims.split(",")] if args.dims else []
    report = subalgebra_census(algebra, dims, budget=args.budget, seed=args.seed)
    payload = {
        "requested": list(report.requested),
        "realized": {
            str(d): [element_text(algebra, g) for g in entry.generators]
            for d, entry in sorted(report.realized.items())
        },
    }
    if dims:
        payload["hits"] = {str(d): report.found(d) for d in dims}
    _emit(payload, args.format)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    report = verify_mod.run_verification()
    if args.format == "json":
        _emit(
            {
                "all_passed": report.all_passed,
                "claims": [
                    {
                        "id": o.claim_id,
                        "description": o.description,
                        "passed": o.passed,
                        "elapsed_ms": round(o.elapsed_ms, 1),
                        "detail": o.detail,
                    }
                    for o in report.outcomes
                ],
            },
            "json",
        )
    else:
        for o in report.outcomes:
            status = "PASS" if o.passed else "FAIL"
            print(f"{o.claim_id} {status} ({o.elapsed_ms:7.0f} ms)  {o.description}")
            print(f"     {o.detail}")
        print("result:", "all claims passed" if report.all_passed else "FAILURES PRESENT")
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdalg",
        description="Construct, check and classify finite-dimensional real "
        "nonassociative algebras given by structure constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "md", "csv"), default="json")
        return p

    p = add("gen", cmd_gen, help="emit a built-in algebra as a JSON file")
    p.add_argument("name")
    p.add_argument("--out")

    p = add("table", cmd_table, help="print a multiplication table")
    p.add_argument("name")

    p = add("check", cmd_check, help="property report for an algebra")
    p.add_argument("target")
    p.add_argument(
        "--property",
        choices=("all", "quadratic", "lc", "alt", "superalt", "nn"),
        default="all",
    )
    p.add_argument("--budget", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)

    p = add("recognize", cmd_recognize, help="recognize an alternative division algebra")
    p.add_argument("target")

    p = add("classify-super", cmd_classify_super,
            help="classify a graded super-alternative locally complex algebra")
    p.add_argument("target")

    p = add("classify3", cmd_classify3, help="canonical form of a 3-dimensional algebra")
    p.add_argument("file", nargs="?")
    p.add_argument("--params", nargs=2, metavar=("T", "S"))

    p = add("classify4", cmd_classify4, help="canonical data of a 4-dimensional algebra")
    p.add_argument("file", nargs="?")
    p.add_argument("--T")
    p.add_argument("--u")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("iso4", cmd_iso4, help="equivalence of two parameter pairs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("division4", cmd_division4, help="division criterion for parameters (T, u)")
    p.add_argument("file", nargs="?")
    p.add_argument("--T")
    p.add_argument("--u")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("ann", cmd_ann, help="annihilator of an element")
    p.add_argument("target")
    p.add_argument("--element", required=True)

    p = add("zerodiv", cmd_zerodiv, help="zero divisor search")
    p.add_argument("target")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = add("alterscalar", cmd_alterscalar, help="solution space of x^2 a = x(xa)")
    p.add_argument("target")

    p = add("embed-check", cmd_embed_check, help="verify a homomorphism matrix")
    p.add_argument("--map", required=True)
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)

    p = add("subalg", cmd_subalg, help="bounded subalgebra census")
    p.add_argument("target")
    p.add_argument("--dims")
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    add("verify-paper", cmd_verify_paper, help="run the built-in verification suite")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(json.dumps({"error": str(exc), "kind": "malformed-input"}), file=sys.stderr)
        return EXIT_BAD_INPUT
    except CdalgError as exc:
        print(
            json.dumps({"error": str(exc), "kind": type(exc).__name__}),
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
