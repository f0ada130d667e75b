"""Command-line front end: parse curves, run the pipeline, emit JSON.

Input curves are JSON documents {"genus": g, "coeffs": [...]} with
coefficients low degree -> high degree, each an integer or a string
"num" / "num/den"; a plain-text polynomial in x is accepted as sugar.
Output is a canonical JSON document on stdout (sorted keys, two-space
indent), diagnostics go to stderr, and rationals are serialized as reduced
"num" / "num/den" strings so results are byte-deterministic.

Exit codes:
    0  success (including "indecomposable" and "isomorphic": false)
    1  internal or numeric failure
    2  input parse/validation error
    3  degenerate curve (repeated root, genus/degree mismatch)
    4  no extra involution over the rationals where one is required
    5  model family precondition violated or model degenerate
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import classify
from .errors import (
    DegenerateCurveError,
    DegenerateModelError,
    HyperinvError,
    NotInLocusError,
    NotNormalizableError,
    NumericFailureError,
    PreconditionError,
)
from .invariants import DihedralInvariants, invariants_from_even
from .involution import (
    HyperellipticCurve,
    decompose_degree2,
    normalize_to_even,
    search_involutions_numeric,
)
from .models import FAMILIES, UNVERIFIED_FAMILIES, build_model
from .poly import Poly

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_NOT_IN_LOCUS = 4
EXIT_PRECONDITION = 5


class CliError(Exception):
    def __init__(self, code: int, error_class: str, message: str):
        super().__init__(message)
        self.code = code
        self.error_class = error_class


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_rational(raw) -> Fraction:
    if isinstance(raw, bool):
        raise CliError(EXIT_PARSE, "parse", f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(EXIT_PARSE, "parse", f"bad rational {raw!r}: {exc}") from exc
    raise CliError(EXIT_PARSE, "parse", f"not a rational: {raw!r}")


_TERM_RE = re.compile(r"(-?)(\d+(?:/\d+)?)?\*?([xX](?:\^(\d+))?)?$")


def _parse_poly_text(text: str) -> list[Fraction]:
    s = text.strip().replace("**", "^")
    s = re.sub(r"\s+", "", s).replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs: dict[int, Fraction] = {}
    for term in filter(None, s.split("+")):
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise CliError(EXIT_PARSE, "parse", f"bad polynomial term {term!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1):
            coeff = -coeff
        if m.group(3) is None:
            k = 0
        elif m.group(4) is None:
            k = 1
        else:
            k = int(m.group(4))
        coeffs[k] = coeffs.get(k, Fraction(0)) + coeff
    if not coeffs:
        raise CliError(EXIT_PARSE, "parse", "empty polynomial")
    deg = max(coeffs)
    return [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]


def load_curve_document(path: str) -> dict:
    """Read a curve file (JSON or plain polynomial) into a normalized dict."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, "parse", f"cannot read {path}: {exc}") from exc
    stripped = raw.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_PARSE, "parse", f"bad JSON in {path}: {exc}") from exc
        if not isinstance(doc, dict) or "genus" not in doc or "coeffs" not in doc:
            raise CliError(
                EXIT_PARSE, "parse", 'curve document needs "genus" and "coeffs"'
            )
        genus = doc["genus"]
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 2:
            raise CliError(EXIT_PARSE, "parse", f"bad genus {genus!r}")
        if not isinstance(doc["coeffs"], list) or not doc["coeffs"]:
            raise CliError(EXIT_PARSE, "parse", '"coeffs" must be a nonempty list')
        coeffs = [_parse_rational(v) for v in doc["coeffs"]]
        if coeffs[-1] == 0:
            raise CliError(EXIT_PARSE, "parse", "leading coefficient must be nonzero")
    else:
        coeffs = _parse_poly_text(stripped)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 6:
            raise CliError(EXIT_PARSE, "parse", "degree too small for genus >= 2")
        genus = (len(coeffs) - 2) // 2
    deg = len(coeffs) - 1
    if deg not in (2 * genus + 1, 2 * genus + 2):
        raise CliError(
            EXIT_PARSE,
            "parse",
            f"degree {deg} inconsistent with genus {genus}",
        )
    return {"genus": genus, "coeffs": coeffs}


def curve_from_document(doc: dict) -> HyperellipticCurve:
    try:
        return HyperellipticCurve(doc["genus"], Poly(doc["coeffs"]))
    except DegenerateCurveError as exc:
        raise CliError(EXIT_DEGENERATE, "degenerate_curve", str(exc)) from exc


def _echo_curve(doc: dict) -> dict:
    return {
        "genus": doc["genus"],
        "coeffs": [rational_str(c) for c in doc["coeffs"]],
    }


def _invariants_field(u: DihedralInvariants) -> list[str]:
    return [rational_str(x) for x in u.u]


def _numeric_section(curve: HyperellipticCurve, tol: float) -> tuple[list, list]:
    def fmt(v: complex) -> str:
        return f"{v.real:.12g}{v.imag:+.12g}i"

    try:
        involutions = search_involutions_numeric(curve, tol=tol)
    except NumericFailureError as exc:
        raise CliError(EXIT_INTERNAL, "numeric", str(exc)) from exc
    entries = [
        {"a": fmt(m.a), "b": fmt(m.b), "c": fmt(m.c)} for m in involutions
    ]
    notes = ["numeric involutions are floating approximations, not exact results"]
    return entries, notes


def _pipeline_invariants(curve: HyperellipticCurve) -> DihedralInvariants:
    try:
        return invariants_from_even(normalize_to_even(curve))
    except (NotInLocusError, NotNormalizableError) as exc:
        raise CliError(EXIT_NOT_IN_LOCUS, "not_in_locus", str(exc)) from exc


def cmd_invariants(args) -> tuple[dict, int]:
    doc = load_curve_document(args.file)
    curve = curve_from_document(doc)
    out = {
        "command": "invariants",
        "curve": _echo_curve(doc),
        "genus": doc["genus"],
        "diagnostics": [],
    }
    if args.numeric:
        entries, notes = _numeric_section(curve, args.tol)
        out["approx_involutions"] = entries
        out["diagnostics"].extend(notes)
    try:
        u = _pipeline_invariants(curve)
    except CliError as exc:
        if exc.error_class != "not_in_locus":
            raise
        out["status"] = "not_in_locus"
        out["exact"] = True
        out["invariant_tuples"] = []
        out["diagnostics"].append(str(exc))
        print(f"not in locus: {exc}", file=sys.stderr)
        return out, EXIT_NOT_IN_LOCUS
    out["status"] = "ok"
    out["exact"] = u.exact
    out["invariant_tuples"] = [_invariants_field(u)]
    return out, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    doc = load_curve_document(args.file)
    curve = curve_from_document(doc)
    report = classify(curve)
    in_locus = bool(report.invariant_tuples)
    out = {
        "command": "classify",
        "curve": _echo_curve(doc),
        "genus": report.genus,
        "status": "ok" if in_locus else "not_in_locus",
        "invariant_tuples": [_invariants_field(u) for u in report.invariant_tuples],
        "v4_embedded": report.v4_embedded,
        "factor_sign": report.factor_sign,
        "notes": list(report.notes),
        "exact": all(u.exact for u in report.invariant_tuples),
        "diagnostics": [],
    }
    if args.numeric:
        entries, notes = _numeric_section(curve, args.tol)
        out["approx_involutions"] = entries
        out["diagnostics"].extend(notes)
    if not in_locus:
        print("not in locus: no extra involution over the rationals", file=sys.stderr)
        return out, EXIT_NOT_IN_LOCUS
    return out, EXIT_OK


def cmd_isomorphic(args) -> tuple[dict, int]:
    doc_a = load_curve_document(args.file_a)
    doc_b = load_curve_document(args.file_b)
    curve_a = curve_from_document(doc_a)
    curve_b = curve_from_document(doc_b)
    u_a = _pipeline_invariants(curve_a)
    u_b = _pipeline_invariants(curve_b)
    out = {
        "command": "isomorphic",
        "curve_a": _echo_curve(doc_a),
        "curve_b": _echo_curve(doc_b),
        "status": "ok",
        "invariant_tuples_a": [_invariants_field(u_a)],
        "invariant_tuples_b": [_invariants_field(u_b)],
        "isomorphic": u_a.genus == u_b.genus and u_a == u_b,
        "diagnostics": [],
    }
    return out, EXIT_OK


def cmd_model(args) -> tuple[dict, int]:
    u = None
    if args.u is not None:
        values = [_parse_rational(part) for part in args.u.split(",")]
        genus = args.genus if args.genus is not None else len(values)
        if len(values) != genus:
            raise CliError(
                EXIT_PARSE, "parse", f"expected {genus} invariants, got {len(values)}"
            )
        u = DihedralInvariants(genus=genus, u=tuple(values))
    elif args.genus is not None:
        genus = args.genus
    elif args.family.startswith("g2_"):
        genus = 2
    elif args.family.startswith("g3_"):
        genus = 3
    else:
        raise CliError(EXIT_PARSE, "parse", "model needs --u or --genus")
    w = Fraction(args.w) if args.w is not None else None
    try:
        curve = build_model(genus, family=args.family, u=u, w=w)
    except (PreconditionError, DegenerateModelError) as exc:
        raise CliError(EXIT_PRECONDITION, "precondition", str(exc)) from exc
    out = {
        "command": "model",
        "status": "ok",
        "request": {
            "genus": genus,
            "family": args.family,
            "u": [rational_str(x) for x in u.u] if u is not None else None,
            "w": rational_str(w) if w is not None else None,
        },
        "genus": genus,
        "family": args.family,
        "coefficients": [rational_str(c) for c in curve.f.coeffs],
        "diagnostics": [],
    }
    if args.family in UNVERIFIED_FAMILIES:
        out["diagnostics"].append(
            "coefficients transcribed from an unvalidated parametrization; "
            "excluded from round-trip guarantees"
        )
    return out, EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    doc = load_curve_document(args.file)
    curve = curve_from_document(doc)
    out = {
        "command": "decompose",
        "curve": _echo_curve(doc),
        "genus": doc["genus"],
        "diagnostics": [],
    }
    witness = decompose_degree2(curve.f)
    if witness is None:
        out["status"] = "indecomposable"
        if curve.f.degree % 2 == 1:
            out["diagnostics"].append(
                "odd degree: no degree-2 decomposition of an odd-degree polynomial exists"
            )
        return out, EXIT_OK
    out["status"] = "decomposed"
    out["G"] = [rational_str(c) for c in witness.G.coeffs]
    out["H"] = [rational_str(c) for c in witness.H.coeffs]
    out["shift"] = rational_str(-witness.H.coefficient(1) / 2)
    return out, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperinv",
        description="Exact dihedral invariants and models for hyperelliptic "
        "curves with extra involutions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", default=True,
                       help="emit JSON output (default; accepted for compatibility)")

    p_inv = sub.add_parser("invariants", help="dihedral invariants of a curve file")
    p_inv.add_argument("file")
    p_inv.add_argument("--numeric", action="store_true",
                       help="also run the approximate Moebius involution search")
    p_inv.add_argument("--tol", type=float, default=1e-9)
    add_common(p_inv)
    p_inv.set_defaults(handler=cmd_invariants)

    p_cls = sub.add_parser("classify", help="automorphism structure report")
    p_cls.add_argument("file")
    p_cls.add_argument("--numeric", action="store_true")
    p_cls.add_argument("--tol", type=float, default=1e-9)
    add_common(p_cls)
    p_cls.set_defaults(handler=cmd_classify)

    p_iso = sub.add_parser("isomorphic", help="decide isomorphism of two curves")
    p_iso.add_argument("file_a")
    p_iso.add_argument("file_b")
    add_common(p_iso)
    p_iso.set_defaults(handler=cmd_isomorphic)

    p_mod = sub.add_parser("model", help="rational model from invariant data")
    p_mod.add_argument("--genus", type=int)
    p_mod.add_argument("--u", help="comma-separated invariant tuple, e.g. 162,72,18")
    p_mod.add_argument("--w", help="parameter for the g3_aut16 family")
    p_mod.add_argument("--family", default="generic_v4", choices=sorted(FAMILIES))
    add_common(p_mod)
    p_mod.set_defaults(handler=cmd_model)

    p_dec = sub.add_parser("decompose", help="degree-2 decomposition of the curve polynomial")
    p_dec.add_argument("file")
    add_common(p_dec)
    p_dec.set_defaults(handler=cmd_decompose)

    return parser


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.handler(args)
    except CliError as exc:
        _emit(
            {
                "command": args.subcommand,
                "status": "error",
                "error_class": exc.error_class,
                "message": str(exc),
            }
        )
        print(f"error ({exc.error_class}): {exc}", file=sys.stderr)
        return exc.code
    except HyperinvError as exc:
        _emit(
            {
                "command": args.subcommand,
                "status": "error",
                "error_class": "internal",
                "message": str(exc),
            }
        )
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
