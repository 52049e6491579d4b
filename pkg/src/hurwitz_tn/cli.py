"""Command-line front end: ``hurwitz <command> [coefficients...] [--flags]``.

Every command prints one report (JSON schema ``v1`` by default)::

    {"schema_version": "v1", "request": {...}, "results": {...}, "warnings": [...]}

Exit status is 0 whenever the analysis completes (a NotTN verdict is a
result, not an error), 2 for usage or parse errors and 3 for computation
errors, in which case ``results`` is replaced by an ``error`` object.
"""

from __future__ import annotations

import argparse
import csv
import cmath
import json
import math
import os
import sys
from fractions import Fraction

from . import classification, polya_frequency, sector_analysis, spectral, tnn_checker
from .errors import HurwitzError
from .hurwitz_matrices import (
    finite_hurwitz,
    infinite_hurwitz_truncation,
    verify_factorization,
    verify_hurwitz_factorization,
)
from .polynomial import DEFAULT_TOL, Polynomial, find_roots

SCHEMA_VERSION = "v1"
COMMANDS = ("classify", "tnn", "minors", "sector", "factor", "pf", "spectrum",
            "gen-sharp", "verify-factorization")


class UsageError(Exception):
    pass


# -- serialization --------------------------------------------------------------


def num(v):
    """JSON-safe scalar: exact values as ``"p/q"`` strings, floats as numbers."""
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, complex):
        return {"re": num(v.real), "im": num(v.imag)}
    v = float(v)
    return v + 0.0 if math.isfinite(v) else str(v)


def poly_json(p: Polynomial | None):
    if p is None:
        return None
    return {"coefficients": [num(c) for c in p.coeffs], "degree": p.degree,
            "backend": p.backend.value, "text": p.pretty()}


def roots_json(pairs) -> list:
    return [{"re": float(z.real) + 0.0, "im": float(z.imag) + 0.0, "multiplicity": k} for z, k in pairs]


def matrix_json(M) -> list:
    return [[num(v) for v in row] for row in M.tolist()]


def minors_json(seq: tnn_checker.MinorSequence) -> dict:
    return {"kind": seq.kind, "values": [num(v) for v in seq.values], "signs": list(seq.signs())}


def witness_json(w):
    if w is None:
        return None
    return {"rows": list(w.rows), "cols": list(w.cols), "value": num(w.value)}


# -- parsing --------------------------------------------------------------------


def parse_coefficients(tokens: list[str], ascending: bool = False, backend: str | None = None) -> Polynomial:
    if not tokens:
        raise UsageError("no coefficients given")
    values = []
    for t in tokens:
        t = t.strip()
        try:
            if any(ch in t for ch in ".eEinfa"):
                values.append(float(t))
            else:
                values.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse coefficient {t!r}") from None
    if ascending:
        values.reverse()
    return Polynomial(values, backend=backend)


def _split(text: str | None) -> list[str]:
    return [] if text is None else text.replace(",", " ").split()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Total nonnegativity of Hurwitz matrices and polynomial stability.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("coefficients", nargs="*",
                        help="polynomial coefficients, highest power first")
    parser.add_argument("--poly", help="coefficients as one quoted string")
    parser.add_argument("--ascending", action="store_true",
                        help="read coefficients lowest power first")
    parser.add_argument("--tol", type=float, default=None,
                        help="float tolerance (default 1e-9, env HURWITZ_TOL)")
    parser.add_argument("--backend", choices=("exact", "float"), default=None)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--depth", type=int, help="window size for eta minors / tnn on H_inf")
    parser.add_argument("--n", type=int, help="degree for gen-sharp / sector")
    parser.add_argument("--m", type=int, help="stability index for sector bounds")
    parser.add_argument("--r", type=int, help="PF order or Schoenberg degree")
    parser.add_argument("--k", type=int, help="Schoenberg PF order")
    parser.add_argument("--epsilon", type=float, help="offset past the sufficiency boundary")
    parser.add_argument("--theorem", help="sector theorem: Nec21 Cor22 Suf23 Nec57 Suf58; "
                                          "gen-sharp: nec suf schoenberg")
    parser.add_argument("--mode", choices=("order_r", "all"), default="order_r",
                        help="pf: order-r minors only or every minor of T_r")
    parser.add_argument("--q", help="verify-factorization: second polynomial of H(p, q)")
    parser.add_argument("--g", help="verify-factorization: common factor g")
    parser.add_argument("--literal-angle", action="store_true",
                        help="gen-sharp suf: use the uncorrected pi/(n+m+2) angle")
    parser.add_argument("--emit-csv", metavar="PATH", help="sector: write root arguments as CSV")
    return parser


def resolve_tol(arg: float | None) -> float:
    if arg is not None:
        return arg
    env = os.environ.get("HURWITZ_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"HURWITZ_TOL={env!r} is not a number") from None
    return DEFAULT_TOL


def _poly_from_args(args) -> Polynomial:
    tokens = list(args.coefficients) + _split(args.poly)
    return parse_coefficients(tokens, args.ascending, args.backend)


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


# -- commands -------------------------------------------------------------------


def cmd_classify(args, tol, warnings):
    p = _poly_from_args(args)
    r = classification.classify(p, tol=tol)
    warnings.extend(r.warnings)
    return {
        "polynomial": poly_json(p),
        "stability_class": r.stability_class,
        "m": r.stability_index,
        "degeneracy_index": r.degeneracy_index,
        "finite_tnn": r.finite_tnn,
        "rank": r.rank,
        "roots": roots_json(r.roots) if r.roots is not None else None,
        "delta": minors_json(r.delta),
        "eta": minors_json(r.eta),
        "factor_q": poly_json(r.factor_q),
        "factor_g": poly_json(r.factor_g),
        "criteria_agreement": dict(r.criteria_agreement),
        "discrepancies": list(r.discrepancies),
        "reflection_property": (classification.check_reflection_property(p, r.roots)
                                if r.roots is not None else None),
    }


def cmd_tnn(args, tol, warnings):
    p = _poly_from_args(args)
    if args.depth:
        M = infinite_hurwitz_truncation(p, args.depth)
    else:
        M = finite_hurwitz(p)
    rep = tnn_checker.is_totally_nonnegative(M, tol=tol)
    return {
        "polynomial": poly_json(p),
        "matrix": {"recipe": M.recipe.describe(), "entries": matrix_json(M)},
        "verdict": rep.verdict,
        "witness": witness_json(rep.witness),
        "minors_checked": rep.minors_checked,
        "max_order_checked": rep.max_order_checked,
    }


def cmd_minors(args, tol, warnings):
    p = _poly_from_args(args)
    depth = args.depth or p.degree + 2
    delta = tnn_checker.hurwitz_minors(p, tol)
    return {
        "polynomial": poly_json(p),
        "delta": minors_json(delta),
        "eta": minors_json(tnn_checker.eta_minors(p, depth, tol)),
        "stability_index": tnn_checker.stability_index_from_minors(delta),
    }


def cmd_sector(args, tol, warnings):
    p = _poly_from_args(args)
    theorem = args.theorem or "Nec21"
    n = args.n or p.degree
    half = sector_analysis.sector_for_theorem(theorem, n, args.m)
    v = sector_analysis.check_zero_free_sector(p, half, theorem)
    if args.emit_csv:
        with open(args.emit_csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["re", "im", "multiplicity", "abs_arg"])
            for z, k in find_roots(p.to_float()):
                w.writerow([repr(z.real + 0.0), repr(z.imag + 0.0), k, repr(abs(cmath.phase(z)))])
    return {
        "polynomial": poly_json(p),
        "theorem": theorem,
        "half_angle": half,
        "half_angle_degrees": math.degrees(half),
        "ok": v.ok,
        "roots_inside": roots_json(v.roots_inside),
        "roots_on_boundary": roots_json(v.roots_on_boundary),
    }


def cmd_factor(args, tol, warnings):
    p = _poly_from_args(args)
    q, g = classification.factor_quasistable(p, tol)
    return {
        "polynomial": poly_json(p),
        "q": poly_json(q),
        "g": poly_json(g),
        "stability_index_from_delta": tnn_checker.stability_index_from_minors(
            tnn_checker.hurwitz_minors(p, tol)),
    }


def cmd_pf(args, tol, warnings):
    g = _poly_from_args(args)
    r = _need(args.r, "--r")
    rep = polya_frequency.is_pf_r(g, r, args.mode)
    return {
        "polynomial": poly_json(g),
        "r": r,
        "verdict": rep.verdict,
        "witness": witness_json(rep.witness),
        "reduction_used": rep.reduction_used,
    }


def cmd_spectrum(args, tol, warnings):
    p = _poly_from_args(args)
    rep = spectral.spectral_analysis(p, tol)
    warnings.extend(rep.warnings)
    p0 = rep.p0_eigen
    return {
        "polynomial": poly_json(p),
        "eigenvalues": roots_json(rep.eigenvalues),
        "rank": rep.rank,
        "zero_algebraic_mult": rep.zero_algebraic_mult,
        "zero_geometric_mult": rep.zero_geometric_mult,
        "positive_count": rep.positive_count,
        "p0_eigen": None if p0 is None else {
            "value": num(p0.value), "algebraic": p0.algebraic, "geometric": p0.geometric},
        "jordan_consistent": rep.jordan_consistent,
        "stability_index": rep.stability_index,
        "out_of_theorem_scope": rep.out_of_theorem_scope,
        "irreducible_leading_block": rep.irreducible_leading_block,
    }


def cmd_gen_sharp(args, tol, warnings):
    theorem = (args.theorem or "nec").lower()
    if theorem == "nec":
        n = _need(args.n, "--n")
        p = sector_analysis.sharp_necessary_example(n, args.m)
    elif theorem == "suf":
        n = _need(args.n, "--n")
        m = args.m if args.m is not None else n - 4
        eps = args.epsilon if args.epsilon is not None else 0.01
        p = sector_analysis.sharp_sufficient_counterexample(n, m, eps, literal=args.literal_angle)
    elif theorem == "schoenberg":
        p = polya_frequency.schoenberg_sharp_polynomial(_need(args.r, "--r"), _need(args.k, "--k"))
    else:
        raise UsageError(f"unknown --theorem {args.theorem!r} for gen-sharp (nec, suf, schoenberg)")
    out = poly_json(p)
    out["coefficients_text"] = " ".join(str(c) for c in out["coefficients"])
    return {"theorem": theorem, "polynomial": out}


def cmd_verify(args, tol, warnings):
    first = _poly_from_args(args)
    g = parse_coefficients(_split(_need(args.g, "--g")), args.ascending, args.backend)
    if args.q is None:
        ok = verify_hurwitz_factorization(first, g, tol)
        return {"identity": "H_n(q(z) g(z^2)) = H_n(q) T_n(g)", "q": poly_json(first),
                "g": poly_json(g), "holds": ok}
    q = parse_coefficients(_split(args.q), args.ascending, args.backend)
    chk = verify_factorization(first, q, g, tol=tol)
    return {
        "identity": "H(p g, q g) = H(p, q) T(g)",
        "p": poly_json(first), "q": poly_json(q), "g": poly_json(g),
        "infinite_window": chk.infinite_window,
        "finite": chk.finite,
        "rank_claim": chk.rank_claim,
        "rank": chk.rank,
        "expected_rank": chk.expected_rank,
        "holds": bool(chk),
    }


HANDLERS = {
    "classify": cmd_classify,
    "tnn": cmd_tnn,
    "minors": cmd_minors,
    "sector": cmd_sector,
    "factor": cmd_factor,
    "pf": cmd_pf,
    "spectrum": cmd_spectrum,
    "gen-sharp": cmd_gen_sharp,
    "verify-factorization": cmd_verify,
}


# -- output ---------------------------------------------------------------------


def _request_echo(args, tol) -> dict:
    options = {
        "ascending": args.ascending, "backend": args.backend, "depth": args.depth,
        "epsilon": args.epsilon, "format": args.format, "g": args.g, "k": args.k,
        "literal_angle": args.literal_angle, "m": args.m, "mode": args.mode, "n": args.n,
        "q": args.q, "r": args.r, "theorem": args.theorem, "tol": tol,
    }
    return {
        "command": args.command,
        "coefficients": list(args.coefficients) + _split(args.poly),
        "options": {k: v for k, v in options.items() if v is not None},
    }


def _text_lines(obj, prefix="") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            lines.extend(_text_lines(v, f"{prefix}.{k}" if prefix else str(k)))
        return lines
    if isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        lines = []
        for i, v in enumerate(obj):
            lines.extend(_text_lines(v, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix}: {json.dumps(obj)}"]


def render(report: dict, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_text_lines(report)) + "\n"
    return json.dumps(report, indent=2) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute one request; returns ``(exit_code, rendered_report)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        tol = resolve_tol(args.tol)
        request = _request_echo(args, tol)
        warnings: list[str] = []
        results = HANDLERS[args.command](args, tol, warnings)
    except UsageError as exc:
        return 2, f"hurwitz: error: {exc}\n"
    except (HurwitzError, ZeroDivisionError, OverflowError) as exc:
        report = {
            "schema_version": SCHEMA_VERSION,
            "request": request,
            "error": {"type": type(exc).__name__, "message": str(exc)},
            "warnings": [],
        }
        return 3, render(report, args.format)
    report = {"schema_version": SCHEMA_VERSION, "request": request,
              "results": results, "warnings": list(warnings)}
    return 0, render(report, args.format)


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
