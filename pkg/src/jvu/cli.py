"""Command-line front end: one verb per verified claim, JSON reports.

Verbs: ``lemma1`` (the commutator bracketing identity), ``dims`` (symmetric
vs Jordan multilinear dimensions and the tetrad), ``counterexample`` (the
two-sided ideal gap at multidegree (2,2,1)), ``coefficients`` (the 7-term
multilinear ansatz family), ``albert`` (cubic-form and commuting-U checks in
the 27-dimensional exceptional algebra), ``parse`` (expression utility).

Exit codes: 0 when the claim under test is confirmed (or for pure
computations), 2 when it is refuted, 1 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import __version__
from . import albert
from .expr import ParseError, format_linear_combination, format_poly, parse_expr
from .fields import Field, FieldError, field_from_name
from .freealg import FreePoly, GeneratorSet
from .ideals import cohn_gap_witness
from .jordan import (
    LINEAR,
    QUADRATIC,
    JordanElement,
    circ,
    commutator_image,
    je_circ,
    jordan_spanning_set,
    recipe_str,
    symmetric_component_dim,
    u_apply,
    commutator_identity_residual,
)
from .linalg import ComponentBasis, Subspace, solve_combination, to_vector

SCHEMA_VERSION = 1

EXIT_CONFIRMED = 0
EXIT_ERROR = 1
EXIT_REFUTED = 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field(args) -> Field:
    try:
        return field_from_name(args.field)
    except FieldError as e:
        raise UsageError(str(e)) from None


def _mode(args, field: Field) -> str:
    if getattr(args, "mode", None):
        return args.mode
    return QUADRATIC if field.characteristic == 2 else LINEAR


def _scalar_str(c, field: Field) -> str:
    if field.characteristic:
        return str(c)
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# Verbs


def _run_lemma1(args):
    field = _field(args)
    residual = commutator_identity_residual(field)
    verdict = "confirmed" if residual.is_zero() else "refuted"
    inputs = {"field": args.field}
    data = {"residual": format_poly(residual)}
    return verdict, inputs, data, {}


def _run_dims(args):
    field = _field(args)
    mode = _mode(args, field)
    names = tuple(args.vars.split(","))
    gens = GeneratorSet(names)
    d = tuple(int(c) for c in args.multidegree.split(","))
    if len(d) != len(names):
        raise UsageError("multidegree length must match the number of generators")
    sym_dim = symmetric_component_dim(gens, d, field)
    ss = jordan_spanning_set(gens, d, mode, unital=False, field=field, degree_bound=args.degree_bound)
    cb = ComponentBasis(gens, d)
    span = Subspace(field, len(cb))
    for e in ss:
        span.insert(to_vector(e.value, cb))
    inputs = {
        "vars": list(names),
        "multidegree": list(d),
        "field": args.field,
        "mode": mode,
        "degree_bound": args.degree_bound,
    }
    data = {"symmetric_dim": sym_dim, "jordan_dim": span.dim}
    canonical = names == ("x", "y", "z", "t") and d == (1, 1, 1, 1)
    if canonical:
        tetrad_expr = "sym(t*z*x*y)"
        tetrad = parse_expr(tetrad_expr, gens, field)
        verdict_str, _ = span.membership(to_vector(tetrad, cb))
        data["tetrad"] = {"expr": tetrad_expr, "in_jordan_span": verdict_str == "inside"}
    if canonical and field.characteristic == 2:
        ok = sym_dim == 12 and span.dim == 11 and not data["tetrad"]["in_jordan_span"]
        verdict = "confirmed" if ok else "refuted"
    else:
        verdict = "computed"
    return verdict, inputs, data, {}


def _counterexample_setup(field: Field):
    gens = GeneratorSet(("x", "y", "z"))
    x = FreePoly.generator(gens, field, "x")
    y = FreePoly.generator(gens, field, "y")
    z = FreePoly.generator(gens, field, "z")
    f = je_circ(JordanElement.generator(gens, field, "x"), JordanElement.generator(gens, field, "y"))
    return gens, x, y, z, f


def _run_counterexample(args):
    field = _field(args)
    mode = _mode(args, field)
    gens, x, y, z, f = _counterexample_setup(field)
    d = (2, 2, 1)
    default_witness = args.witness is None
    if default_witness:
        g = commutator_image(x, y, z)
        witness_expr = "U(y; U(x; z)) - U(x; U(y; z))"
    else:
        witness_expr = args.witness
        try:
            g = parse_expr(witness_expr, gens, field)
        except ParseError as e:
            raise UsageError(f"bad witness: {e}") from None
    report = cohn_gap_witness(f, g, d, mode, field, degree_bound=args.degree_bound)
    outer, assoc = report.outer, report.assoc

    w = (circ(x, y) * z * x * y).symmetrize()
    s = u_apply(circ(x, y), z)
    w_verdict, w_data = outer.membership(w)
    s_verdict, s_data = outer.membership(s)

    certificates = {}
    if report.g_in_assoc:
        terms = []
        f_str = f"({format_poly(f.value)})"
        for idx, c in sorted(report.assoc_certificate.items()):
            w1, w2 = assoc.products[idx]
            factors = [t for t in (g.word_str(w1) if w1 else "", f_str, g.word_str(w2) if w2 else "") if t]
            terms.append((c, "*".join(factors)))
        cert = format_linear_combination(terms, field)
        if parse_expr(cert, gens, field) != g:
            raise RuntimeError("associative certificate failed to replay")
        certificates["witness_in_assoc"] = cert
    else:
        certificates["witness_assoc_residual"] = format_poly(report.assoc_residual)
    if report.g_in_outer:
        terms = [
            (c, recipe_str(outer.inserted[idx].recipe))
            for idx, c in sorted(report.outer_certificate.items())
        ]
        cert = format_linear_combination(terms, field)
        if parse_expr(cert, gens, field) != g:
            raise RuntimeError("outer certificate failed to replay")
        certificates["witness_in_outer"] = cert
    else:
        certificates["witness_outer_residual"] = format_poly(report.outer_residual)
    if s_verdict == "inside":
        terms = [
            (c, recipe_str(outer.inserted[idx].recipe)) for idx, c in sorted(s_data.items())
        ]
        cert = format_linear_combination(terms, field)
        if parse_expr(cert, gens, field) != s:
            raise RuntimeError("seed certificate failed to replay")
        certificates["u_image_in_outer"] = cert
    if w_verdict == "outside":
        certificates["symmetrized_product_outer_residual"] = format_poly(w_data)

    inputs = {
        "field": args.field,
        "mode": mode,
        "multidegree": [2, 2, 1],
        "generator": "circ(x, y)",
        "witness": witness_expr,
        "degree_bound": args.degree_bound,
    }
    data = {
        "witness_in_assoc": report.g_in_assoc,
        "witness_in_outer": report.g_in_outer,
        "gap": report.gap,
        "symmetrized_product_in_outer": w_verdict == "inside",
        "u_image_in_outer": s_verdict == "inside",
        "outer_dim": outer.dim,
        "assoc_dim": assoc.dim,
        "rounds_to_fixpoint": outer.rounds_to_fixpoint,
    }
    if default_witness:
        ok = (
            report.gap
            and not data["symmetrized_product_in_outer"]
            and data["u_image_in_outer"]
        )
    else:
        ok = report.gap
    return ("confirmed" if ok else "refuted"), inputs, data, certificates


#: the seven ansatz expressions; t stands for the substituted generator
ANSATZ_EXPRS = (
    "sym(x*z*y*t)",
    "sym(x*z*t*y)",
    "sym(t*z*x*y)",
    "sym(t*z*y*x)",
    "sym(y*z*t*x)",
    "sym(y*z*x*t)",
    "U(t; z)",
)


def coefficient_targets(field: Field):
    """The seven ansatz elements with t := x o y substituted, plus the goal."""
    gens = GeneratorSet(("x", "y", "z"))
    x = FreePoly.generator(gens, field, "x")
    y = FreePoly.generator(gens, field, "y")
    z = FreePoly.generator(gens, field, "z")
    t = circ(x, y)
    targets = [
        (x * z * y * t).symmetrize(),
        (x * z * t * y).symmetrize(),
        (t * z * x * y).symmetrize(),
        (t * z * y * x).symmetrize(),
        (y * z * t * x).symmetrize(),
        (y * z * x * t).symmetrize(),
        u_apply(t, z),
    ]
    rhs = (t * z * x * y).symmetrize()
    return gens, targets, rhs


def reference_family(field: Field):
    """The expected normalized family: particular with the 4th slot zero and
    the one homogeneous direction scaled to 1 there."""
    particular = [field.zero] * 7
    particular[2] = field.one
    h = [field.zero] * 7
    h[2] = field.one
    h[3] = field.one
    h[6] = field.sub(field.zero, field.from_int(2))
    return particular, [h]


def _run_coefficients(args):
    field = _field(args)
    gens, targets, rhs = coefficient_targets(field)
    cb = ComponentBasis(gens, (2, 2, 1))
    sol = solve_combination(targets, rhs, cb)
    inputs = {"field": args.field, "ansatz": list(ANSATZ_EXPRS), "goal": "sym(t*z*x*y) with t = circ(x, y)"}
    if not sol.feasible:
        return "refuted", inputs, {"feasible": False}, {}
    particular, homogeneous = sol.particular, sol.homogeneous
    normalized = False
    if len(homogeneous) == 1 and not field.is_zero(homogeneous[0][3]):
        h = homogeneous[0]
        inv = field.inv(h[3])
        h = [field.mul(inv, c) for c in h]
        p4 = particular[3]
        particular = [field.sub(p, field.mul(p4, c)) for p, c in zip(particular, h)]
        homogeneous = [h]
        normalized = True
    ref_p, ref_h = reference_family(field)
    matches = normalized and particular == ref_p and homogeneous == ref_h
    family = {
        f"alpha{i+1}": _family_entry(particular[i], homogeneous[0][i] if homogeneous else field.zero, field)
        for i in range(7)
    }
    data = {
        "feasible": True,
        "homogeneous_dim": len(sol.homogeneous),
        "particular": [_scalar_str(c, field) for c in particular],
        "homogeneous_basis": [[_scalar_str(c, field) for c in h] for h in homogeneous],
        "family": family,
        "matches_reference": matches,
    }
    return ("confirmed" if matches else "refuted"), inputs, data, {}


def _family_entry(p, h, field: Field) -> str:
    """Render alpha_i = p + L*h as a readable string in the parameter L."""
    parts = []
    if not field.is_zero(p):
        parts.append(_scalar_str(p, field))
    if not field.is_zero(h):
        if h == field.one:
            parts.append("L")
        else:
            parts.append(f"{_scalar_str(h, field)}*L")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def _run_albert(args):
    if _field(args).characteristic != 0:
        raise UsageError("the 27-dimensional checks run over the rationals only")
    rng = random.Random(args.seed)
    n = args.samples
    cubic_pass = sum(1 for _ in range(n) if albert.check_cubic(albert.random_element(rng)).is_zero())
    eq1_pass = sum(
        1
        for _ in range(n)
        if albert.check_eq1(albert.random_element(rng), albert.random_element(rng)).is_zero()
    )
    op_pass = sum(
        1
        for _ in range(n)
        if albert.check_operator_identity(albert.random_element(rng), albert.random_element(rng))
    )
    pair_rng = random.Random(args.seed)
    stats = {
        "count": n,
        "r_a2_b_commute_pass": 0,
        "r_a_b2_commute_pass": 0,
        "commutators_match_pass": 0,
        "u_commutator_zero_pass": 0,
        "operator_collapse_pass": 0,
        "dichotomy_pass": 0,
        "s_ab_zero_count": 0,
        "a2b_zero_count": 0,
    }
    for _ in range(n):
        a, b = albert.sample_zero_pair(pair_rng)
        checks = albert.check_zero_pair(a, b)
        stats["r_a2_b_commute_pass"] += checks.r_a2_b_commute
        stats["r_a_b2_commute_pass"] += checks.r_a_b2_commute
        stats["commutators_match_pass"] += checks.commutators_match
        stats["u_commutator_zero_pass"] += checks.u_commutator_zero
        stats["operator_collapse_pass"] += albert.zero_pair_operator_collapse(a, b)
        stats["dichotomy_pass"] += checks.s_ab_zero or checks.a2b_zero
        stats["s_ab_zero_count"] += checks.s_ab_zero
        stats["a2b_zero_count"] += checks.a2b_zero
    try:
        albert.find_noncommuting_pair(random.Random(args.seed))
        nonvacuous = True
    except RuntimeError:
        nonvacuous = False
    inputs = {"samples": n, "seed": args.seed}
    data = {
        "cubic_pass": cubic_pass,
        "eq1_pass": eq1_pass,
        "operator_identity_pass": op_pass,
        "zero_pair": stats,
        "nonvacuous_found": nonvacuous,
    }
    ok = (
        cubic_pass == n
        and eq1_pass == n
        and op_pass == n
        and all(
            stats[k] == n
            for k in (
                "r_a2_b_commute_pass",
                "r_a_b2_commute_pass",
                "commutators_match_pass",
                "u_commutator_zero_pass",
                "operator_collapse_pass",
                "dichotomy_pass",
            )
        )
        and nonvacuous
    )
    return ("confirmed" if ok else "refuted"), inputs, data, {}


def _run_parse(args):
    field = _field(args)
    gens = GeneratorSet(tuple(args.vars.split(",")))
    try:
        p = parse_expr(args.expr, gens, field)
    except ParseError as e:
        raise UsageError(str(e)) from None
    canonical = format_poly(p)
    if parse_expr(canonical, gens, field) != p:
        raise RuntimeError("canonical form failed to round-trip")
    inputs = {"expr": args.expr, "vars": list(gens.names), "field": args.field}
    data = {"canonical": canonical, "terms": len(p.terms), "round_trip": True}
    return "computed", inputs, data, {}


_VERBS = {
    "lemma1": _run_lemma1,
    "dims": _run_dims,
    "counterexample": _run_counterexample,
    "coefficients": _run_coefficients,
    "albert": _run_albert,
    "parse": _run_parse,
}


# ---------------------------------------------------------------------------
# Argument parsing and report plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jvu", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jvu {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, field_default="q"):
        p.add_argument("--field", default=field_default, help="q or gf<p> (default %(default)s)")
        p.add_argument("--out", default=None, help="write the JSON report to this file")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--degree-bound", type=int, default=8, dest="degree_bound")

    p = sub.add_parser("lemma1", help="verify the U-commutator bracketing identity")
    common(p)

    p = sub.add_parser("dims", help="symmetric vs Jordan multilinear dimensions")
    common(p, field_default="gf2")
    p.add_argument("--vars", default="x,y,z,t")
    p.add_argument("--multidegree", default="1,1,1,1")
    p.add_argument("--mode", choices=[LINEAR, QUADRATIC], default=None)

    p = sub.add_parser("counterexample", help="the two-sided ideal gap at multidegree (2,2,1)")
    common(p)
    p.add_argument("--mode", choices=[LINEAR, QUADRATIC], default=None)
    p.add_argument("--witness", default=None, help="alternative witness expression over x,y,z")

    p = sub.add_parser("coefficients", help="solve the 7-term multilinear ansatz")
    common(p)

    p = sub.add_parser("albert", help="cubic-form and commuting-U checks in H3(O)")
    common(p)
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("parse", help="parse an expression and print its canonical form")
    common(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", default="x,y,z")

    return parser


def _write_report(report: dict, out: str | None):
    text = json.dumps(report, indent=2)
    if out is None:
        print(text)
        return
    tmp = f"{out}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")
    os.replace(tmp, out)


def _execute(args) -> tuple[int, dict]:
    t0 = time.perf_counter()
    report = {
        "schema_version": SCHEMA_VERSION,
        "task": args.verb,
        "tool_version": __version__,
        "field": getattr(args, "field", None),
        "mode": None,
        "seed": getattr(args, "seed", None),
    }
    try:
        verdict, inputs, data, certificates = _VERBS[args.verb](args)
    except UsageError as e:
        report.update(verdict="error", error=str(e))
        report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
        return EXIT_ERROR, report
    except Exception as e:  # internal error: still emit a structured report
        report.update(verdict="error", error=f"{type(e).__name__}: {e}")
        report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
        return EXIT_ERROR, report
    report["mode"] = inputs.get("mode")
    report.update(inputs=inputs, verdict=verdict, data=data, certificates=certificates)
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    code = EXIT_REFUTED if verdict == "refuted" else EXIT_CONFIRMED
    return code, report


def run_command(argv) -> tuple[int, dict]:
    """Run one CLI invocation in-process; returns (exit code, report)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return EXIT_ERROR, {"schema_version": SCHEMA_VERSION, "verdict": "error", "error": str(e)}
    return _execute(args)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"jvu: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    code, report = _execute(args)
    _write_report(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
