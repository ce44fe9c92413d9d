"""Command-line front end.

Subcommands: poly, zeros, quad, table, measure, check, flip.  Output is
deterministic for fixed arguments and seed: floats are formatted to a fixed
number of significant digits (10 by default, --precision to change), CSV uses
LF line endings and a header row, JSON is emitted with sorted keys and carries
a "schema" version field.  Library errors (complex zeros, poles, bad schemes)
exit 1 with an "error: ..." line on stderr; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .density import lagrange_density, sample_density, spline_density
from .errors import RiiError
from .integrands import BUILTINS, parse_integrand
from .quadrature import MOMENT, SECOND_KIND, build_rule, calibrate_m0, estimate, real_zeros
from .schemes import CoefficientScheme, Perturbation, cauchy_scheme
from .sequences import gen_first_kind, gen_second_kind
from .suites import SUITES, run_suite
from .tables import order_flip_experiment, reproduce_table, resolve_method

log = logging.getLogger("rii")

SCHEMA_VERSION = 1


def _fmt(value, precision):
    if isinstance(value, float):
        return "%.*g" % (precision, value)
    return "" if value is None else str(value)


def _json_number(value, precision):
    return float("%.*g" % (precision, value)) if isinstance(value, float) else value


def _write_csv(rows, columns, precision):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row.get(c, ""), precision) for c in columns])


def _write_json(document):
    json.dump(document, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _load_scheme(spec_text):
    if spec_text == "cauchy":
        return cauchy_scheme()
    if os.path.exists(spec_text):
        with open(spec_text, "r", encoding="utf-8") as handle:
            return CoefficientScheme.from_json(handle.read())
    return CoefficientScheme.from_json(spec_text)


def _perturbation_from_args(args):
    mu = getattr(args, "mu", None)
    nu = getattr(args, "nu", None)
    return Perturbation(
        k=args.k if mu is not None else None,
        mu=Fraction(mu) if mu is not None else None,
        kp=args.kp if nu is not None else None,
        nu=Fraction(nu) if nu is not None else None,
    )


@dataclass(frozen=True)
class ExperimentConfig:
    """A reproducible experiment: scheme, perturbations, sizes, integrand.

    Round-trips losslessly through JSON (rationals as "p/q" strings; the
    document carries a schema version).
    """
    scheme: object            # CoefficientScheme
    perturbations: tuple      # of Perturbation
    n_values: tuple           # of int
    integrand: str = "example3"
    out: str = "text"
    seed: int = 0

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "scheme": self.scheme.to_dict(),
            "perturbations": [p.to_dict() for p in self.perturbations],
            "n": list(self.n_values),
            "integrand": self.integrand,
            "out": self.out,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data):
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError("unsupported config schema %r" % (data.get("schema"),))
        return cls(
            scheme=CoefficientScheme.from_dict(data["scheme"]),
            perturbations=tuple(Perturbation.from_dict(p)
                                for p in data["perturbations"]),
            n_values=tuple(int(n) for n in data["n"]),
            integrand=data.get("integrand", "example3"),
            out=data.get("out", "text"),
            seed=int(data.get("seed", 0)),
        )

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, ExperimentConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()


# --- subcommands -----------------------------------------------------------

def _cmd_poly(args):
    scheme = _load_scheme(args.scheme)
    pert = _perturbation_from_args(args)
    kinds = ("first", "second") if args.kind == "both" else (args.kind,)
    entries = []
    for kind in kinds:
        seq = (gen_first_kind if kind == "first" else gen_second_kind)(
            scheme, pert, args.n)
        entries.append((kind, seq[args.n]))
    if args.out == "json":
        _write_json({"schema": SCHEMA_VERSION, "polynomials": [
            {"kind": kind, "n": args.n, "coefficients": [str(c) for c in p.coeffs]}
            for kind, p in entries]})
    elif args.out == "csv":
        rows = [{"kind": kind, "n": args.n, "j": j, "coefficient": str(c)}
                for kind, p in entries for j, c in enumerate(p.coeffs)]
        _write_csv(rows, ("kind", "n", "j", "coefficient"), args.precision)
    else:
        labels = {"first": "P", "second": "Q"}
        for kind, p in entries:
            print("%s_%d(x) = %s" % (labels[kind], args.n, p))
    return 0


def _cmd_zeros(args):
    scheme = _load_scheme(args.scheme)
    pert = _perturbation_from_args(args)
    poly = gen_first_kind(scheme, pert, args.n)[args.n]
    zeros = real_zeros(poly, tol_imag=args.tol_imag)
    if args.out == "json":
        _write_json({"schema": SCHEMA_VERSION, "n": args.n,
                     "zeros": [_json_number(z, args.precision) for z in zeros]})
    elif args.out == "csv":
        rows = [{"j": j + 1, "zero": z} for j, z in enumerate(zeros)]
        _write_csv(rows, ("j", "zero"), args.precision)
    else:
        for z in zeros:
            print(_fmt(z, args.precision))
    return 0


def _run_quad_once(scheme, pert, n, integrand, method, precision):
    rule = build_rule(scheme, pert, n, method=resolve_method(pert, method))
    value = estimate(rule, integrand)
    log.info("quad n=%d method=%s -> %s", n, rule.method, value)
    return value


def _cmd_quad(args):
    if args.config:
        with open(args.config, "r", encoding="utf-8") as handle:
            config = ExperimentConfig.from_json(handle.read())
        scheme = config.scheme
        integrand = parse_integrand(config.integrand)
        out = args.out or config.out
        rows = []
        for pert in config.perturbations or (Perturbation.none(),):
            for n in config.n_values:
                value = _run_quad_once(scheme, pert, n, integrand,
                                       args.method, args.precision)
                rows.append({"n": n, "mu": pert.mu, "k": pert.k,
                             "nu": pert.nu, "kp": pert.kp, "I_star": value})
    else:
        if args.n is None:
            raise ValueError("--n is required without --config")
        scheme = _load_scheme(args.scheme)
        pert = _perturbation_from_args(args)
        integrand = parse_integrand(args.integrand)
        out = args.out
        value = _run_quad_once(scheme, pert, args.n, integrand,
                               args.method, args.precision)
        rows = [{"n": args.n, "mu": pert.mu, "k": pert.k,
                 "nu": pert.nu, "kp": pert.kp, "I_star": value}]
    if out == "json":
        _write_json({"schema": SCHEMA_VERSION, "results": [
            {k: (_json_number(v, args.precision) if k == "I_star" else
                 (str(v) if v is not None else None))
             for k, v in row.items()} for row in rows]})
    elif out == "csv":
        _write_csv(rows, ("n", "mu", "k", "nu", "kp", "I_star"), args.precision)
    else:
        for row in rows:
            print(_fmt(row["I_star"], args.precision))
    return 0


def _cmd_table(args):
    report = reproduce_table(args.id)
    out = args.out or "csv"
    if out == "json":
        _write_json({
            "schema": SCHEMA_VERSION,
            "table": report.table_id,
            "max_deviation": _json_number(report.max_deviation, args.precision),
            "flagged": report.flagged,
            "rows": [{c: _json_number(r.get(c, ""), args.precision) for c in report.columns}
                     for r in report.rows],
        })
    elif out == "csv":
        _write_csv(report.rows, report.columns, args.precision)
    else:
        _write_csv(report.rows, report.columns, args.precision)
        print("# max |computed - reference| = %s over %d cells (%d flagged)"
              % (_fmt(report.max_deviation, args.precision),
                 len(report.rows), report.flagged))
    return 0


def _cmd_measure(args):
    scheme = _load_scheme(args.scheme)
    pert = _perturbation_from_args(args)
    rule = build_rule(scheme, pert, args.n, method=resolve_method(pert, "auto"))
    build = lagrange_density if args.method == "lagrange" else spline_density
    approx = build(rule.nodes, rule.weights)
    x_min = args.x_min if args.x_min is not None else rule.nodes[0]
    x_max = args.x_max if args.x_max is not None else rule.nodes[-1]
    samples = sample_density(approx, x_min, x_max, args.samples)
    rows = [{"x": x, "density": v, "flag": flag} for x, v, flag in samples]
    out = args.out or "csv"
    if out == "json":
        _write_json({"schema": SCHEMA_VERSION, "method": args.method, "n": args.n,
                     "samples": [{"x": _json_number(x, args.precision),
                                  "density": _json_number(v, args.precision),
                                  "flag": flag} for x, v, flag in samples]})
    else:
        _write_csv(rows, ("x", "density", "flag"), args.precision)
    return 0


def _cmd_check(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        result = run_suite(name, seed=args.seed, instances=args.instances)
        log.info("suite %s finished in %.2fs", name, result.elapsed)
        print("%s: %d instances, %d failures"
              % (result.name, result.instances, len(result.failures)))
        for failure in result.failures[:5]:
            print("  failure: %s" % json.dumps(failure, sort_keys=True, default=str))
        failed += len(result.failures)
    return 1 if failed else 0


def _cmd_flip(args):
    scheme = _load_scheme(args.scheme)
    try:
        pairs = []
        for chunk in args.pairs.split(","):
            k_text, kp_text = chunk.split(":")
            pairs.append((int(k_text), Fraction(args.mu),
                          int(kp_text), Fraction(args.nu)))
    except (ValueError, TypeError):
        raise ValueError("--pairs expects 'k:kp[,k:kp...]', got %r" % args.pairs)
    report = order_flip_experiment(scheme, pairs, args.n)
    rows = [{"k": r["k"], "mu": str(r["mu"]), "kp": r["kp"], "nu": str(r["nu"]),
             "I_star": r["I_star"], "dev": r["dev"]} for r in report.rows]
    if args.out == "json":
        _write_json({
            "schema": SCHEMA_VERSION,
            "n": report.n,
            "rows": [{k: _json_number(v, args.precision) for k, v in row.items()}
                     for row in rows],
            "median_level": report.median_level,
            "median_I_star": _json_number(report.median_row["I_star"], args.precision),
            "average": _json_number(report.average, args.precision),
            "average_gap": _json_number(report.average_gap, args.precision),
        })
    elif args.out == "csv":
        tail = {"k": report.median_level, "mu": str(report.median_row["mu"]),
                "kp": report.median_level, "nu": str(report.median_row["nu"]),
                "I_star": report.median_row["I_star"], "dev": report.median_row["dev"]}
        _write_csv(rows + [tail], ("k", "mu", "kp", "nu", "I_star", "dev"),
                   args.precision)
    else:
        for row in rows:
            print("mu_%(k)d=%(mu)s, nu_%(kp)d=%(nu)s: I* = %(istar)s, |I*-E| = %(dev)s"
                  % {**row, "istar": _fmt(row["I_star"], args.precision),
                     "dev": _fmt(row["dev"], args.precision)})
        print("median level %d: I* = %s" % (
            report.median_level, _fmt(report.median_row["I_star"], args.precision)))
        print("average of flipped rows = %s (gap from median %s)" % (
            _fmt(report.average, args.precision),
            _fmt(report.average_gap, args.precision)))
    return 0


# --- parser ------------------------------------------------------------------

def _add_scheme_arg(parser):
    parser.add_argument("--scheme", default="cauchy",
                        help="'cauchy' (default), a scheme JSON file, or inline JSON")


def _add_pert_args(parser):
    parser.add_argument("--mu", default=None,
                        help="co-recursion size (rational, e.g. 0.1 or 1/10)")
    parser.add_argument("--k", type=int, default=0,
                        help="co-recursion level (default 0; used when --mu is given)")
    parser.add_argument("--nu", default=None,
                        help="co-dilation factor (positive rational)")
    parser.add_argument("--kp", type=int, default=1,
                        help="co-dilation level (default 1; used when --nu is given)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rii",
        description="Recurrence identities, quadrature tables, and measure "
                    "approximation for perturbed R_II-type schemes.")
    parser.add_argument("--precision", type=int, default=10,
                        help="significant digits for printed floats (default 10)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print a recurrence polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("first", "second", "both"), default="first")
    p.add_argument("--out", choices=("text", "csv", "json"), default="text")
    _add_scheme_arg(p)
    _add_pert_args(p)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("zeros", help="real zeros of P_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol-imag", type=float, default=1e-9, dest="tol_imag")
    p.add_argument("--out", choices=("text", "csv", "json"), default="text")
    _add_scheme_arg(p)
    _add_pert_args(p)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("quad", help="n-point quadrature estimate of an integrand")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--integrand", default="example3",
                   help="builtin id or expression in x (default example3)")
    p.add_argument("--method", choices=("auto", MOMENT, SECOND_KIND), default="auto")
    p.add_argument("--config", default=None,
                   help="ExperimentConfig JSON file (overrides --n and perturbation flags)")
    p.add_argument("--out", choices=("text", "csv", "json"), default=None)
    _add_scheme_arg(p)
    _add_pert_args(p)
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("table", help="recompute a bundled reference table")
    p.add_argument("--id", choices=("t1", "t2", "t3", "t4", "t5", "t6"), required=True)
    p.add_argument("--out", choices=("text", "csv", "json"), default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("measure", help="sample a density approximation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("lagrange", "spline"), default="lagrange")
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--x-min", type=float, default=None, dest="x_min")
    p.add_argument("--x-max", type=float, default=None, dest="x_max")
    p.add_argument("--out", choices=("text", "csv", "json"), default=None)
    _add_scheme_arg(p)
    _add_pert_args(p)
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("check", help="run the randomized identity suites")
    p.add_argument("--suite", choices=tuple(sorted(SUITES)) + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("flip", help="swap co-recursion/co-dilation levels and compare")
    p.add_argument("--pairs", default="3:7,4:6", help="comma-separated k:kp pairs")
    p.add_argument("--mu", default="0.01")
    p.add_argument("--nu", default="1.004")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--out", choices=("text", "csv", "json"), default="text")
    _add_scheme_arg(p)
    p.set_defaults(func=_cmd_flip)

    return parser


def main(argv=None):
    try:
        logging.basicConfig(level=os.environ.get("LOG_LEVEL", "WARNING").upper())
    except ValueError:
        logging.basicConfig(level=logging.WARNING)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RiiError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
