"""Command line front end.

Four subcommands: ``expand`` parses and prints an element (optionally
rewriting it to q-normal form), ``verify`` runs a named suite of identity
checks, ``qbinom`` tabulates deformed binomial coefficients for one row,
and ``negpow`` evaluates the negative-power series for matrices read from
JSON files.

Exit codes: 0 when everything passed, 1 when a verification suite reports
a failing case, 2 for usage or input errors, 3 when a series is requested
outside its certified convergence domain.
"""

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (ContextError, ConvergenceDomainError, NcbinomError,
                     ParseError)
from .freealg import (AlgebraContext, binomial, element_to_json,
                      format_element, format_poly, parse_element)
from .derivops import (application_identities, verify_difference_of_powers,
                       verify_nc_binomial, verify_nc_binomial_double,
                       verify_power_via_derivation, verify_wyss)
from .qrewrite import (QRelation, benaoum_coefficient, gaussian_binomial,
                       normalize, q_pochhammer, verify_q_binomial)
from .unitize import embed, verify_unitized_binomial, verify_unitized_power
from .numbanach import (frob_norm, lu_solve, mat_pow, matrix_from_json,
                        matrix_to_json, negpow_double_sum, negpow_series,
                        scalar_negpow_check, suggest_lambda,
                        verify_exp_conjugation)

SUITES = ("theorem", "corollary", "wyss", "qbinom", "unitized", "expconj",
          "negpow", "all")


@dataclass
class SuiteConfig:
    suite: str
    n_max: Optional[int] = None
    tol: float = 1e-10
    seed: int = 0


@dataclass
class RunReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def passed(self):
        return all(c["passed"] for c in self.cases)

    def counts(self):
        ok = sum(1 for c in self.cases if c["passed"])
        return ok, len(self.cases) - ok

    def to_json(self):
        ok, bad = self.counts()
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "counts": {"pass": ok, "fail": bad},
            "wallTimeMs": self.wall_ms,
            "cases": self.cases,
        }


def _identity_case(report):
    out = report.to_json()
    out["passed"] = report.equal
    return out


def _numeric_case(report):
    out = report.to_json()
    out.setdefault("n", 0)
    return out


def _plain_case(identity, n, params, passed):
    return {"identity": identity, "n": n, "params": params, "passed": passed}


def _random_element(rng, ctx, max_terms=2, max_len=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        word = tuple(rng.choice(ctx.generators) for _ in range(length))
        terms[word] = terms.get(word, 0) + rng.choice([-2, -1, 1, 2])
    return ctx.element(terms)


def _disk_matrix(rng, dim):
    # entries uniform on a square inside the closed unit disk
    re = rng.uniform(-1.0, 1.0, size=(dim, dim))
    im = rng.uniform(-1.0, 1.0, size=(dim, dim))
    return (re + 1j * im) / np.sqrt(2.0)


def _suite_theorem(cfg):
    n_max = cfg.n_max if cfg.n_max is not None else 6
    ctx = AlgebraContext(("a", "b", "c"))
    a, b, c = ctx.gens()
    cases = []
    for n in range(n_max + 1):
        for right, tag in ((b, "b"), (c, "c"), (a, "a")):
            rep = verify_power_via_derivation(a, right, n, {"slot": tag})
            cases.append(_identity_case(rep))
    rng = random.Random(cfg.seed)
    for i in range(2):
        x = _random_element(rng, ctx)
        y = _random_element(rng, ctx)
        rep = verify_power_via_derivation(x, y, min(n_max, 4),
                                          {"case": f"random-{i}"})
        cases.append(_identity_case(rep))
    return cases


def _suite_corollary(cfg):
    n_max = cfg.n_max if cfg.n_max is not None else 5
    ctx = AlgebraContext(("a", "b", "c"))
    a, b, c = ctx.gens()
    cases = []
    for n in range(1, n_max + 1):
        cases.append(_identity_case(
            verify_difference_of_powers(a, b, n, {"pair": "a,b"})))
    for n in range(min(n_max, 4) + 1):
        for third, tag in ((c, "c"), (b, "b"), (a, "a")):
            cases.append(_identity_case(
                verify_nc_binomial(a, b, third, n, {"around": tag})))
        cases.append(_identity_case(
            verify_nc_binomial_double(a, b, c, n, {"around": "c"})))
    for n in range(min(n_max, 3) + 1):
        for rep in application_identities(a, b, c, n):
            cases.append(_identity_case(rep))
    return cases


def _suite_wyss(cfg):
    n_max = cfg.n_max if cfg.n_max is not None else 5
    ctx = AlgebraContext(("a", "b"))
    a, b = ctx.gens()
    cases = [_identity_case(verify_wyss(a, b, n)) for n in range(n_max + 1)]
    rng = random.Random(cfg.seed)
    x = _random_element(rng, ctx)
    y = _random_element(rng, ctx)
    cases.append(_identity_case(
        verify_wyss(x, y, min(n_max, 3), {"case": "random"})))
    return cases


def _suite_qbinom(cfg):
    n_max = cfg.n_max if cfg.n_max is not None else 8
    cases = []
    for n in range(n_max + 1):
        cases.append(_identity_case(verify_q_binomial(n)))
    for n in range(min(n_max, 6) + 1):
        cases.append(_identity_case(verify_q_binomial(n, with_h=True)))
    for n in range(min(n_max + 2, 10) + 1):
        for k in range(n + 1):
            lhs = gaussian_binomial(n, k) * q_pochhammer(k) * q_pochhammer(n - k)
            ok = lhs == q_pochhammer(n)
            cases.append(_plain_case("gaussian-multiplicative", n,
                                     {"k": k}, ok))
    for n in range(n_max + 1):
        ok = True
        for k in range(n + 1):
            if gaussian_binomial(n, k).substitute({"q": 1}) != binomial(n, k):
                ok = False
            if benaoum_coefficient(n, k).substitute({"q": 1, "h": 0}) != binomial(n, k):
                ok = False
        cases.append(_plain_case("classical-limit", n, {}, ok))
    return cases


def _suite_unitized(cfg):
    n_max = cfg.n_max if cfg.n_max is not None else 4
    ctx = AlgebraContext(("a", "b", "c"), ("beta", "gamma"))
    a, b, c = ctx.gens()
    weights = [0, 1, -2, Fraction(3, 5)]
    cases = []
    for n in range(n_max + 1):
        for beta in weights:
            cases.append(_identity_case(verify_unitized_power(a, b, beta, n)))
        ok = (embed(a) ** n).scalar.is_zero or n == 0
        cases.append(_plain_case("embedded-power-scalar", n, {}, ok))
    for n in range(min(n_max, 3) + 1):
        for gamma in weights:
            cases.append(_identity_case(
                verify_unitized_binomial(a, b, c, gamma, n)))
    beta = ctx.param("beta")
    cases.append(_identity_case(
        verify_unitized_power(a, b, beta, 3, params={"beta": "symbolic"})))
    cases.append(_identity_case(
        verify_unitized_power(a, b, beta, 3, alpha=ctx.param("gamma"),
                              params={"alpha": "symbolic", "beta": "symbolic"})))
    return cases


def _suite_expconj(cfg):
    rng = np.random.default_rng(cfg.seed)
    cases = []
    for i in range(8):
        b1 = _disk_matrix(rng, 4)
        b2 = _disk_matrix(rng, 4)
        a = _disk_matrix(rng, 4)
        rep = verify_exp_conjugation(b1, b2, a, tol=cfg.tol)
        case = _numeric_case(rep)
        case["params"]["case"] = i
        cases.append(case)
    return cases


def _suite_negpow(cfg):
    cases = []
    for n in (1, 2, 3):
        got = scalar_negpow_check(2.0, 1.0, n, 80)
        want = 3.0 ** (-n)
        cases.append(_plain_case("scalar-negative-power", n,
                                 {"lambda": 2.0, "z": 1.0},
                                 abs(got - want) <= cfg.tol))

    a = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
    b = np.eye(2, dtype=complex)
    res = negpow_series(a, b, 1, 2.0, tol=cfg.tol)
    exact = np.array([[0.5, -0.25], [0.0, 0.5]], dtype=complex)
    ok = (res.converged and res.terms_used == 2
          and frob_norm(res.value - exact) <= 1e-12)
    cases.append(_plain_case("negative-power-nilpotent", 1,
                             {"termsUsed": res.terms_used}, ok))

    rng = np.random.default_rng(cfg.seed)
    lam = 2.0
    for i in range(4):
        dim = int(rng.integers(2, 5))
        n = int(rng.integers(1, 4))
        r = _disk_matrix(rng, dim)
        r = r / max(1.0, frob_norm(r))
        s = _disk_matrix(rng, dim)
        s = s / max(1.0, frob_norm(s))
        amat = 0.15 * r + 0.05 * s
        bmat = lam * np.eye(dim, dtype=complex) + 0.15 * r - 0.05 * s
        total = amat + bmat
        series = negpow_series(amat, bmat, n, lam, tol=1e-12)
        oracle = lu_solve(mat_pow(total, n), np.eye(dim, dtype=complex))
        rel = frob_norm(series.value - oracle) / max(frob_norm(oracle), 1e-300)
        cases.append(_plain_case("negative-power-series", n,
                                 {"case": i, "dim": dim},
                                 series.converged and rel <= 1e-8))
        regrouped = negpow_double_sum(amat, bmat, n, lam, tol=1e-12)
        agree = frob_norm(regrouped.value - series.value)
        agree /= max(frob_norm(series.value), 1e-300)
        cases.append(_plain_case("negative-power-regrouped", n,
                                 {"case": i, "dim": dim},
                                 regrouped.converged and agree <= 1e-9))

    try:
        negpow_series(a, b, 1, 0.5, tol=cfg.tol)
        gated = False
    except ConvergenceDomainError:
        gated = True
    cases.append(_plain_case("negative-power-gate", 1, {"lambda": 0.5}, gated))
    return cases


_SUITE_RUNNERS = {
    "theorem": _suite_theorem,
    "corollary": _suite_corollary,
    "wyss": _suite_wyss,
    "qbinom": _suite_qbinom,
    "unitized": _suite_unitized,
    "expconj": _suite_expconj,
    "negpow": _suite_negpow,
}


def run_suite(cfg):
    """Run one named suite (or all of them) and collect a RunReport."""
    start = time.perf_counter()
    names = [s for s in SUITES if s != "all"] if cfg.suite == "all" else [cfg.suite]
    report = RunReport(suite=cfg.suite, seed=cfg.seed)
    for name in names:
        for case in _SUITE_RUNNERS[name](cfg):
            case["suite"] = name
            report.cases.append(case)
    report.wall_ms = (time.perf_counter() - start) * 1000.0
    return report


def _params_text(params):
    return " ".join(f"{k}={v}" for k, v in sorted(params.items(), key=str))


def _print_report(report, output):
    if output == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
        return
    for case in report.cases:
        status = "PASS" if case["passed"] else "FAIL"
        extra = _params_text(case.get("params", {}))
        line = f"{status}  {case['identity']}  n={case.get('n', '-')}"
        if extra:
            line += "  " + extra
        print(line)
    ok, bad = report.counts()
    print(f"suite {report.suite}: {ok} passed, {bad} failed "
          f"({report.wall_ms:.1f} ms)")


def _cmd_verify(args):
    cfg = SuiteConfig(suite=args.suite, n_max=args.n_max, tol=args.tol,
                      seed=args.seed)
    report = run_suite(cfg)
    _print_report(report, args.output)
    return 0 if report.passed else 1


def _split_names(text):
    return tuple(name.strip() for name in text.split(",") if name.strip())


def _cmd_expand(args):
    ctx = AlgebraContext(_split_names(args.generators),
                         _split_names(args.parameters))
    element = parse_element(args.expr, ctx)
    if args.q_normalize:
        x, y = args.q_normalize
        rel = QRelation(ctx, x, y, "q", "h" if args.with_h else None)
        element = normalize(element, rel).element
    if args.output == "json":
        out = {"text": format_element(element),
               "element": element_to_json(element)}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(format_element(element))
    return 0


def _cmd_qbinom(args):
    coefs = []
    for k in range(args.n + 1):
        if args.with_h:
            coefs.append(format_poly(benaoum_coefficient(args.n, k), ("q", "h")))
        else:
            coefs.append(format_poly(gaussian_binomial(args.n, k), ("q",)))
    report = verify_q_binomial(args.n, with_h=args.with_h)
    if args.output == "json":
        out = {"n": args.n, "withH": args.with_h, "coefficients": coefs,
               "identity": report.to_json()}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for k, text in enumerate(coefs):
            print(f"k={k}: {text}")
        print(f"identity: {'PASS' if report.equal else 'FAIL'}")
    return 0 if report.equal else 1


def _load_matrix_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))


def _cmd_negpow(args):
    a = _load_matrix_file(args.a)
    b = _load_matrix_file(args.b)
    lam = args.lam if args.lam is not None else suggest_lambda(a, b)
    runner = negpow_double_sum if args.method == "double" else negpow_series
    result = runner(a, b, args.n, lam, tol=args.tol, max_terms=args.max_terms)
    out = {
        "lambda": [lam.real, lam.imag],
        "n": args.n,
        "method": args.method,
        "converged": result.converged,
        "termsUsed": result.terms_used,
        "tailBound": result.tail_bound,
        "value": matrix_to_json(result.value),
    }
    if args.check:
        dim = a.shape[0]
        oracle = lu_solve(mat_pow(a + b, args.n), np.eye(dim, dtype=complex))
        rel = frob_norm(result.value - oracle) / max(frob_norm(oracle), 1e-300)
        out["check"] = {"discrepancy": rel}
    if args.output == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(f"lambda = {lam}")
        print(f"converged = {result.converged}  termsUsed = {result.terms_used}  "
              f"tailBound = {result.tail_bound:.3e}")
        with np.printoptions(precision=12, suppress=False):
            print(result.value)
        if args.check:
            print(f"check discrepancy vs LU solve = {out['check']['discrepancy']:.3e}")
    return 0 if result.converged else 1


def _parse_complex(text):
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected RE or RE,IM with numeric parts") from None
    if len(parts) == 1:
        return complex(parts[0], 0.0)
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise argparse.ArgumentTypeError("expected RE or RE,IM")


def _add_output_arg(parser):
    parser.add_argument("--output", choices=("text", "json"), default="text",
                        help="report format (default: text)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ncbinom",
        description="Non-commutative binomial identities, exact and numeric.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser(
        "expand", help="parse, expand, and print an algebra expression")
    p_expand.add_argument("expr", help="expression, e.g. '(a+b)^2'")
    p_expand.add_argument("--generators", default="a,b,c",
                          help="comma-separated generator names")
    p_expand.add_argument("--parameters", default="q,h",
                          help="comma-separated parameter names")
    p_expand.add_argument("--q-normalize", nargs=2, metavar=("X", "Y"),
                          help="rewrite X*Y -> q*Y*X before printing")
    p_expand.add_argument("--with-h", "--h", dest="with_h",
                          action="store_true",
                          help="add the h*Y^2 branch to the rewrite rule")
    _add_output_arg(p_expand)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("--suite", choices=SUITES, required=True)
    p_verify.add_argument("--n-max", type=int, default=None,
                          help="cap the exponent range (suite default otherwise)")
    p_verify.add_argument("--tol", type=float, default=1e-10,
                          help="tolerance for numeric checks (default 1e-10)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for randomized cases (default 0)")
    _add_output_arg(p_verify)

    p_qbinom = sub.add_parser(
        "qbinom", help="tabulate one row of deformed binomial coefficients")
    p_qbinom.add_argument("--n", type=int, required=True)
    p_qbinom.add_argument("--with-h", dest="with_h", action="store_true",
                          help="use the (q, h)-deformed coefficients")
    _add_output_arg(p_qbinom)

    p_negpow = sub.add_parser(
        "negpow", help="evaluate (a+b)^(-n) as a certified series")
    p_negpow.add_argument("--a", required=True, metavar="FILE",
                          help="JSON matrix file for a")
    p_negpow.add_argument("--b", required=True, metavar="FILE",
                          help="JSON matrix file for b")
    p_negpow.add_argument("--n", type=int, required=True)
    p_negpow.add_argument("--lambda", dest="lam", type=_parse_complex,
                          default=None, metavar="RE,IM",
                          help="shift (default: trace(a+b)/dim)")
    p_negpow.add_argument("--tol", type=float, default=1e-10)
    p_negpow.add_argument("--max-terms", type=int, default=500)
    p_negpow.add_argument("--method", choices=("series", "double"),
                          default="series",
                          help="direct series or derivation regrouping")
    p_negpow.add_argument("--check", action="store_true",
                          help="compare against an LU-solve oracle")
    _add_output_arg(p_negpow)
    return parser


_COMMANDS = {
    "expand": _cmd_expand,
    "verify": _cmd_verify,
    "qbinom": _cmd_qbinom,
    "negpow": _cmd_negpow,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConvergenceDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ContextError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NcbinomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
