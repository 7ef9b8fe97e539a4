"""Command-line interface; every command reads and writes JSON.

Exit codes: 0 success/pass, 1 usage or parse error, 2 inconsistent
classification, 3 degenerate input, 4 verification suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import jsonio
from .elko import Momentum, dual_norm, elko, elko_family
from .errors import ImmirziUndefined, InconsistentCovariants, ZeroSpinor
from .forms import eh_density, eh_term, ep_density, ep_term, holst_value, immirzi, qsl_curvature_term
from .lounesto import DEFAULT_TOL, classify
from .mapping import mapping_report
from .spinors import bilinears, charge_conjugate
from .verify import SUITE_NAMES, random_curvature, random_spinor, run_all, run_suite, sample_rngs

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_DEGENERATE, EXIT_FAILED = 0, 1, 2, 3, 4
TOL_ENV = "SPINOR_FORGE_TOL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={raw!r} is not a number") from None


def _tol(args) -> float:
    tol = args.tol if args.tol is not None else _default_tol()
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    return tol


def _read_json(path: str | None):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}") from None


def _read_spinor(path):
    try:
        return jsonio.spinor_from_json(_read_json(path))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj) -> None:
    sys.stdout.write(jsonio.dumps(obj) + "\n")


def cmd_classify(args) -> int:
    psi = _read_spinor(args.input)
    try:
        result = classify(psi, _tol(args))
    except ZeroSpinor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InconsistentCovariants as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": "inconsistent-covariants", "zero_flags": exc.zero_flags})
        return EXIT_INCONSISTENT
    _emit(result.as_dict())
    return EXIT_OK


def cmd_elko(args) -> int:
    try:
        mom = Momentum(args.m, args.p, args.theta, args.phi)
        lam = elko(mom, args.type, args.pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = jsonio.elko_to_json(lam)
    if args.verify:
        fam = elko_family(mom)
        c = charge_conjugate(lam.psi)
        ev = complex(np.vdot(lam.psi, c) / np.vdot(lam.psi, lam.psi))
        cls = classify(lam.psi, _tol(args))
        out["verification"] = {
            "c_eigenvalue": [ev.real, ev.imag],
            "c_residual": float(np.linalg.norm(c - np.sign(ev.real) * lam.psi) / np.linalg.norm(lam.psi)),
            "class": int(cls.klass),
            "name": cls.klass.label,
            "dual_norms": {
                f"{ct}{pr}": [dual_norm(x, fam).real, dual_norm(x, fam).imag]
                for (ct, pr), x in fam.items()
            },
        }
    _emit(out)
    return EXIT_OK


def cmd_map_check(args) -> int:
    psi = _read_spinor(args.input)
    try:
        report = mapping_report(psi, _tol(args))
    except ZeroSpinor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    _emit(report)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    tol = args.tol
    if args.suite == "all":
        report = run_all(args.seed, args.samples, tol)
        passed = report["passed"]
    else:
        rep = run_suite(args.suite, args.seed, args.samples, tol)
        report, passed = rep.as_dict(), rep.passed
    _emit(report)
    return EXIT_OK if passed else EXIT_FAILED


def _actions_inputs(args):
    if args.random:
        rng = sample_rngs(args.seed, 1)[0]
        return random_spinor(rng), random_curvature(rng)
    obj = _read_json(args.input)
    if not isinstance(obj, dict):
        raise UsageError("actions input must be a JSON object")
    try:
        spinor_obj = obj.get("spinor", obj)
        curv_obj = obj.get("curvature", obj)
        return jsonio.spinor_from_json(spinor_obj), jsonio.curvature_from_json(curv_obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_actions(args) -> int:
    psi, om = _actions_inputs(args)
    tol = _tol(args)
    try:
        cls = classify(psi, tol)
    except ZeroSpinor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InconsistentCovariants:
        cls = None
    cov = bilinears(psi)
    try:
        imm = immirzi(psi, tol)
    except ImmirziUndefined:
        imm = None
    _emit({
        "class": None if cls is None else int(cls.klass),
        "sigma": cov.sigma,
        "chi": cov.chi,
        "eh": eh_density(om),
        "ep": ep_density(om),
        "eh_part": eh_term(om),
        "ep_part": ep_term(om),
        "holst": holst_value(psi, om),
        "qsl": qsl_curvature_term(psi, om),
        "immirzi": imm,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spinor-forge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="Lounesto class of a spinor")
    c.add_argument("input", nargs="?", help="spinor JSON file (default: stdin)")
    c.add_argument("--tol", type=float, default=None)
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("elko", help="construct an ELKO spinor")
    e.add_argument("--type", choices=["S", "A"], default="S")
    e.add_argument("--pair", choices=["-+", "+-"], default="-+")
    e.add_argument("--m", type=float, default=1.0)
    e.add_argument("--p", type=float, default=0.0)
    e.add_argument("--theta", type=float, default=0.0)
    e.add_argument("--phi", type=float, default=0.0)
    e.add_argument("--verify", action="store_true")
    e.add_argument("--tol", type=float, default=None)
    e.set_defaults(func=cmd_elko)

    m = sub.add_parser("map-check", help="Dirac-to-ELKO mapping residuals")
    m.add_argument("input", nargs="?", help="spinor JSON file (default: stdin)")
    m.add_argument("--tol", type=float, default=None)
    m.set_defaults(func=cmd_map_check)

    v = sub.add_parser("verify", help="run a seeded identity sweep")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--tol", type=float, default=None)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("actions", help="EH, EP and Holst densities for a spinor and curvature")
    a.add_argument("input", nargs="?", help="JSON with 'spinor' and 'curvature' (default: stdin)")
    a.add_argument("--random", action="store_true", help="draw spinor and curvature from --seed")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--tol", type=float, default=None)
    a.set_defaults(func=cmd_actions)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
