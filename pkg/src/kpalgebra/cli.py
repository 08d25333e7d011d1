"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import tensors
from .curvature import Curvature
from .errors import KPError, ParseError, ShapeMismatch
from .field import RatFunc
from .geometry import TangentGeometry
from .levelset import normal_form
from .parsing import parse_expr
from .poisson import CheckReport
from .problem import ProblemFile, load_problem
from .spectral import assemble, clusters, gap_check, nondegeneracy_check, spectrum
from .state import SphereState, positivity_surrogate, trace_inequality_margin

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", help="JSON problem file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--state", choices=["sphere"], default="sphere")
    sampling.add_argument("--r2", type=_fraction, help="sphere radius squared")
    sampling.add_argument("--samples", type=int, default=100)
    sampling.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="kpalgebra",
                                     description="Exact almost Kahler-Poisson algebra checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate the axioms")
    p.add_argument("--no-kahler", action="store_true", help="skip the Kahler condition")

    p = sub.add_parser("curvature", parents=[common], help="curvature of the structure")
    p.add_argument("--X", help="first vector, comma separated expressions")
    p.add_argument("--Y", help="second vector, comma separated expressions")
    p.add_argument("--full", action="store_true", help="print every nonzero component")
    p.add_argument("--checks", action="store_true", help="run the Bianchi/symmetry suite")

    p = sub.add_parser("apply", parents=[common], help="apply an operator to an expression")
    op = p.add_mutually_exclusive_group(required=True)
    op.add_argument("--bracket", nargs=2, metavar=("U", "V"))
    op.add_argument("--gradient", metavar="U")
    op.add_argument("--divergence", metavar="X", help="comma separated components")
    op.add_argument("--laplacian", metavar="U")

    p = sub.add_parser("spectrum", parents=[common, sampling], help="truncated Laplace spectrum")
    p.add_argument("--degree", type=int, default=3)

    p = sub.add_parser("gap", parents=[common, sampling], help="eigenvalue gap bound")
    p.add_argument("--degree", type=int, default=3)
    return parser


# helpers

def _load(args) -> ProblemFile | None:
    if not args.problem:
        return None
    return load_problem(args.problem)


def _require_problem(args) -> ProblemFile:
    problem = _load(args)
    if problem is None:
        raise InputError(f"{args.command} needs --problem")
    return problem


def _vector(text: str, problem: ProblemFile) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != problem.m:
        raise ShapeMismatch(f"vector needs {problem.m} components, got {len(parts)}")
    return tensors.vector([parse_expr(p, problem.generators) for p in parts], problem.m)


def _mod_c(u, problem: ProblemFile):
    """Normal form mod C as a string, or None without a level set."""
    L = problem.level()
    if L is None:
        return None
    nf = normal_form(u, L)
    if nf.den.is_constant():
        return nf.num.scale(1 / nf.den.constant_coeff()).format(problem.generators)
    return nf.format(problem.generators)


def _emit(args, lines: list[str], payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print("\n".join(lines))


def _validated_geometry(problem: ProblemFile) -> TangentGeometry:
    S = problem.structure()
    S.validate()
    return TangentGeometry(S)


# subcommands

def cmd_check(args) -> int:
    problem = _require_problem(args)
    S = problem.structure()
    reports = S.validate(kahler=not args.no_kahler)
    names = problem.generators
    shown = [r for r in reports if r.name != "gamma2" or not r.ok]
    lines = []
    for r in shown:
        lines.extend(r.lines(names))
    gamma = next(r for r in reports if r.name == "gamma2")
    if gamma.ok:
        lines.append(f"gamma^2 = {S.gamma2.format(names)}")
    ok = all(r.ok for r in reports)
    _emit(args, lines, {"ok": ok, "checks": [r.to_dict(names) for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_curvature(args) -> int:
    problem = _require_problem(args)
    geom = _validated_geometry(problem)
    names = problem.generators
    curv = Curvature(geom)
    lines = [f"n = {geom.n}", f"scalar = {curv.scalar.format(names)}"]
    payload: dict = {"n": geom.n, "scalar": curv.scalar.format(names)}
    nf = _mod_c(curv.scalar, problem)
    if nf is not None:
        lines.append(f"scalar = {nf} (mod C)")
        payload["scalar_mod_C"] = nf
    if args.X or args.Y:
        if not (args.X and args.Y):
            raise InputError("--X and --Y go together")
        X = geom.project(_vector(args.X, problem))
        Y = geom.project(_vector(args.Y, problem))
        K = curv.sectional(X, Y)
        lines.append(f"sectional = {K.format(names)}")
        payload["sectional"] = K.format(names)
        nf = _mod_c(K, problem)
        if nf is not None:
            lines.append(f"sectional = {nf} (mod C)")
            payload["sectional_mod_C"] = nf
    else:
        K = curv.sectional_constant()
        text = "varies with the plane" if K is None else K.format(names)
        lines.append(f"sectional (spanning pairs) = {text}")
        payload["sectional"] = None if K is None else text
    ok = True
    if args.checks:
        reports = curv.checks()
        for r in reports:
            lines.extend(r.lines(names))
        payload["checks"] = [r.to_dict(names) for r in reports]
        ok = all(r.ok for r in reports)
    if args.full:
        entries = tensors.nonzero_entries(curv.R)
        comps = [(" ".join(str(k + 1) for k in idx), v.format(names)) for idx, v in entries]
        lines.extend(f"{idx} : {v}" for idx, v in comps)
        payload["R"] = [{"index": idx, "value": v} for idx, v in comps]
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_apply(args) -> int:
    problem = _require_problem(args)
    names = problem.generators
    S = problem.structure()

    def expr(text):
        return parse_expr(text, names)

    if args.bracket:
        result = S.bracket(expr(args.bracket[0]), expr(args.bracket[1]))
        label = "bracket"
    else:
        geom = _validated_geometry(problem)
        if args.gradient:
            result, label = geom.gradient(expr(args.gradient)), "gradient"
        elif args.divergence:
            result, label = geom.divergence(_vector(args.divergence, problem)), "divergence"
        else:
            result, label = geom.laplacian(expr(args.laplacian)), "laplacian"

    items = list(result) if isinstance(result, np.ndarray) else [result]
    raw = [u.format(names) for u in items]
    reduced = [_mod_c(u, problem) for u in items]
    lines = [f"{label} = {r}" for r in raw]
    if reduced[0] is not None:
        lines.extend(f"{r} (mod C)" for r in reduced)
    payload = {"operation": label, "value": raw if len(raw) > 1 else raw[0]}
    if reduced[0] is not None:
        payload["mod_C"] = reduced if len(reduced) > 1 else reduced[0]
    _emit(args, lines, payload)
    return EXIT_OK


def _spectral_problem(args):
    problem = _load(args)
    if problem is None:
        state = SphereState(args.r2 if args.r2 is not None else 1)
    else:
        state = problem.sphere_state(args.r2)
    if args.degree < 0:
        raise InputError("--degree must be >= 0")
    return assemble(args.degree, state)


def _spectrum_lines(sp) -> tuple[list[str], list[dict]]:
    eig = spectrum(sp)
    groups = clusters(-eig)
    lines = [f"basis size = {sp.size}", "eigenvalues of -Lap (multiplicity):"]
    lines.extend(f"  {v:.12g} (x{k})" for v, k in groups)
    return lines, [{"value": v, "multiplicity": k} for v, k in groups]


def cmd_spectrum(args) -> int:
    sp = _spectral_problem(args)
    lines, groups = _spectrum_lines(sp)
    gap = gap_check(sp)
    lam = "none" if gap.lambda1 is None else f"{gap.lambda1:.12g}"
    residual = max(sp.residuals)
    lines += [f"lambda1 = {lam}", f"bound = {gap.bound:.12g}",
              f"max residual = {residual:.3e}", "PASS" if gap.satisfied else "FAIL"]
    _emit(args, lines, {"r2": str(sp.state.r2), "degree": sp.degree, "basis_size": sp.size,
                        "eigenvalues": groups, "max_residual": residual, **gap.to_dict()})
    return EXIT_OK if gap.satisfied else EXIT_FAIL


def cmd_gap(args) -> int:
    sp = _spectral_problem(args)
    state = sp.state
    lines = [f"kappa = {sp.kappa} (Ricci = kappa * D mod C)", f"n = {sp.n}"]
    gap = gap_check(sp)
    nd = nondegeneracy_check(sp)
    points = state.sample_points(args.samples, args.seed)
    pos = positivity_surrogate(state.structure.gamma2, points, state.levelset)
    margin = min(trace_inequality_margin(state.geometry, RatFunc(b), points)
                 for b in sp.basis)
    reports = [
        CheckReport("gap", gap.satisfied, detail=gap.line().split(": ", 1)[1]),
        CheckReport("non-degenerate", nd.ok,
                    detail=f"max |<grad u,grad u> + lam <u,u>| = {nd.worst:.3e}"),
        CheckReport("gamma2-positive", pos.nonnegative,
                    detail=f"min {pos.minimum:.6g} over {pos.evaluated} points"),
        CheckReport("trace-inequality", margin >= -1e-9,
                    detail=f"min margin {margin:.3e} over basis, {len(points)} points"),
    ]
    for r in reports:
        lines.extend(r.lines())
    ok = all(r.ok for r in reports)
    _emit(args, lines, {"ok": ok, **gap.to_dict(),
                        "checks": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"check": cmd_check, "curvature": cmd_curvature, "apply": cmd_apply,
            "spectrum": cmd_spectrum, "gap": cmd_gap}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ShapeMismatch, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KPError as exc:
        print(f"FAIL {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
