"""Poisson bivectors on m generators and the almost Kahler-Poisson axioms.

A structure is fixed by the matrix ``P[i, j] = {x_i, x_j}``; the bracket of
arbitrary elements follows from the derivation rule
``{u, v} = P[i, j] d_i(u) d_j(v)``.  Jacobi and the almost Kahler-Poisson
relation are therefore checked on generators only.

Validation is staged (Jacobi, gamma^2, almost-KP, dimension).  A stage is
only run when every earlier stage passed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import tensors
from .errors import (DegeneratePoisson, Gamma2Mismatch, NonIntegerDimension, NotAntisymmetric,
                     NotHermitian, ValidationOrderError)
from .field import RatFunc, default_names


@dataclass
class CheckReport:
    """Outcome of one exact identity check.

    ``failures`` lists ``(index_tuple, residual)`` pairs with 0-based indices.
    """

    name: str
    ok: bool
    failures: list[tuple[tuple[int, ...], RatFunc]] = field(default_factory=list)
    detail: str = ""
    skipped: bool = False

    @property
    def worst(self) -> tuple[tuple[int, ...], RatFunc] | None:
        if not self.failures:
            return None
        return max(self.failures, key=lambda f: f[1].term_count())

    def lines(self, names: Sequence[str] | None = None, limit: int = 10) -> list[str]:
        status = "SKIP" if self.skipped else ("PASS" if self.ok else "FAIL")
        head = f"{status} {self.name}"
        if self.detail:
            head += f": {self.detail}"
        out = [head]
        for idx, residual in self.failures[:limit]:
            label = " ".join(str(i + 1) for i in idx)
            out.append(f"  ({label}) residual {residual.format(names)}")
        if len(self.failures) > limit:
            out.append(f"  ... {len(self.failures) - limit} more")
        return out

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "skipped": self.skipped,
            "detail": self.detail,
            "failures": [{"index": [i + 1 for i in idx], "residual": r.format(names)}
                         for idx, r in self.failures],
        }

    def __bool__(self):
        return self.ok


class PoissonStructure:
    """Poisson bivector ``P`` on ``m`` generators.

    ``P`` must be antisymmetric and hermitian entrywise.  ``gamma2_hint`` is
    an independently derived characteristic function; when given it must
    agree exactly with the trace formula.
    """

    def __init__(self, P, names: Sequence[str] | None = None, gamma2_hint: RatFunc | None = None):
        P = np.asarray(P, dtype=object)
        if P.ndim != 2 or P.shape[0] != P.shape[1]:
            raise ValueError(f"bivector must be square, got shape {P.shape}")
        m = P.shape[0]
        nvars = next((v.nvars for v in P.flat if isinstance(v, RatFunc)), m)
        if nvars != m:
            raise ValueError(f"bivector is {m}x{m} but entries live in {nvars} variables")
        self.m = m
        self.P = tensors.tensor(P, m)
        self.names = list(names) if names is not None else default_names(m)
        if len(self.names) != m:
            raise ValueError("one name per generator required")
        self.gamma2_hint = gamma2_hint
        for i in range(m):
            for j in range(i, m):
                if not self.P[i, j].equals(-self.P[j, i]):
                    raise NotAntisymmetric(
                        f"P[{i + 1},{j + 1}] = {self.P[i, j].format(self.names)} but "
                        f"P[{j + 1},{i + 1}] = {self.P[j, i].format(self.names)}")
                if not self.P[i, j].star().equals(self.P[i, j]):
                    raise NotHermitian(f"P[{i + 1},{j + 1}] is not hermitian")
        self.reports: list[CheckReport] = []
        self._validated = False

    def __repr__(self):
        return f"PoissonStructure(m={self.m}, names={self.names})"

    def gens(self) -> list[RatFunc]:
        return [RatFunc.gen(self.m, i) for i in range(self.m)]

    def gradient(self, u: RatFunc) -> list[RatFunc]:
        return [u.partial(i) for i in range(self.m)]

    def bracket(self, u: RatFunc, v: RatFunc) -> RatFunc:
        du, dv = self.gradient(u), self.gradient(v)
        total = RatFunc.zero(self.m)
        for i, j in itertools.product(range(self.m), repeat=2):
            p = self.P[i, j]
            if p.is_zero() or du[i].is_zero() or dv[j].is_zero():
                continue
            total = total + p * du[i] * dv[j]
        return total

    def bracket_gen(self, i: int, v: RatFunc) -> RatFunc:
        """``{x_i, v}`` without differentiating the generator."""
        total = RatFunc.zero(self.m)
        for j in range(self.m):
            p = self.P[i, j]
            if p.is_zero():
                continue
            dv = v.partial(j)
            if not dv.is_zero():
                total = total + p * dv
        return total

    def jacobi_check(self) -> CheckReport:
        failures = []
        for i, j, k in itertools.combinations(range(self.m), 3):
            res = (self.bracket_gen(i, self.P[j, k]) + self.bracket_gen(j, self.P[k, i])
                   + self.bracket_gen(k, self.P[i, j]))
            if not res.is_zero():
                failures.append(((i, j, k), res))
        return CheckReport("jacobi", not failures, failures)

    @cached_property
    def _powers(self) -> tuple[np.ndarray, np.ndarray]:
        P2 = self.P @ self.P
        return P2, P2 @ P2

    @cached_property
    def gamma2(self) -> RatFunc:
        """Characteristic function ``-Tr(P^4) / Tr(P^2)``."""
        P2, P4 = self._powers
        tr2 = tensors.trace(P2)
        if tr2.is_zero():
            raise DegeneratePoisson("Tr P^2 = 0; gamma^2 is undefined")
        g2 = -tensors.trace(P4) / tr2
        if g2.is_zero():
            raise DegeneratePoisson("gamma^2 vanishes")
        if not g2.star().equals(g2):
            raise NotHermitian(f"gamma^2 = {g2.format(self.names)} is not hermitian")
        if self.gamma2_hint is not None and not g2.equals(self.gamma2_hint):
            raise Gamma2Mismatch(
                f"trace formula gives {g2.format(self.names)}, "
                f"supplied gamma^2 is {self.gamma2_hint.format(self.names)}")
        return g2

    def gamma_squared(self) -> RatFunc:
        return self.gamma2

    def almost_kp_check(self) -> CheckReport:
        P2, _ = self._powers
        residual = P2 @ self.P + self.P * self.gamma2
        failures = tensors.nonzero_entries(residual)
        return CheckReport("almost-kp", not failures, failures)

    @cached_property
    def dimension(self) -> int:
        """Geometric dimension ``-Tr(P^2) / gamma^2``."""
        P2, _ = self._powers
        ratio = -tensors.trace(P2) / self.gamma2
        if not ratio.is_constant():
            raise NonIntegerDimension(f"-Tr P^2 / gamma^2 = {ratio.format(self.names)} "
                                      "is not constant")
        value = ratio.constant_value()
        if getattr(value, "denominator", None) != 1 or value <= 0:
            raise NonIntegerDimension(f"-Tr P^2 / gamma^2 = {value} is not a positive integer")
        return int(value)

    def geometric_dimension(self) -> int:
        return self.dimension

    def kahler_condition_check(self) -> CheckReport:
        """``{x_i, {x_j, x_k}} P_jl P_km = 1/2 {x_i, gamma^2} P_lm`` for all i, l, m."""
        m = self.m
        failures = []
        half = RatFunc.const(m, 1) / 2
        for i in range(m):
            Q = np.empty((m, m), dtype=object)
            for j, k in itertools.product(range(m), repeat=2):
                Q[j, k] = self.bracket_gen(i, self.P[j, k])
            lhs = self.P.T @ Q @ self.P
            rhs = self.P * (half * self.bracket_gen(i, self.gamma2))
            for (l, mm), res in tensors.differences(lhs, rhs):
                failures.append(((i, l, mm), res))
        return CheckReport("kahler", not failures, failures)

    def validate(self, kahler: bool = False) -> list[CheckReport]:
        """Run the staged checks; returns one report per stage.

        Stages after a failure are reported as skipped.  On success the
        structure is marked validated and ``gamma2``/``dimension`` are cached.
        """
        reports = []
        failed = False

        def stage(name, fn):
            nonlocal failed
            if failed:
                reports.append(CheckReport(name, False, skipped=True, detail="earlier stage failed"))
                return
            try:
                rep = fn()
            except (DegeneratePoisson, NonIntegerDimension, Gamma2Mismatch, NotHermitian) as exc:
                rep = CheckReport(name, False, detail=f"{type(exc).__name__}: {exc}")
            reports.append(rep)
            failed = not rep.ok

        stage("jacobi", self.jacobi_check)
        stage("gamma2", lambda: CheckReport("gamma2", True, detail=self.gamma2.format(self.names)))
        stage("almost-kp", self.almost_kp_check)
        stage("dimension", lambda: CheckReport("dimension", True, detail=f"n={self.dimension}"))
        self._validated = not failed
        if kahler:
            stage("kahler", self.kahler_condition_check)
        self.reports = reports
        return reports

    @property
    def validated(self) -> bool:
        return self._validated

    def require_validated(self):
        if not self._validated:
            self.validate()
        if not self._validated:
            bad = next(r for r in self.reports if not r.ok)
            raise ValidationOrderError(
                f"structure failed validation at stage {bad.name!r}; "
                "geometric operations are unavailable")


def flat_structure(n: int, p: int, gamma=1) -> PoissonStructure:
    """Constant bivector on p1..pn, q1..qn, n1..np with {p_a, q_b} = delta_ab * gamma."""
    m = 2 * n + p
    P = tensors.zeros(m, 2)
    for a in range(n):
        P[a, n + a] = RatFunc.const(m, gamma)
        P[n + a, a] = RatFunc.const(m, -gamma)
    names = ([f"p{a + 1}" for a in range(n)] + [f"q{a + 1}" for a in range(n)]
             + [f"n{A + 1}" for A in range(p)])
    gamma = RatFunc.const(m, gamma)
    return PoissonStructure(P, names, gamma2_hint=gamma * gamma)


def bracket(u: RatFunc, v: RatFunc, S: PoissonStructure) -> RatFunc:
    return S.bracket(u, v)


def jacobi_check(S: PoissonStructure) -> CheckReport:
    return S.jacobi_check()


def gamma_squared(S: PoissonStructure) -> RatFunc:
    return S.gamma2


def almost_kp_check(S: PoissonStructure) -> CheckReport:
    return S.almost_kp_check()


def geometric_dimension(S: PoissonStructure) -> int:
    return S.dimension


def kahler_condition_check(S: PoissonStructure) -> CheckReport:
    return S.kahler_condition_check()
