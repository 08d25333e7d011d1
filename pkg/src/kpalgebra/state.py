"""Exact tracial state on the sphere x^2 + y^2 + z^2 = r2.

The state is integration against surface measure.  Monomial moments are
closed-form rational multiples of pi:

    int x^2p y^2q z^2s dS = 4 pi r2^(p+q+s+1) (2p-1)!! (2q-1)!! (2s-1)!! / (2(p+q+s)+1)!!

and vanish when any exponent is odd.  Values are kept as ``PiMultiple``
(exact coefficient times a formal pi), so ratios of integrals are exact
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import NonPolynomialRepresentative, PoleAtPoint
from .field import GaussRat, RatFunc, as_coeff, canonical
from .geometry import TangentGeometry
from .levelset import LevelSet, surface_structure


@dataclass(frozen=True)
class PiMultiple:
    """The exact number ``coeff * pi``."""

    coeff: object

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_coeff(self.coeff))

    def __repr__(self):
        return f"PiMultiple({self.coeff})"

    def __str__(self):
        if not self.coeff:
            return "0"
        c = self.coeff
        if c == 1:
            return "pi"
        if isinstance(c, GaussRat):
            return f"({c})*pi"
        return f"{c}*pi"

    def __add__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff + other.coeff)
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PiMultiple(-self.coeff)

    def __sub__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff - other.coeff)
        return NotImplemented

    def __mul__(self, scalar):
        try:
            return PiMultiple(self.coeff * as_coeff(scalar))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiMultiple):
            return canonical(self.coeff / other.coeff)
        return PiMultiple(self.coeff / as_coeff(other))

    def conjugate(self) -> PiMultiple:
        c = self.coeff
        return PiMultiple(c.conjugate() if isinstance(c, GaussRat) else c)

    def is_real(self) -> bool:
        return not isinstance(self.coeff, GaussRat)

    def __eq__(self, other):
        if isinstance(other, PiMultiple):
            return self.coeff == other.coeff
        if other == 0:
            return not self.coeff
        return NotImplemented

    def __hash__(self):
        return hash(("pi", self.coeff))

    def __ge__(self, other):
        if other != 0 or not self.is_real():
            return NotImplemented
        return self.coeff >= 0

    def __gt__(self, other):
        if other != 0 or not self.is_real():
            return NotImplemented
        return self.coeff > 0

    def __float__(self):
        return float(self.coeff) * np.pi

    def __complex__(self):
        return complex(self.coeff) * np.pi


def _double_factorial_odd(k: int) -> int:
    """(2k - 1)!! with (-1)!! = 1."""
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


def sphere_moment(e: tuple[int, int, int], r2=1) -> PiMultiple:
    """Surface integral of x^a y^b z^c over the sphere of radius sqrt(r2)."""
    if any(k % 2 for k in e):
        return PiMultiple(0)
    p, q, s = (k // 2 for k in e)
    N = p + q + s
    value = Fraction(4 * _double_factorial_odd(p) * _double_factorial_odd(q)
                     * _double_factorial_odd(s), _double_factorial_odd(N + 1))
    return PiMultiple(value * Fraction(r2) ** (N + 1))


class SphereState:
    """Integration functional on the quotient by x^2 + y^2 + z^2 - r2."""

    def __init__(self, r2=1):
        r2 = Fraction(r2)
        if r2 <= 0:
            raise ValueError("r2 must be positive")
        self.r2 = r2
        self.levelset = LevelSet.sphere(r2)
        self._moments: dict[tuple[int, ...], PiMultiple] = {}

    def __repr__(self):
        return f"SphereState(r2={self.r2})"

    @cached_property
    def structure(self):
        return surface_structure(self.levelset)

    @cached_property
    def geometry(self) -> TangentGeometry:
        return TangentGeometry(self.structure)

    def moment(self, e: tuple[int, ...]) -> PiMultiple:
        if e not in self._moments:
            self._moments[e] = sphere_moment(e, self.r2)
        return self._moments[e]

    def representative(self, u: RatFunc):
        """Polynomial representative of ``u`` mod C."""
        num = self.levelset.reduce(u.num)
        den = self.levelset.reduce(u.den)
        if not den.is_constant() or den.is_zero():
            raise NonPolynomialRepresentative(
                f"{u} has no polynomial representative mod C (denominator reduces to {den})")
        return num.scale(1 / as_coeff(den.constant_coeff()))

    def integrate(self, u: RatFunc) -> PiMultiple:
        total = PiMultiple(0)
        for e, c in self.representative(u).terms.items():
            mom = self.moment(e)
            if mom.coeff:
                total = total + mom * c
        return total

    def inner_product(self, u: RatFunc, v: RatFunc) -> PiMultiple:
        """<u, v> = int u* v."""
        return self.integrate(u.star() * v)

    def tracial_check(self, X: np.ndarray) -> PiMultiple:
        """int div X; zero for every tangential X when the state is tracial."""
        return self.integrate(self.geometry.divergence(X))

    def sample_points(self, n: int = 100, seed: int = 0) -> np.ndarray:
        """``n`` points on the sphere from normalised Gaussian directions."""
        rng = np.random.default_rng(seed)
        v = rng.standard_normal((n, 3))
        v /= np.linalg.norm(v, axis=1)[:, None]
        return v * np.sqrt(float(self.r2))


@dataclass
class PositivityReport:
    minimum: float
    evaluated: int
    poles_skipped: int

    @property
    def nonnegative(self) -> bool:
        return self.minimum >= 0

    def line(self) -> str:
        status = "PASS" if self.nonnegative else "FAIL"
        return (f"{status} pointwise-positivity: min {self.minimum:.6g} over {self.evaluated} "
                f"points ({self.poles_skipped} poles skipped)")


def positivity_surrogate(a: RatFunc, points, levelset: LevelSet | None = None,
                         tol: float = 1e-12) -> PositivityReport:
    """Minimum of ``a`` over sample points of the variety.

    This is a necessary condition for ``a >= 0`` in the sum-of-squares
    preorder, not a decision procedure.
    """
    values = []
    skipped = 0
    for p in points:
        p = [float(t) for t in p]
        if levelset is not None:
            c = levelset.C.evaluate(p)
            if abs(c) > tol * max(1.0, float(np.dot(p, p))):
                raise ValueError(f"point {p} is off the variety (C = {c:.3g})")
        try:
            v = a.evaluate(p)
        except PoleAtPoint:
            skipped += 1
            continue
        values.append(float(np.real(v)))
    minimum = min(values) if values else float("nan")
    return PositivityReport(minimum, len(values), skipped)


def trace_inequality_margin(geom: TangentGeometry, u: RatFunc, points) -> float:
    """min over points of H_ij H_ji - (1/n)(tr H)^2 with H the Hessian of u."""
    H = geom.hessian(u)
    worst = np.inf
    for p in points:
        h = np.array([[H[i, j].evaluate(p) for j in range(geom.m)] for i in range(geom.m)],
                     dtype=float)
        margin = float(np.sum(h * h.T) - np.trace(h) ** 2 / geom.n)
        worst = min(worst, margin)
    return worst
