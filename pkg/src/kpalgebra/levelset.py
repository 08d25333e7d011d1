"""Level-set Poisson structures on three generators and the quotient by <C>.

For a real polynomial C the bracket {x_i, x_j} = eps_ijk d_k C is Poisson and
C is a Casimir, so the bracket descends to Q(i)[x, y, z] / (C).  Quotient
representatives are remainders of division by C under grevlex (x > y > z);
a single polynomial is a Groebner basis of the ideal it generates.

For rational functions the numerator and denominator are reduced
separately.  This gives a representative, not a canonical form, unless the
reduced denominator is a constant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import tensors
from .errors import DegenerateSurface, DenominatorInIdeal
from .field import Poly, RatFunc
from .poisson import PoissonStructure

_EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


class LevelSet:
    """The constraint polynomial C in three variables."""

    def __init__(self, C, names: Sequence[str] = ("x", "y", "z")):
        if isinstance(C, RatFunc):
            if not C.is_polynomial():
                raise ValueError("level-set constraint must be a polynomial")
            C = C.as_poly()
        if not isinstance(C, Poly):
            raise TypeError("C must be a Poly or polynomial RatFunc")
        if C.nvars != 3:
            raise ValueError(f"level sets are defined on 3 generators, got {C.nvars}")
        if C.is_zero() or C.is_constant():
            raise DegenerateSurface(f"constraint {C} is constant")
        if not C.is_real():
            raise ValueError("constraint must be hermitian (real coefficients)")
        self.C = C
        self.names = list(names)
        self.leading_monomial = C.leading_term()[0]

    def __repr__(self):
        return f"LevelSet({self.C.format(self.names)!r})"

    @classmethod
    def sphere(cls, r2=1) -> LevelSet:
        r2 = Fraction(r2)
        x, y, z = (Poly.gen(3, i) for i in range(3))
        return cls(x * x + y * y + z * z - r2)

    @property
    def gradient(self) -> list[Poly]:
        return [self.C.partial(i) for i in range(3)]

    def gamma2(self) -> RatFunc:
        """Sum of squares of the partials of C."""
        return RatFunc(sum((g * g for g in self.gradient), Poly.zero(3)))

    def reduce(self, p: Poly) -> Poly:
        return p.divmod_by(self.C)[1]

    def is_normal(self, exps: tuple[int, ...]) -> bool:
        return not all(a >= b for a, b in zip(exps, self.leading_monomial))


def surface_structure(L: LevelSet) -> PoissonStructure:
    """Bivector P[i, j] = eps_ijk d_k C, cross-checked against sum (d_i C)^2."""
    grad = L.gradient
    if all(g.is_zero() for g in grad):
        raise DegenerateSurface("all partials of C vanish")
    P = tensors.zeros(3, 2)
    for (i, j, k), s in _EPS.items():
        P[i, j] = RatFunc(grad[k].scale(s))
    gamma2 = L.gamma2()
    if gamma2.is_zero():
        raise DegenerateSurface("gamma^2 vanishes identically")
    return PoissonStructure(P, L.names, gamma2_hint=gamma2)


def normal_form(u: RatFunc, L: LevelSet) -> RatFunc:
    num = L.reduce(u.num)
    den = L.reduce(u.den)
    if den.is_zero():
        raise DenominatorInIdeal(f"denominator of {u} lies in <C>")
    return RatFunc(num, den, reduce=False)


def equals_mod(u: RatFunc, v: RatFunc, L: LevelSet) -> bool:
    for d in (u.den, v.den):
        if L.reduce(d).is_zero():
            raise DenominatorInIdeal(f"denominator {d} lies in <C>")
    return L.reduce(u.num * v.den - v.num * u.den).is_zero()


def constant_mod(u: RatFunc, L: LevelSet):
    """The constant ``c`` with ``u = c`` mod C, or None when u is not constant there."""
    nf = normal_form(u, L)
    if nf.num.is_zero():
        return nf.num.constant_coeff()
    e, c = nf.num.leading_term()
    if e not in nf.den.terms:
        return None
    ratio = c / nf.den.terms[e]
    if nf.num == nf.den.scale(ratio):
        return ratio
    return None
