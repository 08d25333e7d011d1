"""Exact arithmetic in Q(i)(x1, ..., xm).

Three layers:

* ``GaussRat``: a Gaussian rational ``re + im*i``.  Purely real values are
  normalised to :class:`gmpy2.mpq`, so polynomial coefficients are either an
  ``mpq`` or a ``GaussRat`` with nonzero imaginary part.
* ``Poly``: a sparse polynomial, a mapping from exponent tuples to nonzero
  coefficients.  Terms are printed and reduced in graded reverse
  lexicographic order with x1 > x2 > ... > xm.
* ``RatFunc``: ``num / den`` with a monic denominator (leading grevlex
  coefficient equal to 1).

Equality of rational functions is decided by cross-multiplication.  Common
factors are cancelled with a multivariate GCD whenever the numerator and
denominator together exceed ``GCD_TERM_THRESHOLD`` terms; correctness never
depends on the cancellation, only term growth does.

Generator indices are 0-based throughout the Python API.
"""

from __future__ import annotations

import itertools
import numbers
from fractions import Fraction
from functools import lru_cache
from operator import add
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import DivisionByZero, PoleAtPoint

__all__ = [
    "GaussRat",
    "Poly",
    "RatFunc",
    "I",
    "as_coeff",
    "grevlex_key",
    "default_names",
    "generators",
    "GCD_TERM_THRESHOLD",
]

# Term count (num + den) above which a GCD cancellation pass runs.  0 means
# "whenever the denominator is not constant".  Curvature assembly nests
# quotient rules several levels deep, so the default cancels eagerly.
GCD_TERM_THRESHOLD = 0

_ZERO = mpq(0)
MPQ = type(_ZERO)
_ONE = mpq(1)


class GaussRat:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        return _format_coeff(canonical(self))

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, MPQ)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return canonical(GaussRat(self.re, -self.im))

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return canonical(GaussRat(self.re + re, self.im + im))

    __radd__ = __add__

    def __sub__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return canonical(GaussRat(self.re - re, self.im - im))

    def __rsub__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return canonical(GaussRat(re - self.re, im - self.im))

    def __mul__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return canonical(GaussRat(self.re * re - self.im * im, self.re * im + self.im * re))

    __rmul__ = __mul__

    def __truediv__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        norm = re * re + im * im
        if norm == 0:
            raise DivisionByZero("division by zero Gaussian rational")
        return canonical(GaussRat((self.re * re + self.im * im) / norm,
                                  (self.im * re - self.re * im) / norm))

    def __rtruediv__(self, other):
        re, im = _parts(other)
        if re is None:
            return NotImplemented
        return GaussRat(re, im) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return _ONE / self ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result



def _to_mpq(v):
    if isinstance(v, MPQ):
        return v
    if isinstance(v, int):
        return mpq(v)
    if isinstance(v, numbers.Rational):
        return mpq(int(v.numerator), int(v.denominator))
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _parts(v):
    if isinstance(v, GaussRat):
        return v.re, v.im
    if isinstance(v, (MPQ, int, Fraction)):
        return _to_mpq(v), _ZERO
    return None, None


def canonical(c):
    """Collapse a GaussRat with zero imaginary part to an ``mpq``."""
    if isinstance(c, GaussRat):
        return c.re if c.im == 0 else c
    return c


def as_coeff(v):
    """Coerce an exact scalar (int, Fraction, mpq, GaussRat) to a coefficient."""
    if isinstance(v, GaussRat):
        return canonical(v)
    if isinstance(v, complex):
        re, im = v.real, v.imag
        if re != int(re) or im != int(im):
            raise TypeError("complex literals must have integer parts")
        return canonical(GaussRat(int(re), int(im)))
    if isinstance(v, bool):
        raise TypeError("bool is not a coefficient")
    return _to_mpq(v)


I = GaussRat(0, 1)


def conj(c):
    return c.conjugate() if isinstance(c, GaussRat) else c


def _format_coeff(c) -> str:
    if isinstance(c, GaussRat):
        re, im = c.re, c.im
        if re == 0:
            if im == 1:
                return "i"
            if im == -1:
                return "-i"
            return f"{im}*i"
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        imag = "i" if mag == 1 else f"{mag}*i"
        return f"({re} {sign} {imag})"
    return str(c)


def grevlex_key(e: tuple[int, ...]):
    """Sort key: larger key means larger monomial under grevlex x1 > ... > xm."""
    return (sum(e), tuple(-k for k in reversed(e)))


def default_names(m: int) -> list[str]:
    if m <= 3:
        return ["x", "y", "z"][:m]
    return [f"x{i + 1}" for i in range(m)]


class Poly:
    """Sparse multivariate polynomial over Q(i).

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero coefficients
    and must be treated as read-only.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(k) for k in e)
                if len(e) != nvars or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent {e} for {nvars} variables")
                c = as_coeff(c)
                if c:
                    clean[e] = clean.get(e, _ZERO) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Poly:
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> Poly:
        c = as_coeff(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def gen(cls, nvars: int, i: int) -> Poly:
        if not 0 <= i < nvars:
            raise IndexError(f"generator index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): _ONE})

    def __repr__(self):
        return f"Poly({self.format()!r})"

    def __str__(self):
        return self.format()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            other = Poly.const(self.nvars, other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, _ZERO)

    def is_real(self) -> bool:
        return not any(isinstance(c, GaussRat) for c in self.terms.values())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def _check(self, other: Poly):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly.const(self.nvars, other)
        except TypeError:
            return None

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Poly:
        c = as_coeff(c)
        if not c:
            return Poly.zero(self.nvars)
        if c == 1:
            return self
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, _ZERO) + ca * cb
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly exponent must be a non-negative integer")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i: int) -> Poly:
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Poly._raw(self.nvars, out)

    def conj(self) -> Poly:
        if self.is_real():
            return self
        return Poly._raw(self.nvars, {e: conj(c) for e, c in self.terms.items()})

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        exact = all(_is_exact(v) for v in point)
        if exact:
            pt = [as_coeff(v) for v in point]
            total = _ZERO
        else:
            pt = [complex(v) if isinstance(v, (complex, GaussRat)) else float(v) for v in point]
            total = 0.0
        powers: list[dict[int, object]] = [{0: 1} for _ in pt]
        for e, c in self.terms.items():
            term = c if exact else _coeff_to_number(c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = pt[i] ** k
                    term = term * cache[k]
            total = total + term
        return canonical(total) if exact else total

    def divmod_by(self, g: Poly) -> tuple[Poly, Poly]:
        """Multivariate division by a single polynomial under grevlex.

        Returns ``(q, r)`` with ``self = q*g + r`` and no term of ``r``
        divisible by the leading monomial of ``g``.
        """
        self._check(g)
        lm, lc = g.leading_term()
        rest = {e: c for e, c in g.terms.items() if e != lm}
        p = dict(self.terms)
        q: dict = {}
        r: dict = {}
        while p:
            e = max(p, key=grevlex_key)
            c = p.pop(e)
            if all(a >= b for a, b in zip(e, lm)):
                shift = tuple(a - b for a, b in zip(e, lm))
                f = c / lc
                q[shift] = q.get(shift, _ZERO) + f
                for er, cr in rest.items():
                    e2 = tuple(map(add, er, shift))
                    v = p.get(e2, _ZERO) - f * cr
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
            else:
                r[e] = c
        return (Poly._raw(self.nvars, {e: c for e, c in q.items() if c}),
                Poly._raw(self.nvars, r))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            neg = c.re == 0 and c.im < 0 if isinstance(c, GaussRat) else c < 0
            mag = -c if neg else c
            if not mono:
                body = _format_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_format_coeff(mag)}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction, GaussRat, MPQ)) and not isinstance(v, bool)


def _coeff_to_number(c):
    if isinstance(c, GaussRat):
        return complex(c)
    return float(c)


@lru_cache(maxsize=None)
def _sympy_ring(nvars: int, gaussian: bool):
    from sympy.polys.domains import QQ, QQ_I
    from sympy.polys.rings import ring

    names = ",".join(f"_v{i}" for i in range(nvars))
    return ring(names, QQ_I if gaussian else QQ)[0]


def _to_sympy(p: Poly, R, gaussian: bool):
    if gaussian:
        dom = R.domain
        return R.from_dict({e: dom(*_parts(c)) if isinstance(c, GaussRat) else dom(c, 0)
                            for e, c in p.terms.items()})
    return R.from_dict(dict(p.terms))


def _from_sympy(f, nvars: int, gaussian: bool) -> Poly:
    if gaussian:
        return Poly._raw(nvars, {e: canonical(GaussRat(mpq(c.x), mpq(c.y)))
                                 for e, c in f.items()})
    return Poly._raw(nvars, {e: mpq(c) for e, c in f.items()})


def _monomial_gcd_cofactors(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Cancel the common monomial factor, then try exact division either way."""
    low = [min(e[k] for e in itertools.chain(a.terms, b.terms)) for k in range(a.nvars)]
    if any(low):
        def shift(p):
            return Poly._raw(p.nvars, {tuple(x - l for x, l in zip(e, low)): c
                                       for e, c in p.terms.items()})
        g, a, b = Poly._raw(a.nvars, {tuple(low): _ONE}), shift(a), shift(b)
    else:
        g = Poly.const(a.nvars, 1)
    for big, small, flip in ((a, b, False), (b, a, True)):
        if small.is_constant():
            continue
        q, r = big.divmod_by(small)
        if r.is_zero():
            one = Poly.const(a.nvars, 1)
            return (g * small, one, q) if flip else (g * small, q, one)
    return g, a, b


def poly_gcd_cofactors(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """``(g, a/g, b/g)``.

    Real polynomials use sympy's sparse multivariate GCD over Q.  Over Q(i)
    sympy falls back to subresultant sequences, which are impractically slow
    even at small sizes, so Gaussian inputs only get monomial and
    exact-division cancellation; ``g`` is then a common factor, not
    necessarily the greatest.
    """
    a._check(b)
    if not (a.is_real() and b.is_real()):
        return _monomial_gcd_cofactors(a, b)
    R = _sympy_ring(a.nvars, False)
    g, ca, cb = _to_sympy(a, R, False).cofactors(_to_sympy(b, R, False))
    return (_from_sympy(g, a.nvars, False), _from_sympy(ca, a.nvars, False),
            _from_sympy(cb, a.nvars, False))


class RatFunc:
    """Element of the fraction field Q(i)(x1, ..., xm).

    The denominator is kept monic under grevlex.  ``==`` is exact equality in
    the fraction field; comparison against plain numbers is allowed.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: Poly, den: Poly | None = None, *, reduce: bool = True):
        if den is None:
            den = Poly.const(num.nvars, 1)
        num._check(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = Poly.const(num.nvars, 1)
        elif reduce and not den.is_constant() and not num.is_constant() \
                and len(num) + len(den) > GCD_TERM_THRESHOLD:
            g, cn, cd = poly_gcd_cofactors(num, den)
            if not g.is_constant():
                num, den = cn, cd
        _, lc = den.leading_term()
        if lc != 1:
            inv = _ONE / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def const(cls, nvars: int, c) -> RatFunc:
        return cls._raw(Poly.const(nvars, c), Poly.const(nvars, 1))

    @classmethod
    def gen(cls, nvars: int, i: int) -> RatFunc:
        return cls._raw(Poly.gen(nvars, i), Poly.const(nvars, 1))

    @classmethod
    def zero(cls, nvars: int) -> RatFunc:
        return cls.const(nvars, 0)

    @classmethod
    def one(cls, nvars: int) -> RatFunc:
        return cls.const(nvars, 1)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def __repr__(self):
        return f"RatFunc({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        """Canonical ``num / den`` string; the denominator is omitted when 1."""
        n = self.num.format(names)
        if self.den.is_constant():
            return n
        d = self.den.format(names)
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n} / ({d})"

    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly.const(other.nvars, 1))
        try:
            return RatFunc.const(self.nvars, other)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_constant(self):
        """The constant value of ``self``, or None; independent of cancellation."""
        if self.num.is_zero():
            return _ZERO
        if self.num.is_constant() and self.den.is_constant():
            return canonical(self.num.constant_coeff() / self.den.constant_coeff())
        if len(self.num) != len(self.den):
            return None
        e, c = self.den.leading_term()
        if e not in self.num.terms:
            return None
        ratio = self.num.terms[e] / c
        return ratio if self.den.scale(ratio) == self.num else None

    def is_constant(self) -> bool:
        return self.as_constant() is not None

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self):
        value = self.as_constant()
        if value is None:
            raise ValueError(f"{self} is not constant")
        return value

    def as_poly(self) -> Poly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(_ONE / self.den.constant_coeff())

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def __bool__(self):
        return not self.is_zero()

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if other.den.is_constant():
            k = _ONE / other.den.constant_coeff()
            return RatFunc(self.num + other.num.scale(k) * self.den, self.den)
        if self.den.is_constant():
            k = _ONE / self.den.constant_coeff()
            return RatFunc(self.num.scale(k) * other.den + other.num, other.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero(self.nvars)
        c = other.as_constant()
        if c is not None:
            return RatFunc._raw(self.num.scale(c), self.den)
        c = self.as_constant()
        if c is not None:
            return RatFunc._raw(other.num.scale(c), other.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise DivisionByZero("inverse of the zero function")
        return RatFunc(self.den, self.num, reduce=False)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def partial(self, i: int) -> RatFunc:
        if not 0 <= i < self.nvars:
            raise IndexError(f"generator index {i} out of range for {self.nvars} variables")
        dn = self.num.partial(i)
        if self.den.is_constant():
            return RatFunc._raw(dn, self.den)
        dd = self.den.partial(i)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def star(self) -> RatFunc:
        if self.is_real():
            return self
        return RatFunc(self.num.conj(), self.den.conj(), reduce=False)

    def equals(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return False
        return (self.num * other.den - other.num * self.den).is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    def evaluate(self, point: Sequence):
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleAtPoint(f"denominator of {self} vanishes at {tuple(point)}")
        n = self.num.evaluate(point)
        return canonical(n / d)

    def term_count(self) -> int:
        return len(self.num) + len(self.den)


def generators(m: int) -> list[RatFunc]:
    """The generators x1, ..., xm as rational functions."""
    return [RatFunc.gen(m, i) for i in range(m)]


def field_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Apply one of ``add``, ``sub``, ``mul``, ``div``."""
    ops = {"add": lambda u, v: u + v, "sub": lambda u, v: u - v, "mul": lambda u, v: u * v,
           "div": lambda u, v: u / v}
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def partial(f: RatFunc, i: int) -> RatFunc:
    return f.partial(i)


def star(f: RatFunc) -> RatFunc:
    return f.star()


def equals(f: RatFunc, g) -> bool:
    return f.equals(g)


def evaluate(f: RatFunc, point: Sequence):
    return f.evaluate(point)


def monomial(m: int, exps: Iterable[int], coeff=1) -> RatFunc:
    return RatFunc._raw(Poly(m, {tuple(exps): coeff}), Poly.const(m, 1))

