"""Exception hierarchy shared across the package."""

from __future__ import annotations


class KPError(Exception):
    """Base class for all errors raised by kpalgebra."""


class DivisionByZero(KPError, ZeroDivisionError):
    pass


class PoleAtPoint(KPError, ArithmeticError):
    pass


class DegeneratePoisson(KPError):
    """Tr P^2 vanishes, so gamma^2 cannot be extracted."""


class NonIntegerDimension(KPError):
    pass


class Gamma2Mismatch(KPError):
    """A user-supplied gamma^2 disagrees with the trace formula."""


class NotAntisymmetric(KPError, ValueError):
    pass


class ValidationOrderError(KPError):
    """A later validation stage was requested after an earlier one failed."""


class NotTangential(KPError, ValueError):
    pass


class InconsistentAssembly(KPError, AssertionError):
    pass


class DegeneratePlane(KPError, ZeroDivisionError):
    pass


class DegenerateSurface(KPError, ValueError):
    pass


class DenominatorInIdeal(KPError, ZeroDivisionError):
    pass


class NonPolynomialRepresentative(KPError, ValueError):
    pass


class GramNotPositiveDefinite(KPError, ArithmeticError):
    pass


class ParseError(KPError, ValueError):
    """Malformed expression or problem file; carries a position."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None,
                 column: int | None = None, source: str | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        self.column = column
        self.source = source
        where = []
        if source:
            where.append(source)
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class UnknownGenerator(ParseError):
    pass


class ShapeMismatch(KPError, ValueError):
    pass


class NotHermitian(KPError, ValueError):
    pass
