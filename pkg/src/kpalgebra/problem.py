"""JSON problem files.

    {
      "generators": ["x", "y", "z"],
      "levelset": "x^2 + y^2 + z^2 - 1",          # or "bracket": [[...], ...]
      "gamma2_hint": "4*x^2 + 4*y^2 + 4*z^2",     # optional
      "state": {"kind": "sphere", "r2": "1"}      # optional
    }

Expressions are strings in the parser grammar.  Diagnostics for a bad
expression point at the line and column inside the file where possible.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import ParseError, ShapeMismatch
from .field import RatFunc
from .levelset import LevelSet, surface_structure
from .parsing import parse_expr
from .poisson import PoissonStructure
from .state import SphereState

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_KEYS = {"generators", "bracket", "levelset", "gamma2_hint", "state"}


@dataclass
class ProblemFile:
    generators: list[str]
    bracket: np.ndarray | None = None      # m x m RatFunc
    levelset: RatFunc | None = None
    gamma2_hint: RatFunc | None = None
    state_r2: Fraction | None = None

    @property
    def m(self) -> int:
        return len(self.generators)

    def level(self) -> LevelSet | None:
        return None if self.levelset is None else LevelSet(self.levelset, self.generators)

    def structure(self) -> PoissonStructure:
        if self.levelset is not None:
            S = surface_structure(self.level())
            if self.gamma2_hint is not None:
                S.gamma2_hint = self.gamma2_hint
            return S
        return PoissonStructure(self.bracket, self.generators, gamma2_hint=self.gamma2_hint)

    def sphere_state(self, r2=None) -> SphereState:
        """The sphere state, with ``r2`` from the argument, the file, or the constraint."""
        if r2 is None:
            r2 = self.state_r2
        if r2 is None and self.levelset is not None:
            r2 = _sphere_radius2(self.levelset)
        if r2 is None:
            raise ShapeMismatch("no sphere state: give --r2 or a state entry")
        state = SphereState(r2)
        if self.levelset is not None and not self.levelset.equals(RatFunc(state.levelset.C)):
            raise ShapeMismatch(f"levelset is not the sphere of radius^2 {r2}")
        return state

    def to_dict(self) -> dict:
        names = self.generators
        out: dict = {"generators": list(names)}
        if self.bracket is not None:
            out["bracket"] = [[e.format(names) for e in row] for row in self.bracket]
        if self.levelset is not None:
            out["levelset"] = self.levelset.format(names)
        if self.gamma2_hint is not None:
            out["gamma2_hint"] = self.gamma2_hint.format(names)
        if self.state_r2 is not None:
            out["state"] = {"kind": "sphere", "r2": str(self.state_r2)}
        return out

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def __eq__(self, other):
        if not isinstance(other, ProblemFile):
            return NotImplemented
        if self.generators != other.generators or self.state_r2 != other.state_r2:
            return False
        for a, b in ((self.levelset, other.levelset), (self.gamma2_hint, other.gamma2_hint)):
            if (a is None) != (b is None) or (a is not None and not a.equals(b)):
                return False
        if (self.bracket is None) != (other.bracket is None):
            return False
        if self.bracket is not None:
            return all(a.equals(b) for a, b in zip(self.bracket.flat, other.bracket.flat))
        return True


def _sphere_radius2(C: RatFunc) -> Fraction | None:
    if not C.is_polynomial() or C.nvars != 3:
        return None
    p = C.as_poly()
    c0 = p.constant_coeff()
    try:
        r2 = Fraction(int((-c0).numerator), int((-c0).denominator))
    except (TypeError, AttributeError):
        return None
    if r2 <= 0:
        return None
    return r2 if C.equals(RatFunc(LevelSet.sphere(r2).C)) else None


def _locate(text: str, literal: str, offset: int) -> tuple[int | None, int | None]:
    """Line and column in ``text`` of character ``offset`` inside a JSON string literal."""
    pos = text.find(json.dumps(literal))
    if pos < 0:
        return None, None
    pos += 1 + offset
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def _expr(text: str, value, where: str, names: list[str]) -> RatFunc:
    if not isinstance(value, str):
        raise ShapeMismatch(f"{where}: expected an expression string, got {type(value).__name__}")
    try:
        return parse_expr(value, names)
    except ParseError as exc:
        line, column = _locate(text, value, exc.pos or 0)
        raise type(exc)(f"{where}: {exc.message}", exc.pos, line, column) from exc


def parse_problem(text: str) -> ProblemFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise ShapeMismatch("problem file must be a JSON object")
    unknown = set(data) - _KEYS
    if unknown:
        raise ShapeMismatch(f"unknown keys: {', '.join(sorted(unknown))}")

    names = data.get("generators")
    if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
        raise ShapeMismatch("generators must be a non-empty list of names")
    for n in names:
        if not _IDENT.match(n) or n == "i":
            raise ShapeMismatch(f"invalid generator name {n!r}")
    if len(set(names)) != len(names):
        raise ShapeMismatch("generator names must be unique")
    m = len(names)

    has_bracket, has_level = "bracket" in data, "levelset" in data
    if has_bracket == has_level:
        raise ShapeMismatch("give exactly one of 'bracket' and 'levelset'")

    problem = ProblemFile(list(names))
    if has_bracket:
        rows = data["bracket"]
        if not isinstance(rows, list) or len(rows) != m or \
                any(not isinstance(r, list) or len(r) != m for r in rows):
            raise ShapeMismatch(f"bracket must be a {m}x{m} matrix")
        B = np.empty((m, m), dtype=object)
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                B[i, j] = _expr(text, entry, f"bracket[{i}][{j}]", names)
        problem.bracket = B
    else:
        if m != 3:
            raise ShapeMismatch(f"levelset problems need 3 generators, got {m}")
        problem.levelset = _expr(text, data["levelset"], "levelset", names)
        if not problem.levelset.is_polynomial():
            raise ShapeMismatch("levelset must be a polynomial")

    if "gamma2_hint" in data:
        problem.gamma2_hint = _expr(text, data["gamma2_hint"], "gamma2_hint", names)

    if "state" in data:
        st = data["state"]
        if not isinstance(st, dict) or st.get("kind") != "sphere" or "r2" not in st:
            raise ShapeMismatch('state must be {"kind": "sphere", "r2": "<rational>"}')
        try:
            r2 = Fraction(str(st["r2"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ShapeMismatch(f"state.r2: {exc}") from exc
        if r2 <= 0:
            raise ShapeMismatch("state.r2 must be positive")
        problem.state_r2 = r2
    return problem


def load_problem(path) -> ProblemFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", source=str(path)) from exc
    try:
        return parse_problem(text)
    except ParseError as exc:
        raise type(exc)(exc.message, exc.pos, exc.line, exc.column, str(path)) from exc
