"""Truncated Laplace spectrum on the sphere and the eigenvalue gap bound.

The quotient space of polynomials of degree <= d modulo C is spanned by the
grevlex-normal monomials.  The Gram matrix, the Laplacian matrix
``<e_a, Lap e_b>`` and the gradient form ``<grad e_a, grad e_b>`` are
assembled exactly; every entry is a rational multiple of pi and pi is
dropped before the float eigen-solve.

Eigenvalues are reported as ``lam`` with ``Lap u = lam u``, so ``lam <= 0``.
The gap bound compares ``-lam_1`` (smallest nonzero) with ``n kappa / (n - 1)``.

On the sphere the Laplacian preserves degree, so the truncation is exact.
That is not true for other surfaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .curvature import Curvature
from .errors import GramNotPositiveDefinite
from .field import Poly, RatFunc
from .levelset import LevelSet, constant_mod, equals_mod
from .state import PiMultiple, SphereState

EIG_RESIDUAL_TOL = 1e-8
GRAM_MIN_EIG = 1e-10
CLUSTER_TOL = 1e-6


def build_basis(d: int, L: LevelSet) -> list[Poly]:
    """Normal monomials of total degree <= d, ascending by degree."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for total in range(d + 1):
        exps = [e for e in itertools.product(range(total + 1), repeat=3) if sum(e) == total]
        exps.sort(reverse=True)
        out.extend(Poly(3, {e: 1}) for e in exps if L.is_normal(e))
    return out


def _exact_matrix(rows: int, cols: int, fn) -> np.ndarray:
    M = np.empty((rows, cols), dtype=object)
    for a in range(rows):
        for b in range(cols):
            M[a, b] = fn(a, b)
    return M


@dataclass
class SpectralProblem:
    degree: int
    state: SphereState
    basis: list[Poly]
    gram: np.ndarray       # exact coefficients of pi
    lap: np.ndarray
    grad_gram: np.ndarray
    kappa: object = None
    eigenvalues: np.ndarray | None = None
    eigenvectors: np.ndarray | None = None
    residuals: list[float] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.state.structure.dimension

    def basis_labels(self) -> list[str]:
        return [b.format(["x", "y", "z"]) for b in self.basis]


def ricci_constant(state: SphereState):
    """kappa with Ric = kappa D mod C, or None when Ricci is not of that form."""
    geom = state.geometry
    curv = Curvature(geom)
    L = state.levelset
    scalar = constant_mod(curv.scalar, L)
    if scalar is None:
        return None
    kappa = scalar / geom.n
    k = RatFunc.const(3, kappa)
    for i in range(3):
        for j in range(3):
            if not equals_mod(curv.ricci[i, j], k * geom.D[i, j], L):
                return None
    return kappa


def assemble(d: int, state: SphereState, kappa=None) -> SpectralProblem:
    """Exact Gram, Laplacian and gradient matrices on the degree-<=d basis."""
    geom = state.geometry
    basis = build_basis(d, state.levelset)
    elems = [RatFunc(b) for b in basis]
    laps = [geom.laplacian(e) for e in elems]
    grads = [geom.gradient(e) for e in elems]

    def coeff(value):
        return value.coeff

    gram = _exact_matrix(len(basis), len(basis),
                         lambda a, b: coeff(state.inner_product(elems[a], elems[b])))
    lap = _exact_matrix(len(basis), len(basis),
                        lambda a, b: coeff(state.inner_product(elems[a], laps[b])))
    gg = _exact_matrix(
        len(basis), len(basis),
        lambda a, b: coeff(sum((state.inner_product(grads[a][i], grads[b][i]) for i in range(3)),
                               start=PiMultiple(0))))
    bad = [(a, b) for a in range(len(basis)) for b in range(a + 1, len(basis))
           if lap[a, b] != lap[b, a]]
    if bad:
        raise ArithmeticError(f"Laplacian matrix is not symmetric at {bad[:5]}")
    if kappa is None:
        kappa = ricci_constant(state)
    return SpectralProblem(d, state, basis, gram, lap, gg, kappa)


def spectrum(problem: SpectralProblem) -> np.ndarray:
    """Eigenvalues of the pencil (lap, gram), ordered by increasing -lam."""
    G = problem.gram.astype(float)
    A = problem.lap.astype(float)
    gmin = float(np.linalg.eigvalsh(G).min())
    if gmin <= GRAM_MIN_EIG:
        raise GramNotPositiveDefinite(f"smallest Gram eigenvalue {gmin:.3e}")
    w, V = scipy.linalg.eigh(A, G)
    order = np.argsort(-w, kind="stable")
    w, V = w[order], V[:, order]
    residuals = []
    for k in range(len(w)):
        v = V[:, k]
        r = np.linalg.norm(A @ v - w[k] * (G @ v)) / np.linalg.norm(v)
        residuals.append(float(r))
    problem.eigenvalues = w
    problem.eigenvectors = V
    problem.residuals = residuals
    return w


def clusters(values, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    """Group sorted values into (mean, multiplicity) pairs."""
    out: list[list[float]] = []
    for v in values:
        if out and abs(v - out[-1][-1]) <= tol * max(1.0, abs(v)):
            out[-1].append(v)
        else:
            out.append([v])
    return [(float(np.mean(c)), len(c)) for c in out]


@dataclass
class GapReport:
    lambda1: float | None
    bound: float
    satisfied: bool
    kappa: object
    n: int
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.satisfied else "FAIL"
        lam = "none" if self.lambda1 is None else f"{self.lambda1:.12g}"
        text = f"{status} gap: lambda1 = {lam}, bound n*kappa/(n-1) = {self.bound:.12g}"
        return text + (f" ({self.note})" if self.note else "")

    def to_dict(self) -> dict:
        return {"lambda1": self.lambda1, "bound": self.bound, "satisfied": self.satisfied,
                "kappa": None if self.kappa is None else str(self.kappa), "n": self.n,
                "note": self.note}


def gap_check(problem: SpectralProblem, tol: float = 1e-8) -> GapReport:
    if problem.eigenvalues is None:
        spectrum(problem)
    n = problem.n
    kappa = problem.kappa
    if kappa is None:
        return GapReport(None, float("nan"), False, None, n, "no Ricci lower bound available")
    bound = n * float(kappa) / (n - 1)
    nonzero = [-w for w in problem.eigenvalues if abs(w) > 1e-9]
    if not nonzero:
        return GapReport(None, bound, True, kappa, n, "no nonzero eigenvalue in truncation")
    lam1 = min(nonzero)
    note = "degenerate hypothesis kappa = 0" if kappa == 0 else ""
    return GapReport(lam1, bound, lam1 >= bound - tol, kappa, n, note)


@dataclass
class NondegeneracyReport:
    ok: bool
    rows: list[tuple[float, float, float]]  # (-lam, <u,u>, <grad u, grad u>)
    worst: float


def nondegeneracy_check(problem: SpectralProblem, tol: float = 1e-8) -> NondegeneracyReport:
    """<u,u> > 0 and <grad u, grad u> = -lam <u,u> for eigenvectors with lam != 0."""
    if problem.eigenvalues is None:
        spectrum(problem)
    G = problem.gram.astype(float)
    K = problem.grad_gram.astype(float)
    rows, worst, ok = [], 0.0, True
    for k, w in enumerate(problem.eigenvalues):
        if abs(w) <= 1e-9:
            continue
        v = problem.eigenvectors[:, k]
        uu = float(v @ G @ v)
        gg = float(v @ K @ v)
        err = abs(gg + w * uu) / max(1.0, abs(gg))
        worst = max(worst, err)
        ok = ok and uu > 0 and gg > 0 and err < tol
        rows.append((-float(w), uu, gg))
    return NondegeneracyReport(ok, rows, worst)
