"""Tangent/normal projectors and the projected covariant derivative.

With gamma^2 and P from a validated structure,

    D_i(u)  = (1/gamma^2) {u, x_k} P[i, k]       (equal to D[i, j] d_j u)
    D[i, k] = D_i(x_k) = -(P^2)[i, k] / gamma^2,  Pi = 1 - D

and for tangential tensors the covariant derivative is
``(nabla T)[i, a, b, ...] = D[a, a'] D[b, b'] ... D_i(T[a', b', ...])``.
Every "for all tangential X" statement is exercised on the columns of D,
which span the tangent space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import tensors
from .errors import NotTangential
from .field import RatFunc
from .poisson import CheckReport, PoissonStructure


@dataclass(frozen=True)
class ProjectorPair:
    D: np.ndarray
    Pi: np.ndarray


class TangentGeometry:
    """Projected calculus on a validated almost Kahler-Poisson structure."""

    def __init__(self, structure: PoissonStructure):
        structure.require_validated()
        self.S = structure
        self.m = structure.m
        self.n = structure.dimension
        self.gamma2 = structure.gamma2
        self._inv_gamma2 = self.gamma2.inverse()

    def __repr__(self):
        return f"TangentGeometry({self.S!r}, n={self.n})"

    @cached_property
    def D(self) -> np.ndarray:
        P = self.S.P
        return -(P @ P) * self._inv_gamma2

    @cached_property
    def Pi(self) -> np.ndarray:
        return tensors.identity(self.m) - self.D

    def projectors(self) -> ProjectorPair:
        return ProjectorPair(self.D, self.Pi)

    def spanning_fields(self) -> list[np.ndarray]:
        """Columns of D; they span the tangent space."""
        return [self.D[:, k].copy() for k in range(self.m)]

    def d_of(self, u: RatFunc) -> np.ndarray:
        """The vector D_i(u), i = 0..m-1 (tangential gradient)."""
        grad = [u.partial(j) for j in range(self.m)]
        out = np.empty(self.m, dtype=object)
        for i in range(self.m):
            total = RatFunc.zero(self.m)
            for j in range(self.m):
                if not grad[j].is_zero() and not self.D[i, j].is_zero():
                    total = total + self.D[i, j] * grad[j]
            out[i] = total
        return out

    def d_of_bracket(self, u: RatFunc) -> np.ndarray:
        """D_i(u) straight from the bracket formula; used to cross-check ``d_of``."""
        S = self.S
        br = [S.bracket(u, x) for x in S.gens()]
        out = np.empty(self.m, dtype=object)
        for i in range(self.m):
            total = RatFunc.zero(self.m)
            for k in range(self.m):
                total = total + br[k] * S.P[i, k]
            out[i] = total * self._inv_gamma2
        return out

    def project(self, X: np.ndarray, which: str = "tangent") -> np.ndarray:
        M = {"tangent": self.D, "normal": self.Pi}[which]
        return tensors.contract_slot(M, X, 0)

    def project_all(self, T: np.ndarray) -> np.ndarray:
        for axis in range(T.ndim):
            T = tensors.contract_slot(self.D, T, axis)
        return T

    def tangential_residual(self, T: np.ndarray) -> list[tuple[tuple[int, ...], RatFunc]]:
        """Entries that change when D is applied to any single slot."""
        out = []
        for axis in range(T.ndim):
            out.extend(tensors.differences(tensors.contract_slot(self.D, T, axis), T))
        return out

    def is_tangential(self, T: np.ndarray) -> bool:
        return all(tensors.equal(tensors.contract_slot(self.D, T, axis), T)
                   for axis in range(T.ndim))

    def _require_tangential(self, T: np.ndarray, what: str = "argument"):
        if not self.is_tangential(T):
            raise NotTangential(f"{what} is not tangential")

    def apply(self, X: np.ndarray, u: RatFunc) -> RatFunc:
        """X(u) = X^i D_i(u)."""
        return tensors.dot(X, self.d_of(u))

    def lie_bracket(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        self._require_tangential(X, "X")
        self._require_tangential(Y, "Y")
        out = np.empty(self.m, dtype=object)
        for i in range(self.m):
            out[i] = self.apply(X, Y[i]) - self.apply(Y, X[i])
        return out

    def nabla(self, T: np.ndarray, check: bool = True) -> np.ndarray:
        """Index covariant derivative; the new (derivative) index comes first."""
        if check:
            self._require_tangential(T, "tensor")
        if T.ndim == 0:
            return self.d_of(T[()])
        raw = np.empty((self.m,) + T.shape, dtype=object)
        for idx in np.ndindex(T.shape):
            raw[(slice(None),) + idx] = self.d_of(T[idx])
        for axis in range(1, raw.ndim):
            raw = tensors.contract_slot(self.D, raw, axis)
        return raw

    def covariant_derivative(self, X: np.ndarray, T: np.ndarray, check: bool = True) -> np.ndarray:
        """nabla_X T; for a vector Y this is D[i, k] X^l D_l(Y_k)."""
        if check:
            self._require_tangential(X, "X")
        return np.tensordot(X, self.nabla(T, check=check), axes=([0], [0]))

    def nabla_u(self, X: np.ndarray, u: RatFunc) -> RatFunc:
        return self.apply(X, u)

    def gradient(self, u: RatFunc) -> np.ndarray:
        return self.d_of(u)

    def divergence(self, X: np.ndarray) -> RatFunc:
        """sum_i D_i(X^i) for tangential X."""
        self._require_tangential(X, "X")
        total = RatFunc.zero(self.m)
        for i in range(self.m):
            total = total + self.d_of(X[i])[i]
        return total

    def divergence_projected(self, X: np.ndarray) -> RatFunc:
        """D[i, k] D_i(X_k), the trace of nabla X."""
        return tensors.trace(self.nabla(X))

    def hessian(self, u: RatFunc) -> np.ndarray:
        """nabla_i nabla_j (u) = D[j, l] D_i(D_l(u))."""
        g = self.d_of(u)
        H0 = np.empty((self.m, self.m), dtype=object)
        for l in range(self.m):
            H0[:, l] = self.d_of(g[l])
        return H0 @ self.D

    def laplacian(self, u: RatFunc) -> RatFunc:
        """sum_{i,k} D[i, k] D_i(D_k(u))."""
        g = self.d_of(u)
        total = RatFunc.zero(self.m)
        for k in range(self.m):
            dk = self.d_of(g[k])
            for i in range(self.m):
                if not self.D[i, k].is_zero() and not dk[i].is_zero():
                    total = total + self.D[i, k] * dk[i]
        return total

    def laplacian_div_grad(self, u: RatFunc) -> RatFunc:
        return self.divergence(self.gradient(u))

    # identity checks

    def projector_check(self) -> CheckReport:
        D, Pi = self.D, self.Pi
        failures, bad = [], []
        for label, A, B in (("D^2=D", D @ D, D), ("Pi^2=Pi", Pi @ Pi, Pi),
                            ("D.Pi=0", D @ Pi, tensors.zeros(self.m, 2)),
                            ("D+Pi=1", D + Pi, tensors.identity(self.m))):
            diffs = tensors.differences(A, B)
            if diffs:
                bad.append(label)
                failures.extend(diffs)
        tr = tensors.trace(D)
        if not tr.equals(self.n):
            bad.append("TrD=n")
            failures.append(((), tr - self.n))
        detail = f"Tr D = {self.n}" if not bad else "failed: " + ", ".join(bad)
        return CheckReport("projectors", not failures, failures, detail=detail)

    def dd_symmetric_residual(self, u: RatFunc) -> np.ndarray:
        """[D^i, D^j](u) P_ik P_jl as an m x m array (identically zero)."""
        g = self.d_of(u)
        DD = np.empty((self.m, self.m), dtype=object)
        for j in range(self.m):
            DD[:, j] = self.d_of(g[j])
        comm = DD - DD.T
        P = self.S.P
        return P.T @ comm @ P

    def codazzi_residual(self, column: int) -> np.ndarray:
        """Codazzi-Mainardi combination for N = column of Pi, projected on all slots.

        C[i, j, k] = D^i D^k N^j - D^j D^k N^i + D^k D^j N^i - D^k D^i N^j.
        """
        N = self.Pi[:, column]
        m = self.m
        # DDN[a, b, c] = D^a D^b (N^c)
        DDN = np.empty((m, m, m), dtype=object)
        for c in range(m):
            first = self.d_of(N[c])
            for b in range(m):
                DDN[:, b, c] = self.d_of(first[b])
        C = np.empty((m, m, m), dtype=object)
        for i, j, k in tensors.indices(m, 3):
            C[i, j, k] = DDN[i, k, j] - DDN[j, k, i] + DDN[k, j, i] - DDN[k, i, j]
        return self.project_all(C)


def projectors(S: PoissonStructure) -> ProjectorPair:
    return TangentGeometry(S).projectors()


def d_of(u: RatFunc, S: PoissonStructure) -> np.ndarray:
    return TangentGeometry(S).d_of(u)
