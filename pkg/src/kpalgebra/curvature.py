"""Riemann, Ricci, scalar and sectional curvature.

Components are stored as a rank-4 array ``R[i, j, k, l]`` with

    (R(X, Y) Z)^i = R[i, j, k, l] Z^j X^k Y^l
    R(X, Y, Z, V) = (R(Z, V) Y, X) = R[i, j, k, l] X^i Y^j Z^k V^l

The primary components come from the Gauss formula

    R[i, j, k, l] = D[i, n] (D_k(Pi[n, m]) D_l(Pi[j, m]) - D_l(Pi[n, m]) D_k(Pi[j, m]))

with the j slot projected onto the tangent space.  A second, independent
assembly applies nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z to the
spanning columns of D; by tangentiality the entries of the tensor are read
off directly from those commutators.

Ricci: ``Ric[i, k] = R[i, j, k, l] D[j, l]``; on the round sphere of radius
r this is ``D / r^2``, positive as it must be.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import tensors
from .errors import DegeneratePlane, InconsistentAssembly
from .field import RatFunc
from .geometry import TangentGeometry
from .poisson import CheckReport, PoissonStructure


def riemann_gauss(geom: TangentGeometry) -> np.ndarray:
    m = geom.m
    D, Pi = geom.D, geom.Pi
    # dPi[k, a, b] = D_k(Pi[a, b])
    dPi = np.empty((m, m, m), dtype=object)
    for a in range(m):
        for b in range(a, m):
            col = geom.d_of(Pi[a, b])
            dPi[:, a, b] = col
            dPi[:, b, a] = col
    # A[k, l, n, j] = sum_m dPi[k, n, m] dPi[l, j, m]
    A = np.einsum("knm,ljm->klnj", dPi, dPi)
    raw = A - np.transpose(A, (1, 0, 2, 3))  # [k, l, n, j]
    R = np.einsum("in,klnj->ijkl", D, raw)
    return tensors.contract_slot(D, R, 1)


def curvature_operator(geom: TangentGeometry, X: np.ndarray, Y: np.ndarray,
                       Z: np.ndarray) -> np.ndarray:
    """R(X, Y) Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z."""
    cd = geom.covariant_derivative
    return cd(X, cd(Y, Z)) - cd(Y, cd(X, Z)) - cd(geom.lie_bracket(X, Y), Z)


def riemann_commutator(geom: TangentGeometry) -> np.ndarray:
    """Components assembled from commutators on the spanning columns of D."""
    m = geom.m
    cols = geom.spanning_fields()
    cd = geom.covariant_derivative
    # first derivatives nabla_{col l} col j, reused across all k
    first = {(l, j): cd(cols[l], cols[j]) for l in range(m) for j in range(m)}
    brackets = {(k, l): geom.lie_bracket(cols[k], cols[l]) for k in range(m) for l in range(k + 1, m)}
    R = tensors.zeros(m, 4)  # R(X, X) = 0 fills the k == l entries
    for k in range(m):
        for l in range(k + 1, m):
            for j in range(m):
                v = (cd(cols[k], first[(l, j)], check=False)
                     - cd(cols[l], first[(k, j)], check=False)
                     - cd(brackets[(k, l)], cols[j], check=False))
                R[:, j, k, l] = v
                R[:, j, l, k] = -v
    residual = geom.tangential_residual(R)
    if residual:
        raise InconsistentAssembly(
            f"commutator assembly is not tangential at {len(residual)} entries")
    return R


def riemann_index(geom: TangentGeometry) -> np.ndarray:
    """Components from X^k Y^l (nabla_k nabla_l Z^i - nabla_l nabla_k Z^i)."""
    m = geom.m
    R = np.empty((m,) * 4, dtype=object)
    for j, Z in enumerate(geom.spanning_fields()):
        NN = geom.nabla(geom.nabla(Z), check=False)  # [k, l, i]
        comm = NN - np.transpose(NN, (1, 0, 2))
        R[:, j, :, :] = np.transpose(comm, (2, 0, 1))
    return R


def levelset_closed_form(geom: TangentGeometry, hessian: np.ndarray) -> np.ndarray:
    """(1/gamma^2)(H_ik H_jl - H_il H_jk), projected on every slot."""
    raw = np.einsum("ik,jl->ijkl", hessian, hessian)
    raw = (raw - np.transpose(raw, (0, 1, 3, 2))) * geom.gamma2.inverse()
    return geom.project_all(raw)


def ricci(R: np.ndarray, geom: TangentGeometry) -> np.ndarray:
    return np.einsum("ijkl,jl->ik", R, geom.D)


def scalar_curvature(ric: np.ndarray, geom: TangentGeometry) -> RatFunc:
    return tensors.trace(geom.D @ ric.T)


def quadrilinear(R: np.ndarray, X, Y, Z, V) -> RatFunc:
    return np.einsum("ijkl,i,j,k,l->", R, X, Y, Z, V)


def sectional(R: np.ndarray, X: np.ndarray, Y: np.ndarray) -> RatFunc:
    """K(X, Y) = R(X, Y, X, Y) / ((X, X)(Y, Y) - (X, Y)^2)."""
    denom = tensors.dot(X, X) * tensors.dot(Y, Y) - tensors.dot(X, Y) ** 2
    if denom.is_zero():
        raise DegeneratePlane("X and Y span a degenerate plane")
    return quadrilinear(R, X, Y, X, Y) / denom


def centrality_check(k: RatFunc, S: PoissonStructure) -> CheckReport:
    """{k, x_j} = 0 for every generator."""
    failures = []
    for j, x in enumerate(S.gens()):
        b = S.bracket(k, x)
        if not b.is_zero():
            failures.append(((j,), b))
    return CheckReport("central", not failures, failures)


def first_bianchi_residual(R: np.ndarray) -> np.ndarray:
    """R[i,j,k,l] + R[i,l,j,k] + R[i,k,l,j]: R(X,Y)Z + R(Z,X)Y + R(Y,Z)X."""
    return R + np.transpose(R, (0, 2, 3, 1)) + np.transpose(R, (0, 3, 1, 2))


def second_bianchi_residual(dR: np.ndarray) -> np.ndarray:
    """nabla_a R[i,j,k,l] + nabla_k R[i,j,l,a] + nabla_l R[i,j,a,k].

    ``dR[a, i, j, k, l]`` is the covariant derivative of R.
    """
    t1 = np.transpose(dR, (1, 2, 0, 3, 4))      # [i, j, a, k, l] = nabla_a R_ijkl
    t2 = np.transpose(dR, (1, 2, 4, 0, 3))      # [i, j, a, k, l] = nabla_k R_ijla
    t3 = np.transpose(dR, (1, 2, 3, 4, 0))      # [i, j, a, k, l] = nabla_l R_ijak
    return t1 + t2 + t3


def symmetry_residuals(R: np.ndarray) -> dict[str, list]:
    return {
        "R(X,Y,Z,V)=-R(X,Y,V,Z)": tensors.differences(R, -np.transpose(R, (0, 1, 3, 2))),
        "R(X,Y,Z,V)=-R(Y,X,Z,V)": tensors.differences(R, -np.transpose(R, (1, 0, 2, 3))),
        "R(X,Y,Z,V)=R(Z,V,X,Y)": tensors.differences(R, np.transpose(R, (2, 3, 0, 1))),
    }


@dataclass
class CurvatureReport:
    R_components: np.ndarray
    ricci: np.ndarray
    scalar: RatFunc
    sectional_constant: RatFunc | None = None


class Curvature:
    """Lazily computed curvature data for one geometry."""

    def __init__(self, geom: TangentGeometry):
        self.geom = geom

    @cached_property
    def R(self) -> np.ndarray:
        return riemann_gauss(self.geom)

    @cached_property
    def R_commutator(self) -> np.ndarray:
        return riemann_commutator(self.geom)

    @cached_property
    def ricci(self) -> np.ndarray:
        return ricci(self.R, self.geom)

    @cached_property
    def scalar(self) -> RatFunc:
        return scalar_curvature(self.ricci, self.geom)

    def sectional(self, X: np.ndarray, Y: np.ndarray) -> RatFunc:
        for name, V in (("X", X), ("Y", Y)):
            self.geom._require_tangential(V, name)
        return sectional(self.R, X, Y)

    def sectional_on_spanning_pairs(self) -> dict[tuple[int, int], RatFunc]:
        """K on every non-degenerate pair of spanning columns."""
        cols = self.geom.spanning_fields()
        out = {}
        for a in range(len(cols)):
            for b in range(a + 1, len(cols)):
                try:
                    out[(a, b)] = sectional(self.R, cols[a], cols[b])
                except DegeneratePlane:
                    continue
        return out

    def sectional_constant(self) -> RatFunc | None:
        """The common value of K over spanning pairs when it is plane-independent."""
        values = list(self.sectional_on_spanning_pairs().values())
        if not values:
            return None
        first = values[0]
        return first if all(v.equals(first) for v in values[1:]) else None

    @cached_property
    def nabla_R(self) -> np.ndarray:
        return self.geom.nabla(self.R, check=False)

    def report(self) -> CurvatureReport:
        return CurvatureReport(self.R, self.ricci, self.scalar, self.sectional_constant())

    def checks(self) -> list[CheckReport]:
        R = self.R
        out = [CheckReport("tangential", not (res := self.geom.tangential_residual(R)), res)]
        fb = tensors.nonzero_entries(first_bianchi_residual(R))
        out.append(CheckReport("first-bianchi", not fb, fb))
        sb = tensors.nonzero_entries(second_bianchi_residual(self.nabla_R))
        out.append(CheckReport("second-bianchi", not sb, sb))
        for name, res in symmetry_residuals(R).items():
            out.append(CheckReport(name, not res, res))
        rc = tensors.differences(R, self.R_commutator)
        out.append(CheckReport("gauss=commutator", not rc, rc))
        return out
