"""Exact almost Kahler-Poisson algebras over Q(i)(x1, ..., xm)."""

from .curvature import Curvature, riemann_commutator, riemann_gauss
from .errors import *  # noqa: F401,F403
from .field import GaussRat, I, Poly, RatFunc, generators, monomial
from .geometry import TangentGeometry
from .levelset import LevelSet, constant_mod, equals_mod, normal_form, surface_structure
from .parsing import parse_expr
from .poisson import CheckReport, PoissonStructure, flat_structure
from .problem import ProblemFile, load_problem, parse_problem
from .spectral import SpectralProblem, assemble, build_basis, gap_check, spectrum
from .state import PiMultiple, SphereState, positivity_surrogate, sphere_moment

__version__ = "0.1.0"

__all__ = [
    "Curvature", "riemann_commutator", "riemann_gauss",
    "GaussRat", "I", "Poly", "RatFunc", "generators", "monomial",
    "TangentGeometry",
    "LevelSet", "constant_mod", "equals_mod", "normal_form", "surface_structure",
    "parse_expr",
    "CheckReport", "PoissonStructure", "flat_structure",
    "ProblemFile", "load_problem", "parse_problem",
    "SpectralProblem", "assemble", "build_basis", "gap_check", "spectrum",
    "PiMultiple", "SphereState", "positivity_surrogate", "sphere_moment",
]
