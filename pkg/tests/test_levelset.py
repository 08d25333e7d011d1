from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpalgebra import (LevelSet, Poly, RatFunc, constant_mod, equals_mod, generators, normal_form,
                       parse_expr, surface_structure)
from kpalgebra.errors import DegenerateSurface, DenominatorInIdeal

XYZ = ["x", "y", "z"]
x, y, z = generators(3)
UNIT = LevelSet.sphere(1)


def test_sphere_bivector():
    S = surface_structure(LevelSet.sphere(Fraction(9, 4)))
    expected = [[0, 2 * z, -2 * y], [-2 * z, 0, 2 * x], [2 * y, -2 * x, 0]]
    for i in range(3):
        for j in range(3):
            assert S.P[i, j].equals(expected[i][j])


def test_plane_constraint_gives_constant_bracket():
    S = surface_structure(LevelSet(z))
    assert S.P[0, 1].equals(1)
    assert all(S.P[i, j].is_zero() for i, j in [(0, 2), (1, 2)])
    assert S.validate()[-1].ok and S.dimension == 2


def test_constant_constraint_rejected():
    with pytest.raises(DegenerateSurface):
        LevelSet(RatFunc.const(3, 5))


def test_three_generators_required():
    with pytest.raises(ValueError):
        LevelSet(Poly.gen(2, 0))


def test_normal_form_examples():
    assert normal_form(x * x + y * y + z * z, UNIT).equals(1)
    four = LevelSet.sphere(4)
    assert normal_form(4 * (x * x + y * y + z * z), four).equals(16)
    z4 = normal_form(z ** 4, UNIT)
    assert normal_form(z4, UNIT).equals(z4)


def test_normal_form_eliminates_leading_monomial():
    nf = normal_form(x ** 5 * y + x * x * z, UNIT)
    assert all(e[0] <= 1 for e in nf.num.terms)


def test_denominator_in_ideal():
    C = x * x + y * y + z * z - 1
    with pytest.raises(DenominatorInIdeal):
        normal_form(x / C, UNIT)


def test_equals_mod_examples():
    r2 = Fraction(9, 4)
    L = LevelSet.sphere(r2)
    assert equals_mod(x * x + y * y + z * z, RatFunc.const(3, r2), L)
    assert not equals_mod(x, y, UNIT)


def test_constant_mod():
    assert constant_mod(RatFunc.const(3, 2) / (x * x + y * y + z * z), UNIT) == 2
    assert constant_mod(x, UNIT) is None


def test_casimir_battery():
    C = parse_expr("x^2 + 2*y^2 + 3*z^2 - 1", XYZ)
    S = surface_structure(LevelSet(C))
    for f in (x, x * y, z ** 3, (x + y) / (z + 2), x * x * y - z):
        assert S.bracket(f, C).is_zero()


small = st.integers(-3, 3)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.builds(lambda t: RatFunc(Poly(3, t)), st.dictionaries(exps, small, max_size=4))
SPHERE = surface_structure(UNIT)


@given(polys, polys)
def test_bracket_descends_to_quotient(u, v):
    lhs = SPHERE.bracket(u, v)
    rhs = SPHERE.bracket(normal_form(u, UNIT), normal_form(v, UNIT))
    assert equals_mod(lhs, rhs, UNIT)


@given(polys, polys)
def test_normal_form_linear_and_idempotent(u, v):
    nu, nv = normal_form(u, UNIT), normal_form(v, UNIT)
    assert normal_form(u + v, UNIT).equals(nu + nv)
    assert normal_form(nu, UNIT).equals(nu)
    assert equals_mod(u, nu, UNIT)
