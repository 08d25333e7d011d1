import itertools

import numpy as np
import pytest

from kpalgebra import LevelSet, RatFunc, equals_mod, generators, parse_expr, tensors
from kpalgebra.errors import NotTangential
from oracles import surface_laplacian_fd

x, y, z = generators(3)
ONE = RatFunc.one(3)


def vec(*entries):
    return tensors.vector(list(entries), len(entries))


def assert_zero(T):
    assert tensors.is_zero(np.asarray(T, dtype=object)), tensors.nonzero_entries(T)[:3]


def assert_equal(A, B):
    assert tensors.equal(A, B), tensors.differences(A, B)[:3]


# d_of

def test_d_of_z_on_sphere(sphere):
    unit = LevelSet.sphere(1)
    d = sphere.d_of(z)
    expected = [-z * x, -z * y, 1 - z * z]
    for i in range(3):
        assert equals_mod(d[i], expected[i], unit)
    assert_equal(d, sphere.d_of_bracket(z))


def test_d_of_constant(sphere):
    assert_zero(sphere.d_of(ONE))


def test_d_of_flat_generator(flat11):
    p1 = RatFunc.gen(3, 0)
    assert_equal(flat11.d_of(p1), vec(1, 0, 0))


# projectors

def test_levelset_normal_projector(ellipsoid):
    grad = ellipsoid.S.gradient(parse_expr("x^2 + 2*y^2 + 3*z^2 - 1", ["x", "y", "z"]))
    g2 = ellipsoid.gamma2
    for i, k in itertools.product(range(3), repeat=2):
        assert ellipsoid.Pi[i, k].equals(grad[i] * grad[k] / g2)


def test_flat_projector_diagonal(flat22):
    expected = np.diag([1, 1, 1, 1, 0, 0])
    assert_equal(flat22.D, tensors.tensor(expected, 6))


def test_projector_identities(any_geometry):
    rep = any_geometry.projector_check()
    assert rep.ok, rep.lines()


# project

def test_radial_field(sphere):
    X = vec(x, y, z)
    assert_zero(sphere.project(X, "tangent"))
    assert_equal(sphere.project(X, "normal"), X)


def test_rotation_field_is_tangent(sphere):
    X = vec(-y, x, 0)
    assert_equal(sphere.project(X), X)


def test_flat_normal_direction(flat11):
    assert_zero(flat11.project(vec(0, 0, 1)))


def test_tangent_normal_orthogonal(ellipsoid):
    X = vec(x * y, 1, z)
    assert tensors.dot(ellipsoid.project(X, "tangent"), ellipsoid.project(X, "normal")).is_zero()
    T = ellipsoid.project(X)
    assert_equal(ellipsoid.project(T), T)


# lie bracket

def test_rotation_commutator(sphere):
    X, Y = vec(-y, x, 0), vec(0, -z, y)
    assert_equal(sphere.lie_bracket(X, Y), vec(-z, 0, x))
    assert_zero(sphere.lie_bracket(X, X))


def test_flat_coordinate_fields_commute(flat11):
    assert_zero(flat11.lie_bracket(vec(1, 0, 0), vec(0, 1, 0)))


def test_lie_bracket_requires_tangent(sphere):
    with pytest.raises(NotTangential):
        sphere.lie_bracket(vec(1, 0, 0), vec(-y, x, 0))


# covariant derivative

def test_leibniz_on_sphere(sphere):
    X, Y = sphere.spanning_fields()[0], vec(-y, x, 0)
    u = x * y
    lhs = sphere.covariant_derivative(X, Y * u)
    rhs = Y * sphere.apply(X, u) + sphere.covariant_derivative(X, Y) * u
    assert_equal(lhs, rhs)


def test_nabla_of_projector_vanishes(any_geometry):
    assert_zero(any_geometry.nabla(any_geometry.D))


def test_flat_nabla_is_partial(flat11):
    p, q = RatFunc.gen(3, 0), RatFunc.gen(3, 1)
    Y = vec(p * q, q * q, 0)
    N = flat11.nabla(Y)
    for i in range(2):
        for k in range(3):
            assert N[i, k].equals(Y[k].partial(i))


def test_nabla_refuses_normal_tensor(sphere):
    with pytest.raises(NotTangential):
        sphere.nabla(vec(x, y, z))


# laplacian

def test_laplacian_degree_one_harmonic(sphere, sphere4):
    assert equals_mod(sphere.laplacian(z), -2 * z, LevelSet.sphere(1))
    assert equals_mod(sphere4.laplacian(z), -z / 2, LevelSet.sphere(4))
    assert sphere.laplacian(ONE).is_zero()


@pytest.mark.parametrize("expr", ["x*y", "z^3", "x^2 - y*z", "x*y*z + y"])
def test_laplacian_matches_finite_differences(sphere, expr):
    u = parse_expr(expr, ["x", "y", "z"])
    lap = sphere.laplacian(u)
    rng = np.random.default_rng(7)
    for _ in range(5):
        p = rng.standard_normal(3)
        p /= np.linalg.norm(p)
        ref = surface_laplacian_fd(lambda a, b, c: u.evaluate([a, b, c]), p)
        assert lap.evaluate(list(p)) == pytest.approx(ref, abs=1e-5)


def test_divergence_and_laplacian_cross_checks(any_geometry):
    g = any_geometry
    u = RatFunc.gen(3, 0) * RatFunc.gen(3, 1) + RatFunc.gen(3, 2)
    assert g.laplacian(u).equals(g.laplacian_div_grad(u))
    for X in g.spanning_fields():
        assert g.divergence(X).equals(g.divergence_projected(X))


def test_divergence_requires_tangent(sphere):
    with pytest.raises(NotTangential):
        sphere.divergence(vec(1, 0, 0))


# structural identities on spanning fields

BATTERY = [RatFunc.gen(3, 0) ** a * RatFunc.gen(3, 1) ** b * RatFunc.gen(3, 2) ** c
           for a, b, c in itertools.product(range(4), repeat=3) if a + b + c <= 3]


def test_dd_symmetric(any_geometry):
    for u in BATTERY:
        assert_zero(any_geometry.dd_symmetric_residual(u))


def test_torsion_free_and_metric(any_geometry):
    g = any_geometry
    cols = g.spanning_fields()
    cd = g.covariant_derivative
    for X, Y in itertools.product(cols, repeat=2):
        assert_zero(cd(X, Y) - cd(Y, X) - g.lie_bracket(X, Y))
        for Z in cols:
            lhs = g.apply(X, tensors.dot(Y, Z))
            rhs = tensors.dot(cd(X, Y), Z) + tensors.dot(Y, cd(X, Z))
            assert lhs.equals(rhs)


def test_lie_bracket_closure(any_geometry):
    cols = any_geometry.spanning_fields()
    for X, Y in itertools.combinations(cols, 2):
        assert any_geometry.is_tangential(any_geometry.lie_bracket(X, Y))


def test_codazzi_mainardi(any_geometry):
    for col in range(any_geometry.m):
        assert_zero(any_geometry.codazzi_residual(col))
