import pytest
from hypothesis import HealthCheck, settings

from kpalgebra import Curvature, LevelSet, TangentGeometry, flat_structure, parse_expr, surface_structure

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

XYZ = ["x", "y", "z"]


def _geometry(S):
    S.validate()
    return TangentGeometry(S)


def levelset(text):
    return LevelSet(parse_expr(text, XYZ))


@pytest.fixture(scope="session")
def sphere():
    return _geometry(surface_structure(LevelSet.sphere(1)))


@pytest.fixture(scope="session")
def sphere4():
    return _geometry(surface_structure(LevelSet.sphere(4)))


@pytest.fixture(scope="session")
def ellipsoid():
    return _geometry(surface_structure(levelset("x^2 + 2*y^2 + 3*z^2 - 1")))


@pytest.fixture(scope="session")
def flat11():
    return _geometry(flat_structure(1, 1))


@pytest.fixture(scope="session")
def flat22():
    return _geometry(flat_structure(2, 2))


@pytest.fixture(scope="session")
def curvatures(sphere, ellipsoid, flat11):
    """Shared curvature objects so expensive tensors are built once per run."""
    return {"sphere": Curvature(sphere), "ellipsoid": Curvature(ellipsoid),
            "flat": Curvature(flat11)}


@pytest.fixture(scope="session", params=["sphere", "flat11", "ellipsoid"])
def any_geometry(request):
    return request.getfixturevalue(request.param)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {note}")
