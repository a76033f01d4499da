import os

import pytest
from hypothesis import HealthCheck, settings

from nicholsdiag.lattice import Bicharacter
from nicholsdiag.scalars import CycloContext

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.abspath(os.path.join(FIXTURES, name))


def cyclo_bichar(N: int, rows) -> Bicharacter:
    """rows hold exponents of z, or None for 1."""
    ctx = CycloContext(N)
    return Bicharacter(ctx, [[ctx.zeta(k) for k in r] for r in rows])


def generic_bichar(rows) -> Bicharacter:
    """rows hold exponents of the parameter q."""
    ctx = CycloContext(1, ("q",))
    q = ctx.param("q")
    return Bicharacter(ctx, [[q**k for k in r] for r in rows])


@pytest.fixture
def a2_zeta3():
    return cyclo_bichar(3, [[1, 2], [0, 1]])


@pytest.fixture
def a2_generic():
    return generic_bichar([[1, -1], [0, 1]])


@pytest.fixture
def b2_generic():
    return generic_bichar([[1, -2], [0, 2]])


@pytest.fixture
def p11_one():
    # p11 = 1, p12 p21 = -1
    return cyclo_bichar(2, [[0, 1], [0, 1]])


# -- acceptance reporting ----------------------------------------------------------

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[marker] = (report.outcome, report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = m.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (outcome, duration) in sorted(_ACCEPTANCE.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}  ({duration:.1f} s)")
