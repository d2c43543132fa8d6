import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


CRITERIA = {
    1: "Kunneth for normalized chains tensor random complexes",
    2: "normalization composite unimodular; N -> M quasi-iso",
    3: "sum totalization preserves levelwise quasi-isos; staircases",
    4: "fat vs thin realization",
    5: "hocolim against independent oracles",
    6: "holim on loop-free categories; loops exit 3",
    7: "window stability",
    8: "engine hygiene",
}
_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(crit, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _outcomes:
            status = "PASS" if all(_outcomes[n]) else "FAIL"
            terminalreporter.write_line(f"{status} criterion {n}: {CRITERIA[n]}")
