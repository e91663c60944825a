import pytest

from spinweave.spins import CouplingPath
from spinweave.wiring import AssignmentPolicy

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = getattr(report, "acceptance_label", None)
    if label is not None:
        _acceptance.append((label, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance_label = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_acceptance, key=lambda x: int(x[0].split(".")[0])):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture
def three_qubit_path():
    return CouplingPath.parse("1/2,1,1/2")


@pytest.fixture
def three_qubit_policy():
    # sigma-minus on detectors 1 and 3, sigma-plus on 2; emitter 3 wired to (3, 2)
    return AssignmentPolicy.explicit("-+-", {3: (3, 2)})
