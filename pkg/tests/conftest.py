import pytest

from hypercurves.agraph import AmbientContext

# filled by tests/test_acceptance.py: criterion id -> (passed, detail)
ACCEPTANCE = {}


@pytest.fixture
def ctx_8_7():
    return AmbientContext(8, 7)


@pytest.fixture
def acceptance(request):
    """Record a criterion's outcome; the line is printed in the terminal summary."""
    name = request.node.name

    def record(passed, detail=""):
        ACCEPTANCE[name] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
