import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(criterion, ok, detail=""):
        ACCEPTANCE[criterion] = (bool(ok), detail)
        print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
