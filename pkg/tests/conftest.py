import pytest

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    n = mark.args[0]
    prev = _ACCEPTANCE.get(n, ("PASS", ""))[0]
    if rep.when == "call" or rep.failed:
        status = "FAIL" if rep.failed or prev == "FAIL" else "PASS"
        _ACCEPTANCE[n] = (status, item.name if status == "FAIL" and rep.failed
                          else _ACCEPTANCE.get(n, ("", ""))[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, failing = _ACCEPTANCE[n]
        extra = f"  (failing: {failing})" if failing else ""
        terminalreporter.write_line(f"criterion {n}: {status}{extra}")
