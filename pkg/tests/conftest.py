import pytest

_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        title = (item.function.__doc__ or item.name).strip()
        _ACCEPTANCE.append(("PASS" if report.passed else "FAIL", title))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, title in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {title}")
