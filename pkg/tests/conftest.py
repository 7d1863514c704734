"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

import pytest

_ACCEPT: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    num = getattr(item.function, "criterion", None)
    if num is None or rep.when != "call":
        return
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    status = "PASS" if rep.passed else "FAIL"
    extra = getattr(item, "accept_detail", "")
    _ACCEPT[num] = (status, title, extra)


@pytest.fixture
def accept_detail(request):
    def record(text: str) -> None:
        request.node.accept_detail = text

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPT:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPT):
        status, title, extra = _ACCEPT[num]
        line = f"ACCEPT {num:02d} {status:<4} {title}"
        terminalreporter.write_line(line + (f" | {extra}" if extra else ""))
    passed = sum(1 for s, _, _ in _ACCEPT.values() if s == "PASS")
    terminalreporter.write_line(f"ACCEPT total {passed}/{len(_ACCEPT)} passed")
