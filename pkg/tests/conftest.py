import pytest

_ACCEPTANCE = {}


class _Reporter:
    def __init__(self, capsys):
        self._capsys = capsys

    def __call__(self, number, title, passed, detail):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
        _ACCEPTANCE[number] = line
        with self._capsys.disabled():
            print("\n" + line)
        return passed


@pytest.fixture
def report(capsys):
    """Record and print one pass/fail line for an acceptance criterion."""
    return _Reporter(capsys)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
