import pytest

from e6compact import builder

_LINES = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def tensor():
    return builder.canonical_tensor()


@pytest.fixture
def acceptance(request):
    """Record one summary line per acceptance criterion."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(n: int, ok: bool, detail: str, elapsed: float | None = None, budget: float | None = None):
        timing = ""
        if elapsed is not None:
            timing = f" [{elapsed:.2f}s" + (f" / budget {budget:g}s]" if budget else "]")
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}{timing}"
        lines.append((n, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
