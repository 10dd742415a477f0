import contextlib
import time

import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Context manager that records one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash[_RESULTS]

    @contextlib.contextmanager
    def record(number: int, title: str):
        notes: list[str] = []
        start = time.perf_counter()
        try:
            yield notes
        except BaseException as e:
            detail = "; ".join(notes + [f"{type(e).__name__}: {e}".splitlines()[0]])
            lines.append(f"criterion {number} FAIL  {title} [{time.perf_counter() - start:.1f}s] {detail}")
            raise
        detail = "; ".join(notes)
        lines.append(f"criterion {number} PASS  {title} [{time.perf_counter() - start:.1f}s] {detail}")

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_RESULTS]
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
