import pytest

from cnotsynth import BitMatrix, Circuit

WORKED_ROWS = ["110000", "100110", "010010", "111111", "110111", "001110"]

# Fig. 2 style example: G1..G6 in application order, as (control, target)
FIG2_GATES = [(0, 1), (2, 3), (1, 2), (2, 1), (1, 0), (2, 3)]
FIG2_MATRIX = [[1, 0, 1, 0], [0, 0, 1, 0], [1, 1, 1, 0], [1, 1, 0, 1]]

_acceptance_lines: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def worked_matrix():
    return BitMatrix.from_strings(WORKED_ROWS)


@pytest.fixture
def fig2_circuit():
    return Circuit.from_pairs(4, FIG2_GATES)


@pytest.fixture
def fig2_matrix():
    return BitMatrix.from_lists(FIG2_MATRIX)
