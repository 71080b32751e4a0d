import pytest

from expanso.constructions import chain_space, discrete_example, indiscrete_example
from expanso.dynamics import Cover


@pytest.fixture
def chain3():
    return chain_space(3)


@pytest.fixture
def cycle3():
    """Discrete three points rotated 0 -> 1 -> 2 -> 0, with two covers."""
    space, f = discrete_example(3, (1, 2, 0))
    two = Cover.from_points(space, [[0, 1], [1, 2]])
    singletons = Cover.from_points(space, [[0], [1], [2]])
    return f, two, singletons


@pytest.fixture
def discrete2():
    return discrete_example(2)


@pytest.fixture
def indiscrete2_swap():
    return indiscrete_example(2, (1, 0))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
