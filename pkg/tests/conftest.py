"""Shared fixtures: the small named graphs every module's examples use."""

from __future__ import annotations

import pytest

from edgesat.graphs import SimpleGraph

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def graph(n: int, *edges: tuple[int, int]) -> SimpleGraph:
    return SimpleGraph.from_edges(n, edges)


@pytest.fixture
def triangle() -> SimpleGraph:
    return graph(3, (1, 2), (1, 3), (2, 3))


@pytest.fixture
def path3() -> SimpleGraph:
    return graph(3, (1, 2), (2, 3))


@pytest.fixture
def square() -> SimpleGraph:
    return graph(4, (1, 2), (2, 3), (3, 4), (1, 4))


@pytest.fixture
def pentagon() -> SimpleGraph:
    return graph(5, (1, 2), (2, 3), (3, 4), (4, 5), (1, 5))


@pytest.fixture
def bowtie() -> SimpleGraph:
    # triangles {1,2,3} and {1,4,5} sharing vertex 1
    return graph(5, (1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5))


@pytest.fixture
def tailed_triangle() -> SimpleGraph:
    # five vertices: a triangle with a path hanging off it
    return graph(5, (1, 2), (1, 3), (2, 3), (3, 4), (4, 5))
