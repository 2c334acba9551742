import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from relmat import IndexSet, Relation, relation_from_pairs

DATA = Path(__file__).parent / "data"

EX1_R_PAIRS = [(1, 2), (2, 1), (3, 2), (3, 3)]
EX1_S_PAIRS = [(1, 1), (1, 2), (3, 1), (3, 2)]
EX1_SOLUTIONS = [
    [(2, 1), (2, 2)],
    [(2, 1), (2, 2), (3, 1)],
    [(2, 1), (2, 2), (3, 2)],
    [(2, 1), (2, 2), (3, 1), (3, 2)],
]


def rel(n, pairs):
    return relation_from_pairs(range(1, n + 1), pairs)


@pytest.fixture
def ex1():
    return rel(3, EX1_R_PAIRS), rel(3, EX1_S_PAIRS)


def random_relation(rng: random.Random, n: int, density: float = 0.5) -> Relation:
    ix = IndexSet.default(n)
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < density:
                row |= 1 << j
        rows.append(row)
    return Relation(ix, rows)


def all_relations(n: int):
    ix = IndexSet.default(n)
    for pattern in range(1 << (n * n)):
        yield Relation(ix, [(pattern >> (i * n)) & ((1 << n) - 1) for i in range(n)])


@st.composite
def relations(draw, n=None, min_n=0, max_n=6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Relation(IndexSet.default(n), rows)


@st.composite
def relation_tuples(draw, k, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(relations(n=n)) for _ in range(k))


# -- acceptance report --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
