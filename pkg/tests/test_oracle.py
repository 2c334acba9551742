import random

import pytest

from conftest import EX1_R_PAIRS, EX1_S_PAIRS, EX1_SOLUTIONS, all_relations, random_relation, rel
from relmat import IndexSet, compose
from relmat.oracle import TooLarge, brute_force_solutions, naive_compose, transitive_closure
from relmat.semiring import identity, is_transitive, union


def test_brute_force_example1():
    r, s = rel(3, EX1_R_PAIRS), rel(3, EX1_S_PAIRS)
    assert brute_force_solutions(r, s) == {rel(3, x) for x in EX1_SOLUTIONS}


def test_brute_force_identity():
    rng = random.Random(1)
    for n in range(4):
        s = random_relation(rng, n)
        assert brute_force_solutions(identity(s.index_set), s) == {s}


def test_brute_force_cap():
    r = identity(IndexSet.default(5))
    with pytest.raises(TooLarge):
        brute_force_solutions(r, r)
    # n=0 has exactly one candidate, the empty relation
    e = identity(IndexSet.default(0))
    assert brute_force_solutions(e, e) == {e}


def test_brute_force_is_defined_by_naive_compose():
    rng = random.Random(2)
    for _ in range(30):
        r, s = random_relation(rng, 2), random_relation(rng, 2)
        sols = brute_force_solutions(r, s)
        for x in sols:
            assert naive_compose(r, x) == s
        # the complement: every other candidate fails
        assert sum(1 for x in all_relations(2) if naive_compose(r, x) == s) == len(sols)


def test_brute_force_right():
    r, s = rel(3, EX1_R_PAIRS), rel(3, EX1_S_PAIRS)
    for x in brute_force_solutions(r, s, right=True):
        assert naive_compose(x, r) == s


def test_naive_compose_examples():
    r, s = rel(3, EX1_R_PAIRS), rel(3, EX1_S_PAIRS)
    assert naive_compose(r, rel(3, EX1_SOLUTIONS[0])) == s
    assert naive_compose(r, identity(r.index_set)) == r


def test_transitive_closure():
    rng = random.Random(3)
    for _ in range(50):
        r = random_relation(rng, rng.randint(0, 5), 0.3)
        t = transitive_closure(r)
        assert r.issubset(t) and is_transitive(t)
        # least such relation: the union of the powers r, r^2, ..., r^n
        acc, power = r, r
        for _ in range(r.n):
            power = compose(power, r)
            acc = union(acc, power)
        assert acc == t
