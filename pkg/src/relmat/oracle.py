"""Brute-force reference implementations for tests.

Everything here works on Python sets of position pairs and never touches the
bit-parallel composition kernel.
"""

from __future__ import annotations

from collections import defaultdict

from .relcore import Relation, RelationError, _check_same

DEFAULT_MAX_N = 4


class TooLarge(RelationError):
    pass


def _pairs(r: Relation) -> set[tuple[int, int]]:
    n = r.n
    return {(i, j) for i in range(n) for j in range(n) if r.bit(i, j)}


def _from_pairs(ix, pairs) -> Relation:
    rows = [0] * ix.size
    for i, j in pairs:
        rows[i] |= 1 << j
    return Relation(ix, rows)


def _set_compose(rp, sp) -> set[tuple[int, int]]:
    succ = defaultdict(list)
    for m, l in sp:
        succ[m].append(l)
    return {(k, l) for k, m in rp for l in succ.get(m, ())}


def naive_compose(r: Relation, s: Relation) -> Relation:
    """{(k, l) : exists m with (k, m) in r and (m, l) in s}, by a triple loop."""
    ix = _check_same(r, s)
    n = ix.size
    out = set()
    for k in range(n):
        for l in range(n):
            for m in range(n):
                if r.bit(k, m) and s.bit(m, l):
                    out.add((k, l))
                    break
    return _from_pairs(ix, out)


def brute_force_solutions(r: Relation, s: Relation, max_n: int = DEFAULT_MAX_N,
                          right: bool = False) -> set[Relation]:
    """All X with R∘X = S (or X∘R = S when ``right``), trying every one of the
    2**(n*n) candidate relations."""
    ix = _check_same(r, s)
    n = ix.size
    if n > max_n:
        raise TooLarge(f"n={n} exceeds the brute-force cap {max_n}")
    rp, target = _pairs(r), _pairs(s)
    cells = [(i, j) for i in range(n) for j in range(n)]
    found = set()
    for pattern in range(1 << (n * n)):
        xp = {cells[t] for t in range(n * n) if pattern >> t & 1}
        got = _set_compose(xp, rp) if right else _set_compose(rp, xp)
        if got == target:
            found.add(_from_pairs(ix, xp))
    return found


def transitive_closure(r: Relation) -> Relation:
    """Warshall's algorithm on a boolean table."""
    n = r.n
    t = [[bool(r.bit(i, j)) for j in range(n)] for i in range(n)]
    for m in range(n):
        for i in range(n):
            if t[i][m]:
                for j in range(n):
                    if t[m][j]:
                        t[i][j] = True
    return _from_pairs(r.index_set, [(i, j) for i in range(n) for j in range(n) if t[i][j]])
