"""Boolean max-product semiring on incidence matrices.

Composition is left-to-right: ``(i, j)`` is in ``compose(r, s)`` iff some
``m`` has ``(i, m)`` in ``r`` and ``(m, j)`` in ``s``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

from .relcore import IndexSet, Relation, RelationError, _check_same, iter_bits


class EmptyFactorList(RelationError):
    pass


def empty(ix: IndexSet) -> Relation:
    return Relation(ix, [0] * ix.size)


def identity(ix: IndexSet) -> Relation:
    return Relation(ix, [1 << i for i in range(ix.size)])


def full(ix: IndexSet) -> Relation:
    return Relation(ix, [ix.full_mask] * ix.size)


def compose(r: Relation, s: Relation) -> Relation:
    """Max-product ``r (.) s``: row i of the result ORs the rows of ``s``
    selected by row i of ``r``."""
    ix = _check_same(r, s)
    srows = s.rows
    out = []
    for row in r.rows:
        acc = 0
        for k in iter_bits(row):
            acc |= srows[k]
        out.append(acc)
    return Relation(ix, out)


def union(r: Relation, s: Relation) -> Relation:
    ix = _check_same(r, s)
    return Relation(ix, [a | b for a, b in zip(r.rows, s.rows)])


def difference(r: Relation, s: Relation) -> Relation:
    """Entries of ``r`` not in ``s``. Only used to build ``Δ ∪ (S \\ R)``."""
    ix = _check_same(r, s)
    return Relation(ix, [a & ~b for a, b in zip(r.rows, s.rows)])


def is_reflexive(r: Relation) -> bool:
    return all(row >> i & 1 for i, row in enumerate(r.rows))


def is_transitive(r: Relation) -> bool:
    return compose(r, r).issubset(r)


class ProductIndexSet(IndexSet):
    """Carrier of a Cartesian product: all label tuples, first factor most
    significant. Labels render as ``(a,b,...)``; nested product factors are
    flattened into the tuple."""

    __slots__ = ("factors", "tuples")

    def __init__(self, factors: Sequence[IndexSet]):
        factors = tuple(factors)
        if not factors:
            raise EmptyFactorList("product needs at least one factor")
        parts = [_components(f) for f in factors]
        tuples = [sum(combo, ()) for combo in itertools.product(*parts)]
        super().__init__("(" + ",".join(t) + ")" for t in tuples)
        self.factors = factors
        self.tuples = tuples

    def decode(self, p: int) -> tuple[int, ...]:
        """Position in the product -> per-factor positions."""
        self.label(p)
        out = []
        for f in reversed(self.factors):
            p, q = divmod(p, f.size)
            out.append(q)
        return tuple(reversed(out))

    def encode(self, coords: Sequence[int]) -> int:
        p = 0
        for f, q in zip(self.factors, coords, strict=True):
            p = p * f.size + q
        return p


def _components(ix: IndexSet) -> list[tuple[str, ...]]:
    if isinstance(ix, ProductIndexSet):
        return list(ix.tuples)
    return [(lab,) for lab in ix.labels]


def cartesian_product(factors: Sequence[Relation]) -> Relation:
    """Relation on the product carrier whose entry at (u, v) is the minimum
    over factors of the factor entry at (u_k, v_k)."""
    factors = list(factors)
    if not factors:
        raise EmptyFactorList("product needs at least one factor")
    pix = ProductIndexSet([f.index_set for f in factors])
    # rows[u] is built from per-factor row masks; the mixed-radix expansion of
    # a tuple of masks gives the set of product columns where every factor hits
    sizes = [f.n for f in factors]
    rows = []
    for coords in itertools.product(*(range(s) for s in sizes)):
        cols = [0]
        for f, size, q in zip(factors, sizes, coords):
            hits = list(iter_bits(f.rows[q]))
            cols = [c * size + h for c in cols for h in hits]
            if not cols:
                break
        mask = 0
        for c in cols:
            mask |= 1 << c
        rows.append(mask)
    return Relation(pix, rows)


def product(r: Relation, s: Relation) -> Relation:
    return cartesian_product([r, s])
