"""Solving the relational equation ``R ∘ X = S``.

For each column k of S the solutions split into independent column choices.
Let ``blocked_k`` be the union of the R-row supports over rows i with
``S[i, k] = 0``; no j in ``blocked_k`` may have ``X[j, k] = 1``. Every row i with
``S[i, k] = 1`` then needs some j in ``support(i) - blocked_k`` with
``X[j, k] = 1``. So column k of X is exactly a hitting set, inside the
unblocked rows, of the family ``{support(i) - blocked_k : S[i, k] = 1}``.
The equation is solvable iff none of those sets is empty.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator
from dataclasses import dataclass, field

from .relcore import (
    IndexSet,
    IndexSubset,
    Relation,
    RelationError,
    _check_same,
    converse,
    iter_bits,
)
from .semiring import compose, difference, identity, is_reflexive, is_transitive, union

BigCount = int

# Per-column enumeration filters all subsets of the unblocked rows up to this
# many rows, and switches to pruned depth-first search above it.
ENUM_FILTER_MAX_FREE = 20
# Inclusion-exclusion has 2**len(constraints) terms; above this, count by search.
COUNT_IE_MAX_CONSTRAINTS = 16


class NotInvertible(RelationError):
    pass


class NotFunctional(RelationError):
    pass


class NotApplicable(RelationError):
    """A precondition of the reflexive/transitive shortcut fails."""


class WitnessKind(enum.Enum):
    ZERO_ROW = "LEMMA(i)"
    EQUAL_ROWS = "LEMMA(ii)"
    SINGLETON_ROW = "LEMMA(iii)"
    UNCOVERABLE = "THEOREM4"


_INDEX_NAMES = {
    WitnessKind.ZERO_ROW: ("k", "p"),
    WitnessKind.EQUAL_ROWS: ("k", "l", "p"),
    WitnessKind.SINGLETON_ROW: ("k", "l", "m", "n"),
    WitnessKind.UNCOVERABLE: ("k", "i"),
}


@dataclass(frozen=True)
class UnsolvabilityWitness:
    """Certificate that ``R ∘ X = S`` has no solution.

    ``indices`` are 0-based positions, named per kind:

    * ZERO_ROW ``(k, p)``: row k of R is empty but ``S[k, p] = 1``.
    * EQUAL_ROWS ``(k, l, p)``: rows k and l of R agree, ``S[k, p] != S[l, p]``.
    * SINGLETON_ROW ``(k, l, m, n)``: row k of R is exactly ``{l}``,
      ``R[n, l] = S[k, m] = 1`` and ``S[n, m] = 0``.
    * UNCOVERABLE ``(k, i)``: ``S[i, k] = 1`` but every j in the support of
      row i of R is blocked in column k.
    """

    kind: WitnessKind
    indices: tuple[int, ...]
    index_set: IndexSet = field(compare=False, repr=False)
    dual: bool = False

    def holds(self, r: Relation, s: Relation) -> bool:
        if self.dual:
            r, s = converse(r), converse(s)
        a, b = r.rows, s.rows
        kind, idx = self.kind, self.indices
        if kind is WitnessKind.ZERO_ROW:
            k, p = idx
            return a[k] == 0 and bool(b[k] >> p & 1)
        if kind is WitnessKind.EQUAL_ROWS:
            k, l, p = idx
            return a[k] == a[l] and (b[k] >> p & 1) != (b[l] >> p & 1)
        if kind is WitnessKind.SINGLETON_ROW:
            k, l, m, n = idx
            return (a[k] == 1 << l and bool(a[n] >> l & 1)
                    and bool(b[k] >> m & 1) and not b[n] >> m & 1)
        k, i = idx
        if not b[i] >> k & 1:
            return False
        blocked = _blocked(a, b, k)
        return a[i] & ~blocked == 0

    def render(self) -> str:
        labels = self.index_set.labels
        names = _INDEX_NAMES[self.kind]
        parts = " ".join(f"{nm}={labels[p]}" for nm, p in zip(names, self.indices))
        return f"{self.kind.value} {parts}"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class ColumnSpace:
    """All valid choices for one column of X.

    A column vector is valid iff it is zero on ``forced_zero`` and meets every
    set in ``constraints``.
    """

    column: int
    forced_zero: IndexSubset
    constraints: tuple[IndexSubset, ...]

    @property
    def free(self) -> IndexSubset:
        ix = self.forced_zero.parent
        return IndexSubset(ix, ix.full_mask & ~self.forced_zero.mask)

    def is_valid(self, vec: int) -> bool:
        if vec & self.forced_zero.mask:
            return False
        return all(vec & c.mask for c in self.constraints)

    def count(self) -> BigCount:
        return _count_hitting(self.free.mask, tuple(c.mask for c in self.constraints))

    def vectors(self, filter_max_free: int = ENUM_FILTER_MAX_FREE) -> Iterator[int]:
        """Valid column vectors in increasing numeric order (bit j = row j)."""
        free = self.free.mask
        cons = [c.mask for c in self.constraints]
        if free.bit_count() <= filter_max_free:
            sub = 0
            while True:
                if all(sub & c for c in cons):
                    yield sub
                if sub == free:
                    return
                sub = (sub - free) & free
        else:
            yield from _dfs_vectors(free, cons)

    def render(self, labels: tuple[str, ...] | None = None) -> str:
        ix = self.forced_zero.parent
        labels = labels or ix.labels
        cons = ",".join(str(c) for c in self.constraints)
        return f"col {labels[self.column]}: zero={self.forced_zero} constraints=[{cons}]"


@dataclass(frozen=True)
class SolutionSpace:
    """Every solution X, as an independent choice per column.

    With ``dual`` set the space was built for ``X ∘ R = S`` through converses:
    the columns describe converse(X), and the accessors undo that.
    """

    r_index_set: IndexSet
    columns: tuple[ColumnSpace, ...]
    dual: bool = False

    def count(self) -> BigCount:
        return count_solutions(self)

    def __iter__(self):
        return enumerate_solutions(self)

    def render(self) -> str:
        return "\n".join(c.render() for c in self.columns)

    def __str__(self):
        return self.render()


def _blocked(a, b, k) -> int:
    """Rows of X forced to zero in column k."""
    blocked = 0
    for i, row in enumerate(b):
        if not row >> k & 1:
            blocked |= a[i]
    return blocked


def _absorb(masks) -> list[int]:
    """Drop duplicates and any set that contains another set of the family."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _constraint_order(mask: int):
    return (mask.bit_count(), list(iter_bits(mask)))


def _column_space(ix: IndexSet, a, b, k):
    """ColumnSpace for column k, or the first row i whose requirement is
    unmeetable."""
    blocked = _blocked(a, b, k)
    needs = []
    for i, row in enumerate(b):
        if row >> k & 1:
            allowed = a[i] & ~blocked
            if not allowed:
                return i
            needs.append(allowed)
    cons = sorted(_absorb(needs), key=_constraint_order)
    return ColumnSpace(k, IndexSubset(ix, blocked), tuple(IndexSubset(ix, m) for m in cons))


def solution_space(r: Relation, s: Relation) -> SolutionSpace | UnsolvabilityWitness:
    ix = _check_same(r, s)
    a, b = r.rows, s.rows
    cols = []
    for k in range(ix.size):
        col = _column_space(ix, a, b, k)
        if isinstance(col, int):
            return UnsolvabilityWitness(WitnessKind.UNCOVERABLE, (k, col), ix)
        cols.append(col)
    return SolutionSpace(ix, tuple(cols))


def explain(r: Relation, s: Relation) -> str:
    """Per-row supports of R, then per column k: the zero and one rows of
    column k of S, the blocked rows, and for each one-row i the set of rows
    that could cover it (before absorption)."""
    ix = _check_same(r, s)
    labels = ix.labels
    a, b = r.rows, s.rows
    lines = [f"row {labels[i]}: support={IndexSubset(ix, a[i])}" for i in range(ix.size)]
    for k in range(ix.size):
        ones = s.column(k)
        blocked = _blocked(a, b, k)
        needs = ",".join(f"{labels[i]}:{IndexSubset(ix, a[i] & ~blocked)}" for i in iter_bits(ones))
        lines.append(
            f"col {labels[k]}: s_zero_rows={IndexSubset(ix, ix.full_mask & ~ones)}"
            f" blocked={IndexSubset(ix, blocked)} s_one_rows={IndexSubset(ix, ones)}"
            f" needs=[{needs}]"
        )
    return "\n".join(lines)


# -- counting ---------------------------------------------------------------

def _count_hitting(free: int, cons: tuple[int, ...]) -> BigCount:
    """Number of subsets of ``free`` meeting every mask in ``cons``."""
    if len(cons) <= COUNT_IE_MAX_CONSTRAINTS:
        return _count_ie(free, cons)
    return _count_dfs(free, frozenset(cons))


def _count_ie(free: int, cons: tuple[int, ...]) -> BigCount:
    # sum over T of (-1)^|T| 2^|free - union(T)|, walking subsets of cons
    # depth-first so each union is built incrementally
    total = 0
    m = len(cons)

    def walk(start: int, covered: int, sign: int):
        nonlocal total
        total += sign * (1 << (free & ~covered).bit_count())
        for t in range(start, m):
            walk(t + 1, covered | cons[t], -sign)

    walk(0, 0, 1)
    return total


def _count_dfs(free: int, cons: frozenset) -> BigCount:
    memo: dict = {}

    def rec(free: int, cons: frozenset) -> BigCount:
        if not cons:
            return 1 << free.bit_count()
        key = (free, cons)
        if key in memo:
            return memo[key]
        target = min(cons, key=lambda c: (c.bit_count(), c))
        total = 0
        excluded = 0
        # split on the lowest chosen element of target
        for j in iter_bits(target):
            bit = 1 << j
            rest = set()
            for c in cons:
                if c & bit:
                    continue
                c2 = c & ~excluded
                if not c2:
                    break
                rest.add(c2)
            else:
                total += rec(free & ~excluded & ~bit, frozenset(_absorb(rest)))
            excluded |= bit
        memo[key] = total
        return total

    return rec(free, cons)


def count_solutions(space: SolutionSpace) -> BigCount:
    return math.prod(col.count() for col in space.columns)


# -- enumeration --------------------------------------------------------------

def _dfs_vectors(free: int, cons: list[int]) -> Iterator[int]:
    """Valid vectors in increasing numeric order: decide bits from the highest
    free row down, 0 before 1, pruning once some constraint has no undecided
    row left."""
    order = sorted(iter_bits(free), reverse=True)
    m = len(order)
    # undecided[t] = free rows strictly below order[t]
    undecided = [0] * (m + 1)
    for t in range(m - 1, -1, -1):
        undecided[t] = undecided[t + 1] | (1 << order[t])

    def rec(t: int, vec: int) -> Iterator[int]:
        if t == m:
            yield vec
            return
        low = undecided[t + 1]
        bit = 1 << order[t]
        if all(vec & c or c & low for c in cons):
            yield from rec(t + 1, vec)
        yield from rec(t + 1, vec | bit)

    if all(c & free for c in cons):
        yield from rec(0, 0)


def _assemble(ix: IndexSet, col_vectors, dual: bool) -> Relation:
    rows = [0] * ix.size
    for k, vec in enumerate(col_vectors):
        for j in iter_bits(vec):
            rows[j] |= 1 << k
    x = Relation(ix, rows)
    return converse(x) if dual else x


def enumerate_solutions(space: SolutionSpace, filter_max_free: int = ENUM_FILTER_MAX_FREE) -> Iterator[Relation]:
    """Yield every solution once. Columns combine in odometer order with
    column 0 varying fastest."""
    cols = space.columns
    n = len(cols)
    ix = space.r_index_set
    chosen = [0] * n

    def rec(k: int):
        if k < 0:
            yield _assemble(ix, chosen, space.dual)
            return
        for vec in cols[k].vectors(filter_max_free):
            chosen[k] = vec
            yield from rec(k - 1)

    yield from rec(n - 1)


def greatest_solution(space: SolutionSpace) -> Relation:
    return _assemble(space.r_index_set, [c.free.mask for c in space.columns], space.dual)


def verify(r: Relation, x: Relation, s: Relation) -> bool:
    _check_same(r, x, s)
    return compose(r, x) == s


# -- diagnostics and special cases ---------------------------------------------

def diagnose_unsolvable(r: Relation, s: Relation) -> list[UnsolvabilityWitness]:
    """Scan for the three local obstructions (empty R-row, equal R-rows,
    singleton R-row). An empty result does not imply solvability."""
    ix = _check_same(r, s)
    a, b = r.rows, s.rows
    n = ix.size
    out = []

    def W(kind, *idx):
        out.append(UnsolvabilityWitness(kind, idx, ix))

    for k in range(n):
        if a[k] == 0 and b[k]:
            W(WitnessKind.ZERO_ROW, k, _lowest(b[k]))
    for k in range(n):
        for l in range(k + 1, n):
            if a[k] == a[l] and b[k] != b[l]:
                W(WitnessKind.EQUAL_ROWS, k, l, _lowest(b[k] ^ b[l]))
    for k in range(n):
        if a[k].bit_count() != 1:
            continue
        l = _lowest(a[k])
        for nn in range(n):
            if not a[nn] >> l & 1:
                continue
            for m in iter_bits(b[k] & ~b[nn]):
                W(WitnessKind.SINGLETON_ROW, k, l, m, nn)
    return out


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def function_of(r: Relation) -> list[int] | None:
    """``f`` with row i of r equal to ``{f(i)}``, or None if some row is not a singleton."""
    f = []
    for row in r.rows:
        if row.bit_count() != 1:
            return None
        f.append(_lowest(row))
    return f


def solve_functional(r: Relation, s: Relation) -> SolutionSpace | UnsolvabilityWitness:
    """Solve when every row of r has exactly one 1 (r is the graph of f).

    Row f(i) of X must equal row i of S, so rows k, l with f(k) = f(l) must
    agree in S. Rows of X outside the image of f are unconstrained.
    Raises NotFunctional otherwise.
    """
    ix = _check_same(r, s)
    f = function_of(r)
    if f is None:
        raise NotFunctional("some row of R does not contain exactly one 1")
    b = s.rows
    pinned: dict[int, int] = {}
    for i, fi in enumerate(f):
        if fi in pinned and b[pinned[fi]] != b[i]:
            k = pinned[fi]
            return UnsolvabilityWitness(WitnessKind.EQUAL_ROWS, (k, i, _lowest(b[k] ^ b[i])), ix)
        pinned.setdefault(fi, i)
    cols = []
    for k in range(ix.size):
        zero = 0
        ones = []
        for j, i in sorted(pinned.items()):
            if b[i] >> k & 1:
                ones.append(1 << j)
            else:
                zero |= 1 << j
        cons = tuple(IndexSubset(ix, m) for m in sorted(ones, key=_constraint_order))
        cols.append(ColumnSpace(k, IndexSubset(ix, zero), cons))
    return SolutionSpace(ix, tuple(cols))


def is_permutation(r: Relation) -> bool:
    f = function_of(r)
    return f is not None and len(set(f)) == len(f)


def invert(r: Relation) -> Relation:
    """The max-product inverse, which exists exactly for permutation matrices
    and is then the transpose."""
    if not is_permutation(r):
        raise NotInvertible("every row and every column must contain exactly one 1")
    return converse(r)


def solve_via_inverse(r: Relation, s: Relation) -> Relation:
    _check_same(r, s)
    return compose(invert(r), s)


def shortcut_refl_trans(r: Relation, s: Relation) -> Relation:
    """For reflexive R contained in transitive S, ``Δ ∪ (S - R)`` solves
    ``R ∘ X = S``. Raises NotApplicable naming the first failing condition."""
    ix = _check_same(r, s)
    if not r.issubset(s):
        raise NotApplicable("R is not a subset of S")
    if not is_reflexive(r):
        raise NotApplicable("R is not reflexive")
    if not is_transitive(s):
        raise NotApplicable("S is not transitive")
    return union(identity(ix), difference(s, r))


def solve_right(r: Relation, s: Relation) -> SolutionSpace | UnsolvabilityWitness:
    """Solve ``X ∘ R = S`` as ``converse(R) ∘ Y = converse(S)`` with X = converse(Y)."""
    res = solution_space(converse(r), converse(s))
    if isinstance(res, SolutionSpace):
        return SolutionSpace(res.r_index_set, res.columns, dual=True)
    return UnsolvabilityWitness(res.kind, res.indices, res.index_set, dual=True)
