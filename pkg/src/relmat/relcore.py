"""Index sets, the bit-packed Relation type and the flat file formats."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


class RelationError(ValueError):
    pass


class UnknownLabel(RelationError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class DuplicateElement(RelationError):
    pass


class NonSquare(RelationError):
    pass


class NonBinaryEntry(RelationError):
    pass


class IndexOutOfRange(RelationError, IndexError):
    pass


class IndexSetMismatch(RelationError):
    pass


class ParseError(RelationError):
    """Malformed relation file; carries the source name and 1-based line."""

    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line
        self.message = message


class IndexSet:
    """Finite ordered carrier set. Labels are text; positions are 0-based."""

    __slots__ = ("labels", "_pos")

    def __init__(self, labels: Iterable):
        labels = tuple(str(x) for x in labels)
        pos = {}
        for p, lab in enumerate(labels):
            if lab in pos:
                raise DuplicateElement(f"duplicate element {lab!r}")
            pos[lab] = p
        self.labels = labels
        self._pos = pos

    @classmethod
    def default(cls, n: int) -> IndexSet:
        return cls(str(i) for i in range(1, n + 1))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return str(label) in self._pos

    def position(self, label) -> int:
        try:
            return self._pos[str(label)]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def label(self, p: int) -> str:
        if not 0 <= p < len(self.labels):
            raise IndexOutOfRange(f"position {p} out of range for size {len(self.labels)}")
        return self.labels[p]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def __eq__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"IndexSet({list(self.labels)!r})"


def iter_bits(mask: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class IndexSubset:
    """A subset of an IndexSet stored as a bit mask (bit p = position p)."""

    __slots__ = ("parent", "mask")

    def __init__(self, parent: IndexSet, mask: int = 0):
        if mask < 0 or mask >> parent.size:
            raise IndexOutOfRange("subset mask has bits outside the index set")
        self.parent = parent
        self.mask = mask

    @classmethod
    def from_labels(cls, parent: IndexSet, labels: Iterable) -> IndexSubset:
        mask = 0
        for lab in labels:
            mask |= 1 << parent.position(lab)
        return cls(parent, mask)

    def positions(self) -> list[int]:
        return list(iter_bits(self.mask))

    def labels(self) -> list[str]:
        return [self.parent.labels[p] for p in iter_bits(self.mask)]

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, p):
        return isinstance(p, int) and p >= 0 and bool(self.mask >> p & 1)

    def __eq__(self, other):
        if not isinstance(other, IndexSubset):
            return NotImplemented
        return self.parent == other.parent and self.mask == other.mask

    def __hash__(self):
        return hash((self.parent, self.mask))

    def __str__(self):
        return "{" + ",".join(self.labels()) + "}"

    def __repr__(self):
        return f"IndexSubset({str(self)})"


class Relation:
    """A binary relation on a finite IndexSet, stored as its incidence matrix.

    Row ``i`` is an int whose bit ``j`` is the entry at (i, j). Instances are
    immutable.
    """

    __slots__ = ("index_set", "rows")

    def __init__(self, index_set: IndexSet, rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != index_set.size:
            raise NonSquare(f"expected {index_set.size} rows, got {len(rows)}")
        full = index_set.full_mask
        for r in rows:
            if r < 0 or r & ~full:
                raise NonSquare("row has bits outside the index set")
        object.__setattr__(self, "index_set", index_set)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")

    @property
    def n(self) -> int:
        return self.index_set.size

    def bit(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def column(self, j: int) -> int:
        """Column ``j`` as a mask over row positions."""
        col = 0
        for i, row in enumerate(self.rows):
            if row >> j & 1:
                col |= 1 << i
        return col

    def pair_positions(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                yield i, j

    def to_pairs(self) -> list[tuple[str, str]]:
        labels = self.index_set.labels
        return [(labels[i], labels[j]) for i, j in self.pair_positions()]

    def to_matrix(self) -> list[list[int]]:
        n = self.n
        return [[row >> j & 1 for j in range(n)] for row in self.rows]

    def issubset(self, other: Relation) -> bool:
        _check_same(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __len__(self):
        return sum(row.bit_count() for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.rows == other.rows and self.index_set == other.index_set

    def __hash__(self):
        return hash((self.index_set, self.rows))

    def __repr__(self):
        return f"Relation({self.index_set.labels!r}, {self.to_pairs()!r})"


def _check_same(*rels: Relation) -> IndexSet:
    ix = rels[0].index_set
    for r in rels[1:]:
        if r.index_set != ix:
            raise IndexSetMismatch("relations are over different index sets")
    return ix


def relation_from_pairs(elements: Iterable, pairs: Iterable[tuple]) -> Relation:
    ix = elements if isinstance(elements, IndexSet) else IndexSet(elements)
    rows = [0] * ix.size
    for a, b in pairs:
        rows[ix.position(a)] |= 1 << ix.position(b)
    return Relation(ix, rows)


def relation_from_matrix(rows: Sequence[Sequence[int]], elements: Iterable | None = None) -> Relation:
    n = len(rows)
    packed = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NonSquare(f"row {i + 1} has {len(row)} entries, expected {n}")
        bits = 0
        for j, v in enumerate(row):
            if v not in (0, 1):
                raise NonBinaryEntry(f"entry ({i + 1},{j + 1}) is {v!r}, expected 0 or 1")
            if v:
                bits |= 1 << j
        packed.append(bits)
    if elements is None:
        ix = IndexSet.default(n)
    else:
        ix = elements if isinstance(elements, IndexSet) else IndexSet(elements)
        if ix.size != n:
            raise NonSquare(f"{ix.size} elements given for a {n}x{n} matrix")
    return Relation(ix, packed)


def contains(r: Relation, i, j) -> bool:
    ix = r.index_set
    return bool(r.rows[ix.position(i)] >> ix.position(j) & 1)


def converse(r: Relation) -> Relation:
    return Relation(r.index_set, [r.column(j) for j in range(r.n)])


def row_set(r: Relation, i: int) -> IndexSubset:
    if not 0 <= i < r.n:
        raise IndexOutOfRange(f"row {i} out of range for size {r.n}")
    return IndexSubset(r.index_set, r.rows[i])


# -- file formats -------------------------------------------------------------

HEADER = "elements:"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _header_labels(line: str) -> list[str] | None:
    if line.startswith(HEADER):
        return line[len(HEADER):].split()
    return None


def parse_matrix(text: str, source: str = "<string>") -> Relation:
    """Read the matrix format: optional ``elements:`` header, then n rows."""
    labels = None
    header_line = 1
    rows: list[list[int]] = []
    first_row_line = 0
    for lineno, line in _content_lines(text):
        head = _header_labels(line)
        if head is not None:
            if labels is not None or rows:
                raise ParseError(source, lineno, "header must come before the matrix rows")
            labels = head
            header_line = lineno
            continue
        tokens = line.split()
        row = []
        for tok in tokens:
            if tok not in ("0", "1"):
                raise ParseError(source, lineno, f"entry {tok!r} is not 0 or 1")
            row.append(int(tok))
        if rows and len(row) != len(rows[0]):
            raise ParseError(source, lineno, f"row has {len(row)} entries, expected {len(rows[0])}")
        if not rows:
            first_row_line = lineno
        rows.append(row)
    n = len(rows)
    if rows and len(rows[0]) != n:
        raise ParseError(source, first_row_line, f"matrix is not square ({n} rows of {len(rows[0])})")
    if labels is not None and len(labels) != n:
        raise ParseError(source, header_line, f"header lists {len(labels)} elements but matrix has {n} rows")
    try:
        return relation_from_matrix(rows, labels)
    except RelationError as exc:
        raise ParseError(source, header_line, str(exc)) from None


def parse_pairs(text: str, source: str = "<string>") -> Relation:
    """Read the pairs format: required ``elements:`` header, then ``a b`` lines."""
    labels = None
    pairs = []
    ix = None
    for lineno, line in _content_lines(text):
        head = _header_labels(line)
        if head is not None:
            if labels is not None:
                raise ParseError(source, lineno, "duplicate header")
            labels = head
            try:
                ix = IndexSet(labels)
            except DuplicateElement as exc:
                raise ParseError(source, lineno, str(exc)) from None
            continue
        if ix is None:
            raise ParseError(source, lineno, "missing 'elements:' header")
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(source, lineno, f"expected a pair 'a b', got {line!r}")
        for tok in tokens:
            if tok not in ix:
                raise ParseError(source, lineno, f"unknown element {tok!r}")
        pairs.append(tokens)
    if ix is None:
        raise ParseError(source, 1, "missing 'elements:' header")
    return relation_from_pairs(ix, pairs)


def _check_labels(r: Relation):
    for lab in r.index_set.labels:
        if not lab or any(c.isspace() for c in lab):
            raise RelationError(f"label {lab!r} cannot be written to a relation file")


def format_matrix(r: Relation) -> str:
    _check_labels(r)
    lines = [" ".join([HEADER, *r.index_set.labels])]
    for row in r.to_matrix():
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def format_pairs(r: Relation) -> str:
    _check_labels(r)
    lines = [" ".join([HEADER, *r.index_set.labels])]
    lines.extend(f"{a} {b}" for a, b in r.to_pairs())
    return "\n".join(lines) + "\n"


def read_relation(path, fmt: str | None = None) -> Relation:
    """Load a relation file. Format is ``fmt`` or inferred: ``.pairs`` files
    use the pairs format, everything else the matrix format."""
    path = str(path)
    if fmt is None:
        fmt = "pairs" if path.endswith(".pairs") else "mat"
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "pairs":
        return parse_pairs(text, path)
    return parse_matrix(text, path)


def write_relation(path, r: Relation, fmt: str = "mat") -> None:
    text = format_pairs(r) if fmt == "pairs" else format_matrix(r)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
