"""Finite binary relations as 0/1 incidence matrices, and the equation R∘X=S."""

from .relcore import (
    DuplicateElement,
    IndexOutOfRange,
    IndexSet,
    IndexSetMismatch,
    IndexSubset,
    NonBinaryEntry,
    NonSquare,
    ParseError,
    Relation,
    RelationError,
    UnknownLabel,
    contains,
    converse,
    format_matrix,
    format_pairs,
    parse_matrix,
    parse_pairs,
    read_relation,
    relation_from_matrix,
    relation_from_pairs,
    row_set,
    write_relation,
)
from .semiring import (
    EmptyFactorList,
    ProductIndexSet,
    cartesian_product,
    compose,
    empty,
    identity,
    product,
    union,
)
from .solver import (
    BigCount,
    ColumnSpace,
    NotApplicable,
    NotFunctional,
    NotInvertible,
    SolutionSpace,
    UnsolvabilityWitness,
    WitnessKind,
    count_solutions,
    diagnose_unsolvable,
    enumerate_solutions,
    greatest_solution,
    invert,
    shortcut_refl_trans,
    solution_space,
    solve_functional,
    solve_right,
    solve_via_inverse,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "DuplicateElement",
    "IndexOutOfRange",
    "IndexSet",
    "IndexSetMismatch",
    "IndexSubset",
    "NonBinaryEntry",
    "NonSquare",
    "ParseError",
    "Relation",
    "RelationError",
    "UnknownLabel",
    "contains",
    "converse",
    "format_matrix",
    "format_pairs",
    "parse_matrix",
    "parse_pairs",
    "read_relation",
    "relation_from_matrix",
    "relation_from_pairs",
    "row_set",
    "write_relation",
    "EmptyFactorList",
    "ProductIndexSet",
    "cartesian_product",
    "compose",
    "empty",
    "identity",
    "product",
    "union",
    "BigCount",
    "ColumnSpace",
    "NotApplicable",
    "NotFunctional",
    "NotInvertible",
    "SolutionSpace",
    "UnsolvabilityWitness",
    "WitnessKind",
    "count_solutions",
    "diagnose_unsolvable",
    "enumerate_solutions",
    "greatest_solution",
    "invert",
    "shortcut_refl_trans",
    "solution_space",
    "solve_functional",
    "solve_right",
    "solve_via_inverse",
    "verify",
]
