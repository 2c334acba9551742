"""Command-line interface: ``relmat VERB FILE... [options]``.

Exit status is 0 on success, 1 for I/O and parse errors, and 2 for a negative
mathematical verdict (unsolvable, not invertible, verification failed, ...).
"""

from __future__ import annotations

import argparse
import functools
import sys
from collections.abc import Sequence

from . import oracle, semiring, solver
from .relcore import (
    Relation,
    RelationError,
    converse,
    format_matrix,
    format_pairs,
    read_relation,
)

OK, ERROR, NEGATIVE = 0, 1, 2

DEFAULT_ENUM_LIMIT = 1024

# verb -> (number of relation files or None for "one or more", help)
VERBS = {
    "compose": (2, "matrix of R∘S"),
    "union": (2, "matrix of R∪S"),
    "product": (None, "Cartesian product of one or more relations"),
    "solve": (2, "decide R∘X=S and print the solution space"),
    "solve-right": (2, "decide X∘R=S and print the solution space of converse(X)"),
    "count": (2, "number of solutions of R∘X=S"),
    "enumerate": (2, "list solutions of R∘X=S in canonical order"),
    "greatest": (2, "largest solution of R∘X=S"),
    "verify": (3, "check R∘X=S for files R X S"),
    "invert": (1, "inverse of a permutation relation"),
    "solve-functional": (2, "solve R∘X=S for R with exactly one 1 per row"),
    "shortcut": (2, "X=Δ∪(S∖R) for reflexive R ⊆ transitive S"),
    "diagnose": (2, "list local obstructions to solvability"),
    "oracle": (2, "brute-force all solutions (test tooling; small n only)"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


@functools.lru_cache(maxsize=1)
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relmat", description="Binary relations as 0/1 incidence matrices.")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True
    for verb, (arity, helptext) in VERBS.items():
        sp = sub.add_parser(verb, help=helptext, description=helptext)
        sp.add_argument("files", nargs="+" if arity is None else arity, metavar="FILE")
        sp.add_argument("--input-format", choices=["mat", "pairs"], default=None,
                        help="force the input format (default: by extension, .pairs or matrix)")
        if verb in ("solve", "solve-right", "solve-functional"):
            sp.add_argument("--explain", action="store_true",
                            help="also print row supports and blocked rows per column")
        if verb in ("enumerate", "oracle"):
            sp.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT,
                            help="stop after N solutions; 0 means unlimited (default %(default)s)")
        if verb == "oracle":
            sp.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N)
        sp.add_argument("--format", choices=["mat", "pairs"], default="mat",
                        help="output format for relations")
    return p


def _render(r: Relation, fmt: str) -> str:
    return format_pairs(r) if fmt == "pairs" else format_matrix(r)


def _emit_many(out, rels, fmt, limit) -> int:
    shown = 0
    for x in rels:
        if limit and shown >= limit:
            print(f"relmat: stopped after {limit} solutions (use --limit 0 for all)", file=sys.stderr)
            break
        if shown:
            out.write("\n")
        out.write(_render(x, fmt))
        shown += 1
    return shown


def _solve_report(out, res, explain_text: str | None) -> int:
    if isinstance(res, solver.UnsolvabilityWitness):
        out.write("UNSOLVABLE\n")
        if explain_text:
            out.write(explain_text + "\n")
        out.write(res.render() + "\n")
        return NEGATIVE
    out.write("SOLVABLE\n")
    if explain_text:
        out.write(explain_text + "\n")
    if res.columns:
        out.write(res.render() + "\n")
    return OK


def dispatch(args, out) -> int:
    rels = [read_relation(f, args.input_format) for f in args.files]
    verb = args.verb
    fmt = args.format

    if verb == "compose":
        out.write(_render(semiring.compose(*rels), fmt))
    elif verb == "union":
        out.write(_render(semiring.union(*rels), fmt))
    elif verb == "product":
        out.write(_render(semiring.cartesian_product(rels), fmt))
    elif verb == "verify":
        r, x, s = rels
        ok = solver.verify(r, x, s)
        out.write("OK\n" if ok else "FAIL\n")
        return OK if ok else NEGATIVE
    elif verb == "invert":
        try:
            out.write(_render(solver.invert(rels[0]), fmt))
        except solver.NotInvertible:
            out.write("NOT INVERTIBLE\n")
            return NEGATIVE
    elif verb == "diagnose":
        found = solver.diagnose_unsolvable(*rels)
        for w in found:
            out.write(w.render() + "\n")
        return NEGATIVE if found else OK
    elif verb == "shortcut":
        try:
            out.write(_render(solver.shortcut_refl_trans(*rels), fmt))
        except solver.NotApplicable as exc:
            out.write(f"NOT APPLICABLE: {exc}\n")
            return NEGATIVE
    elif verb == "oracle":
        sols = oracle.brute_force_solutions(*rels, max_n=args.max_n)
        ordered = sorted(sols, key=_canonical_key)
        _emit_many(out, ordered, fmt, args.limit)
        return OK if sols else NEGATIVE
    elif verb == "solve-functional":
        try:
            res = solver.solve_functional(*rels)
        except solver.NotFunctional:
            out.write("NOT FUNCTIONAL\n")
            return NEGATIVE
        return _solve_report(out, res, solver.explain(*rels) if args.explain else None)
    else:
        r, s = rels
        if verb == "solve-right":
            res = solver.solve_right(r, s)
            text = solver.explain(converse(r), converse(s)) if args.explain else None
            return _solve_report(out, res, text)
        res = solver.solution_space(r, s)
        if verb == "solve":
            return _solve_report(out, res, solver.explain(r, s) if args.explain else None)
        if isinstance(res, solver.UnsolvabilityWitness):
            if verb == "count":
                out.write("0\n")
            elif verb == "greatest":
                out.write("UNSOLVABLE\n" + res.render() + "\n")
            return NEGATIVE
        if verb == "count":
            out.write(f"{solver.count_solutions(res)}\n")
        elif verb == "greatest":
            out.write(_render(solver.greatest_solution(res), fmt))
        elif verb == "enumerate":
            _emit_many(out, solver.enumerate_solutions(res), fmt, args.limit)
    return OK


def _canonical_key(x: Relation):
    # the order enumerate_solutions uses: column vectors compared from the
    # last column (slowest) to column 0 (fastest)
    return tuple(x.column(k) for k in reversed(range(x.n)))


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return dispatch(args, out)
    except OSError as exc:
        print(f"relmat: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return ERROR
    except RelationError as exc:
        print(f"relmat: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
