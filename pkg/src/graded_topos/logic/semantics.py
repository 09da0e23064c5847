"""Finite interpretations and the graded-satisfiability evaluator.

`sat_grade` and `sequent_grade` are the reference recursive evaluators.
The sequent property suite caches satisfaction vectors over the finitely
many relevant assignments and combines them pointwise, which is an order of
magnitude faster; it cross-checks itself against the reference evaluators
on the first instance of every clause.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from ..checks import LawReport
from ..errors import (
    CaptureViolation,
    SchemaError,
    UnboundVariable,
    UndeclaredSymbol,
)
from ..grades import Grade, ONE, ZERO, godel_arrow, inf, sup
from .parser import CONST_PATTERN, IDENT_PATTERN, Signature, VAR_PATTERN
from .syntax import (
    And,
    Bottom,
    Const,
    Equality,
    Exists,
    Formula,
    Func,
    Or,
    Predicate,
    TOP,
    Term,
    Top,
    Var,
    format_formula,
    free_variables,
    substitute,
)


@dataclass(frozen=True)
class Interpretation:
    """Finite domain with constant denotations, function tables, and
    grade-valued predicate tables."""

    domain: tuple[str, ...]
    constants: Mapping[int, str]
    functions: Mapping[str, Mapping[tuple[str, ...], str]]
    predicates: Mapping[str, Mapping[tuple[str, ...], Grade]]

    def __post_init__(self) -> None:
        if not self.domain:
            raise SchemaError("domain", "must be non-empty")
        if len(set(self.domain)) != len(self.domain):
            raise SchemaError("domain", "elements must be distinct")
        pool = set(self.domain)
        for i, d in self.constants.items():
            if d not in pool:
                raise SchemaError("constants", f"c{i} denotes unknown element {d!r}")
        for name, table in self.functions.items():
            self._check_table(name, table, pool, values_in_domain=True)
        for name, table in self.predicates.items():
            self._check_table(name, table, pool, values_in_domain=False)

    def _check_table(self, name: str, table: Mapping, pool: set, values_in_domain: bool) -> None:
        if not IDENT_PATTERN.match(name) or VAR_PATTERN.match(name) or CONST_PATTERN.match(name):
            raise SchemaError(name, "symbol names must be identifiers distinct from xN/cN")
        arities = {len(k) for k in table}
        if len(arities) != 1:
            raise SchemaError(name, "table keys must all have the same arity")
        arity = arities.pop()
        if arity < 1:
            raise SchemaError(name, "arity must be at least 1")
        if len(table) != len(self.domain) ** arity:
            raise SchemaError(name, "table must be total on the domain")
        for key, value in table.items():
            if any(d not in pool for d in key):
                raise SchemaError(name, f"key {key} mentions unknown elements")
            if values_in_domain and value not in pool:
                raise SchemaError(name, f"value {value!r} is outside the domain")

    def signature(self) -> Signature:
        return Signature(
            frozenset(self.constants),
            {name: len(next(iter(table))) for name, table in self.functions.items()},
            {name: len(next(iter(table))) for name, table in self.predicates.items()},
        )


@dataclass(frozen=True)
class Assignment:
    """Values for the finitely many variables a formula mentions."""

    values: Mapping[int, str]

    def get(self, index: int) -> str:
        try:
            return self.values[index]
        except KeyError:
            raise UnboundVariable(index) from None

    def updated(self, index: int, element: str) -> "Assignment":
        fresh = dict(self.values)
        fresh[index] = element
        return Assignment(fresh)

    @classmethod
    def of(cls, **kwargs: str) -> "Assignment":
        return cls({int(k.lstrip("x")): v for k, v in kwargs.items()})


EMPTY_ASSIGNMENT = Assignment({})


def eval_term(interp: Interpretation, assignment: Assignment, t: Term) -> str:
    if isinstance(t, Const):
        try:
            return interp.constants[t.index]
        except KeyError:
            raise UndeclaredSymbol(f"c{t.index}") from None
    if isinstance(t, Var):
        return assignment.get(t.index)
    if isinstance(t, Func):
        try:
            table = interp.functions[t.symbol]
        except KeyError:
            raise UndeclaredSymbol(t.symbol) from None
        return table[tuple(eval_term(interp, assignment, a) for a in t.args)]
    raise TypeError(f"not a term: {t!r}")


def sat_grade(interp: Interpretation, assignment: Assignment, phi: Formula) -> Grade:
    """Grade of satisfaction: predicates by table lookup, top 1, bottom 0,
    crisp equality, min for conjunction, sup for disjunction and the
    existential quantifier."""
    if isinstance(phi, Top):
        return ONE
    if isinstance(phi, Bottom):
        return ZERO
    if isinstance(phi, Predicate):
        try:
            table = interp.predicates[phi.symbol]
        except KeyError:
            raise UndeclaredSymbol(phi.symbol) from None
        return table[tuple(eval_term(interp, assignment, t) for t in phi.args)]
    if isinstance(phi, Equality):
        lhs = eval_term(interp, assignment, phi.lhs)
        rhs = eval_term(interp, assignment, phi.rhs)
        return ONE if lhs == rhs else ZERO
    if isinstance(phi, And):
        a = sat_grade(interp, assignment, phi.lhs)
        b = sat_grade(interp, assignment, phi.rhs)
        return a if a <= b else b
    if isinstance(phi, Or):
        return sup(sat_grade(interp, assignment, f) for f in phi.items)
    if isinstance(phi, Exists):
        return sup(sat_grade(interp, assignment.updated(phi.variable, d), phi.body)
                   for d in interp.domain)
    raise TypeError(f"not a formula: {phi!r}")


def assignments_over(interp: Interpretation, variables: Sequence[int]) -> Iterator[Assignment]:
    """All assignments to the given variables (a single empty one if none)."""
    variables = sorted(variables)
    for combo in itertools.product(interp.domain, repeat=len(variables)):
        yield Assignment(dict(zip(variables, combo)))


def sequent_grade(interp: Interpretation, lhs: Formula, rhs: Formula) -> Grade:
    """Grade of the sequent: the inf over all assignments to the free
    variables of both sides of the arrow between the satisfaction grades.

    Restricting to free variables is exact: satisfaction does not depend on
    the other coordinates, so the inf over all infinite sequences collapses
    to this finite one.
    """
    relevant = free_variables(lhs) | free_variables(rhs)
    result = ONE
    for s in assignments_over(interp, sorted(relevant)):
        a = sat_grade(interp, s, lhs)
        b = sat_grade(interp, s, rhs)
        if a > b and b < result:
            result = b
            if result == ZERO:
                break
    return result


# ---------------------------------------------------------------------------
# the sequent property suite

class _Vectors:
    """Satisfaction grades of formulas tabulated over every assignment to a
    fixed variable list, with pointwise combinators mirroring the semantic
    clauses."""

    def __init__(self, interp: Interpretation, variables: Sequence[int]):
        self.interp = interp
        self.variables = sorted(variables)
        self.position = {v: i for i, v in enumerate(self.variables)}
        self.tuples = list(itertools.product(interp.domain, repeat=len(self.variables)))
        self.index = {t: i for i, t in enumerate(self.tuples)}

    def of(self, phi: Formula) -> list[Grade]:
        return [sat_grade(self.interp, Assignment(dict(zip(self.variables, t))), phi)
                for t in self.tuples]

    def conj(self, u: list[Grade], v: list[Grade]) -> list[Grade]:
        return [a if a <= b else b for a, b in zip(u, v)]

    def disj(self, vectors: Sequence[list[Grade]]) -> list[Grade]:
        return [sup(v[i] for v in vectors) for i in range(len(self.tuples))]

    def exists(self, u: list[Grade], variable: int) -> list[Grade]:
        p = self.position[variable]
        out = []
        for t in self.tuples:
            out.append(sup(u[self.index[t[:p] + (d,) + t[p + 1:]]] for d in self.interp.domain))
        return out

    def rename(self, u: list[Grade], variable: int, replacement: int) -> list[Grade]:
        """Vector of the formula with `replacement` substituted for the free
        variable `variable` (the substitution lemma as index surgery)."""
        p = self.position[variable]
        q = self.position[replacement]
        return [u[self.index[t[:p] + (t[q],) + t[p + 1:]]] for t in self.tuples]

    def equality(self, a: int, b: int) -> list[Grade]:
        pa, pb = self.position[a], self.position[b]
        return [ONE if t[pa] == t[pb] else ZERO for t in self.tuples]

    def sequent(self, u: list[Grade], v: list[Grade]) -> Grade:
        return inf(godel_arrow(a, b) for a, b in zip(u, v))


def theorem2_suite(
    interp: Interpretation,
    pool: Sequence[Formula],
    max_subset: int = 3,
) -> tuple[LawReport, ...]:
    """Evaluate the nine graded-sequent properties over the pool.

    Clauses 4 and 5 range over nonempty sub-multisets of the pool up to
    max_subset; the substitution clauses skip instances the capture check
    rejects; clause 9 is instantiated with the quantified variable not free
    in the left conjunct, the side condition the distributivity law needs.
    """
    if not pool:
        raise SchemaError("pool", "needs at least one formula")
    pool = list(pool)
    pool_vars = sorted(set().union(frozenset(), *(free_variables(f) for f in pool)))
    fresh = (max(pool_vars, default=0)) + 1
    vs = _Vectors(interp, pool_vars + [fresh])
    vector = {i: vs.of(f) for i, f in enumerate(pool)}
    seq = {(i, j): vs.sequent(vector[i], vector[j])
           for i in range(len(pool)) for j in range(len(pool))}
    # the vector path must agree with the reference evaluator
    probe = sequent_grade(interp, pool[0], pool[-1])
    if probe != seq[(0, len(pool) - 1)]:
        raise AssertionError("vectorized sequent disagrees with the evaluator")

    reports = []

    def clause(name: str, failures: list[str]) -> None:
        reports.append(LawReport(name, not failures, "; ".join(failures[:3])))

    fails: list[str] = []
    for i, f in enumerate(pool):
        if seq[(i, i)] != ONE:
            fails.append(format_formula(f))
    clause("Thm2.1 identity", fails)

    fails = []
    for i in range(len(pool)):
        for j in range(len(pool)):
            for k in range(len(pool)):
                if min(seq[(i, j)], seq[(j, k)]) > seq[(i, k)]:
                    fails.append(f"({i},{j},{k})")
    clause("Thm2.2 transitivity", fails)

    fails = []
    top_vec = vs.of(TOP)
    for i, f in enumerate(pool):
        if vs.sequent(vector[i], top_vec) != ONE:
            fails.append(f"3(i) {format_formula(f)}")
    for i in range(len(pool)):
        for j in range(len(pool)):
            both = vs.conj(vector[i], vector[j])
            if vs.sequent(both, vector[i]) != ONE:
                fails.append(f"3(ii) ({i},{j})")
            if vs.sequent(both, vector[j]) != ONE:
                fails.append(f"3(iii) ({i},{j})")
            for k in range(len(pool)):
                lhs = min(seq[(i, j)], seq[(i, k)])
                rhs = vs.sequent(vector[i], vs.conj(vector[j], vector[k]))
                if lhs != rhs:
                    fails.append(f"3(iv) ({i},{j},{k})")
    clause("Thm2.3 conjunction", fails)

    subsets = [combo
               for size in range(1, min(max_subset, len(pool)) + 1)
               for combo in itertools.combinations(range(len(pool)), size)]
    fails = []
    for combo in subsets:
        joined = vs.disj([vector[i] for i in combo])
        for i in combo:
            if vs.sequent(vector[i], joined) != ONE:
                fails.append(f"4(i) {combo} member {i}")
        for j in range(len(pool)):
            if inf(seq[(i, j)] for i in combo) > vs.sequent(joined, vector[j]):
                fails.append(f"4(ii) {combo} to {j}")
    clause("Thm2.4 disjunction", fails)

    fails = []
    for i in range(len(pool)):
        for combo in subsets:
            lhs = vs.conj(vector[i], vs.disj([vector[j] for j in combo]))
            rhs = vs.disj([vs.conj(vector[i], vector[j]) for j in combo])
            if vs.sequent(lhs, rhs) != ONE:
                fails.append(f"5 ({i}, {combo})")
    clause("Thm2.5 frame distributivity", fails)

    fails = []
    for x in (pool_vars or [fresh]):
        if sequent_grade(interp, TOP, Equality(Var(x), Var(x))) != ONE:
            fails.append(f"x{x}")
    clause("Thm2.6 reflexivity of equality", fails)

    fails = []
    for i, f in enumerate(pool):
        xs = sorted(free_variables(f))[:2]
        if not xs:
            continue
        targets = [[fresh] * len(xs)]
        if len(xs) == 2:
            targets.append([xs[1], xs[0]])
        for ys in targets:
            try:
                replaced = substitute(f, [(x, Var(y)) for x, y in zip(xs, ys)])
            except CaptureViolation:
                continue
            eq = None
            for x, y in zip(xs, ys):
                pair = vs.equality(x, y)
                eq = pair if eq is None else vs.conj(eq, pair)
            antecedent = vs.conj(eq, vector[i])
            if vs.sequent(antecedent, vs.of(replaced)) != ONE:
                fails.append(f"7 ({i} with {ys})")
    clause("Thm2.7 substitution of equals", fails)

    fails = []
    spot_checked = False
    for i in range(len(pool)):
        for j in range(len(pool)):
            ys = sorted(free_variables(pool[j])) or [fresh]
            for y in ys:
                for x in pool_vars[:2] or [fresh]:
                    try:
                        replaced = substitute(pool[j], [(y, Var(x))])
                    except CaptureViolation:
                        continue
                    replaced_vec = vs.rename(vector[j], y, x)
                    if not spot_checked:
                        if replaced_vec != vs.of(replaced):
                            raise AssertionError("rename disagrees with substitution")
                        spot_checked = True
                    exists_vec = vs.exists(vector[j], y)
                    if vs.sequent(vector[i], replaced_vec) > vs.sequent(vector[i], exists_vec):
                        fails.append(f"8(i) ({i},{j},x{y}:=x{x})")
                    # second half: from an existential premise to the instance
                    try:
                        substitute(pool[i], [(y, Var(x))])
                    except CaptureViolation:
                        continue
                    lhs = vs.sequent(vs.exists(vector[i], y), vector[j])
                    rhs = vs.sequent(vs.rename(vector[i], y, x), vector[j])
                    if lhs > rhs:
                        fails.append(f"8(ii) ({i},{j},x{y}:=x{x})")
    clause("Thm2.8 existential bounds", fails)

    fails = []
    for i in range(len(pool)):
        for j in range(len(pool)):
            candidates = sorted((free_variables(pool[j]) | {fresh}) - free_variables(pool[i]))
            for y in candidates:
                lhs = vs.conj(vector[i], vs.exists(vector[j], y))
                rhs = vs.exists(vs.conj(vector[i], vector[j]), y)
                if vs.sequent(lhs, rhs) != ONE:
                    fails.append(f"9 ({i},{j},x{y})")
    clause("Thm2.9 quantifier distributivity", fails)

    return tuple(reports)
