"""Terms and geometric formulas: constants, variables, function applications;
top, bottom, predicates, crisp equality, binary conjunction, finite
disjunction, existential quantification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import CaptureViolation, SchemaError


@dataclass(frozen=True)
class Const:
    index: int


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Func:
    symbol: str
    args: tuple["Term", ...]


Term = Union[Const, Var, Func]


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Predicate:
    symbol: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Equality:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    items: tuple["Formula", ...]

    def __post_init__(self) -> None:
        if not self.items:
            raise SchemaError("or", "disjunction lists must be nonempty")


@dataclass(frozen=True)
class Exists:
    variable: int
    body: "Formula"


Formula = Union[Top, Bottom, Predicate, Equality, And, Or, Exists]

TOP = Top()
BOTTOM = Bottom()


def big_or(items) -> Formula:
    return Or(tuple(items))


def term_variables(t: Term) -> frozenset[int]:
    if isinstance(t, Var):
        return frozenset((t.index,))
    if isinstance(t, Func):
        return frozenset().union(*(term_variables(a) for a in t.args)) if t.args else frozenset()
    return frozenset()


def free_variables(phi: Formula) -> frozenset[int]:
    """Variables with a free occurrence; the quantifier binds its variable."""
    if isinstance(phi, (Top, Bottom)):
        return frozenset()
    if isinstance(phi, Predicate):
        return frozenset().union(frozenset(), *(term_variables(t) for t in phi.args))
    if isinstance(phi, Equality):
        return term_variables(phi.lhs) | term_variables(phi.rhs)
    if isinstance(phi, And):
        return free_variables(phi.lhs) | free_variables(phi.rhs)
    if isinstance(phi, Or):
        return frozenset().union(frozenset(), *(free_variables(f) for f in phi.items))
    if isinstance(phi, Exists):
        return free_variables(phi.body) - {phi.variable}
    raise TypeError(f"not a formula: {phi!r}")


def substitute_term(t: Term, mapping: dict[int, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.index, t)
    if isinstance(t, Func):
        return Func(t.symbol, tuple(substitute_term(a, mapping) for a in t.args))
    return t


def substitute(phi: Formula, pairs) -> Formula:
    """Simultaneous substitution of terms for free variables.

    Bound occurrences are untouched; if a replacement term would be captured
    by a quantifier (its variables include a binder whose scope the term
    enters), CaptureViolation is raised rather than silently renaming.
    """
    mapping = dict()
    for x, t in pairs:
        mapping[x] = t
    return _substitute(phi, mapping)


def _substitute(phi: Formula, mapping: dict[int, Term]) -> Formula:
    if not mapping or isinstance(phi, (Top, Bottom)):
        return phi
    if isinstance(phi, Predicate):
        return Predicate(phi.symbol, tuple(substitute_term(t, mapping) for t in phi.args))
    if isinstance(phi, Equality):
        return Equality(substitute_term(phi.lhs, mapping), substitute_term(phi.rhs, mapping))
    if isinstance(phi, And):
        return And(_substitute(phi.lhs, mapping), _substitute(phi.rhs, mapping))
    if isinstance(phi, Or):
        return Or(tuple(_substitute(f, mapping) for f in phi.items))
    if isinstance(phi, Exists):
        inner = {x: t for x, t in mapping.items() if x != phi.variable}
        live = free_variables(phi.body)
        for x, t in inner.items():
            if x in live and phi.variable in term_variables(t):
                raise CaptureViolation(phi.variable)
        return Exists(phi.variable, _substitute(phi.body, inner))
    raise TypeError(f"not a formula: {phi!r}")


def format_term(t: Term) -> str:
    if isinstance(t, Const):
        return f"c{t.index}"
    if isinstance(t, Var):
        return f"x{t.index}"
    return f"{t.symbol}({','.join(format_term(a) for a in t.args)})"


def format_formula(phi: Formula) -> str:
    """Canonical concrete syntax; parse_formula inverts it."""
    if isinstance(phi, Top):
        return "T"
    if isinstance(phi, Bottom):
        return "F"
    if isinstance(phi, Predicate):
        return f"{phi.symbol}({','.join(format_term(t) for t in phi.args)})"
    if isinstance(phi, Equality):
        return f"({format_term(phi.lhs)} = {format_term(phi.rhs)})"
    if isinstance(phi, And):
        return f"({format_formula(phi.lhs)} & {format_formula(phi.rhs)})"
    if isinstance(phi, Or):
        if len(phi.items) == 2:
            return f"({format_formula(phi.items[0])} | {format_formula(phi.items[1])})"
        return f"V[{', '.join(format_formula(f) for f in phi.items)}]"
    if isinstance(phi, Exists):
        return f"E x{phi.variable}. {format_formula(phi.body)}"
    raise TypeError(f"not a formula: {phi!r}")
