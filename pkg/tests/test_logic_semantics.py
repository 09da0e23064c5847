"""Evaluator semantics, sequent grades, and the nine sequent laws.

The sequent machinery is dual-routed: `brute_sequent` re-derives grades by
enumerating assignments over a strictly larger variable set than the free
variables, which must not change anything.
"""

import itertools
from fractions import Fraction as F

import pytest

from graded_topos.errors import SchemaError, UnboundVariable, UndeclaredSymbol
from graded_topos.generators import (
    GeneratorConfig,
    generate_formula_pool,
    generate_random_interpretation,
)
from graded_topos.grades import ONE, ZERO, godel_arrow
from graded_topos.logic.parser import parse_formula
from graded_topos.logic.semantics import (
    Assignment,
    EMPTY_ASSIGNMENT,
    Interpretation,
    assignments_over,
    eval_term,
    sat_grade,
    sequent_grade,
    theorem2_suite,
)
from graded_topos.logic.syntax import (
    And,
    Exists,
    Predicate,
    TOP,
    Var,
    free_variables,
    substitute,
)

INTERP = Interpretation(
    ("d1", "d2"),
    {1: "d1", 2: "d2"},
    {"f": {("d1",): "d2", ("d2",): "d2"}},
    {"p": {("d1",): F(3, 10), ("d2",): F(1, 2)},
     "q": {("d1",): F(0), ("d2",): F(1)}},
)
SIG = INTERP.signature()
S = Assignment({1: "d1", 2: "d2"})


def phi(text):
    return parse_formula(text, SIG)


def brute_sequent(interp, lhs, rhs, extra=(9, 8)):
    relevant = sorted(free_variables(lhs) | free_variables(rhs) | set(extra))
    return min(
        (godel_arrow(sat_grade(interp, s, lhs), sat_grade(interp, s, rhs))
         for s in assignments_over(interp, relevant)),
        default=ONE)


def test_eval_term_cases():
    assert eval_term(INTERP, S, parse_formula("p(c1)", SIG).args[0]) == "d1"
    assert eval_term(INTERP, S, Var(2)) == "d2"
    # nested application: f(f(d1)) = f(d2) = d2
    assert eval_term(INTERP, S, parse_formula("(f(f(x1)) = c2)", SIG).lhs) == "d2"


def test_eval_term_errors():
    with pytest.raises(UnboundVariable):
        eval_term(INTERP, EMPTY_ASSIGNMENT, Var(7))
    with pytest.raises(UndeclaredSymbol):
        eval_term(INTERP, S, parse_formula("(g(x1) = x1)").lhs)
    with pytest.raises(UndeclaredSymbol):
        sat_grade(INTERP, S, Predicate("z", (Var(1),)))


def test_sat_grade_spot_values():
    assert sat_grade(INTERP, S, TOP) == ONE
    assert sat_grade(INTERP, S, phi("F")) == ZERO
    assert sat_grade(INTERP, S, phi("(x1 = x1)")) == ONE
    assert sat_grade(INTERP, S, phi("(x1 = x2)")) == ZERO
    assert sat_grade(INTERP, S, phi("p(x1)")) == F(3, 10)
    assert sat_grade(INTERP, S, phi("(p(x1) & p(x2))")) == F(3, 10)
    assert sat_grade(INTERP, S, phi("(p(x1) | p(x2))")) == F(1, 2)
    assert sat_grade(INTERP, S, phi("V[q(x1), p(x1)]")) == F(3, 10)
    assert sat_grade(INTERP, S, phi("E x1. q(x1)")) == ONE


def test_equality_is_always_crisp():
    for left in ("x1", "x2", "c1", "c2", "f(x1)"):
        for right in ("x1", "x2", "c1", "c2", "f(x2)"):
            value = sat_grade(INTERP, S, phi(f"({left} = {right})"))
            assert value in (ZERO, ONE)


def test_disjunction_is_permutation_invariant():
    items = ["p(x1)", "q(x1)", "(x1 = c1)", "T"]
    grades = set()
    for ordering in itertools.permutations(items):
        grades.add(sat_grade(INTERP, S, phi("V[" + ", ".join(ordering) + "]")))
    assert len(grades) == 1


def test_sat_ignores_irrelevant_coordinates():
    formula = phi("(p(x1) & E x2. q(x2))")
    for d in INTERP.domain:
        assert (sat_grade(INTERP, Assignment({1: "d1", 2: d, 5: d}), formula)
                == sat_grade(INTERP, Assignment({1: "d1"}), formula))


def test_sequent_spot_values():
    assert sequent_grade(INTERP, phi("p(x1)"), phi("p(x1)")) == ONE
    assert sequent_grade(INTERP, phi("p(x1)"), TOP) == ONE
    assert sequent_grade(INTERP, phi("(p(x1) & q(x1))"), phi("p(x1)")) == ONE
    # inf{3/10 -> 0, 1/2 -> 1} = inf{0, 1}
    assert sequent_grade(INTERP, phi("p(x1)"), phi("q(x1)")) == ZERO
    # inf{0 -> 3/10, 1 -> 1/2} = inf{1, 1/2}
    assert sequent_grade(INTERP, phi("q(x1)"), phi("p(x1)")) == F(1, 2)


def test_sequent_with_no_free_variables_uses_one_assignment():
    assert sequent_grade(INTERP, TOP, phi("(c1 = c1)")) == ONE
    assert sequent_grade(INTERP, TOP, phi("(c1 = c2)")) == ZERO
    assert sequent_grade(INTERP, TOP, phi("E x1. q(x1)")) == ONE


@pytest.mark.parametrize("seed", range(8))
def test_sequent_matches_brute_enumeration(seed):
    cfg = GeneratorConfig(seed=seed)
    interp = generate_random_interpretation(cfg, 0)
    pool = generate_formula_pool(cfg, 0, interp, size=3, depth=2)
    for lhs, rhs in itertools.product(pool, repeat=2):
        assert sequent_grade(interp, lhs, rhs) == brute_sequent(interp, lhs, rhs)


@pytest.mark.parametrize("seed", range(8))
def test_residuation_characterizes_full_sequents(seed):
    cfg = GeneratorConfig(seed=seed)
    interp = generate_random_interpretation(cfg, 1)
    pool = generate_formula_pool(cfg, 1, interp, size=3, depth=2)
    for lhs, rhs in itertools.product(pool, repeat=2):
        relevant = sorted(free_variables(lhs) | free_variables(rhs))
        pointwise = all(
            sat_grade(interp, s, lhs) <= sat_grade(interp, s, rhs)
            for s in assignments_over(interp, relevant))
        assert (sequent_grade(interp, lhs, rhs) == ONE) == pointwise


def test_substitution_lemma():
    formula = phi("(p(x1) & q(x2))")
    replaced = substitute(formula, [(1, Var(2))])
    for s in assignments_over(INTERP, [1, 2]):
        shifted = s.updated(1, s.get(2))
        assert sat_grade(INTERP, s, replaced) == sat_grade(INTERP, shifted, formula)


def test_quantifier_distribution_needs_the_side_condition():
    """With y free on the left the distributivity sequent genuinely fails."""
    left = And(phi("p(x1)"), Exists(1, phi("q(x1)")))
    right = Exists(1, And(phi("p(x1)"), phi("q(x1)")))
    # I(p) = (3/10, 1/2), I(q) = (0, 1):
    # at s(x1)=d1: lhs = min(3/10, 1) = 3/10; rhs = sup{min(3/10,0), min(1/2,1)} = 1/2, fine;
    # crisp variant shows failure:
    crisp = Interpretation(("d1", "d2"), {}, {}, {
        "p": {("d1",): ONE, ("d2",): ZERO},
        "q": {("d1",): ZERO, ("d2",): ONE},
    })
    sig = crisp.signature()
    left = And(parse_formula("p(x1)", sig), Exists(1, parse_formula("q(x1)", sig)))
    right = Exists(1, And(parse_formula("p(x1)", sig), parse_formula("q(x1)", sig)))
    assert sequent_grade(crisp, left, right) == ZERO
    # with a fresh bound variable the law is restored
    fresh = Exists(2, parse_formula("q(x2)", sig))
    lhs = And(parse_formula("p(x1)", sig), fresh)
    rhs = Exists(2, And(parse_formula("p(x1)", sig), parse_formula("q(x2)", sig)))
    assert sequent_grade(crisp, lhs, rhs) == ONE


@pytest.mark.parametrize("seed", range(10))
def test_the_nine_sequent_laws_hold(seed):
    cfg = GeneratorConfig(seed=seed)
    interp = generate_random_interpretation(cfg, 2)
    pool = generate_formula_pool(cfg, 2, interp, size=4, depth=3)
    reports = theorem2_suite(interp, pool)
    assert len(reports) == 9
    for report in reports:
        assert report.ok, f"{report.name}: {report.detail}"


def test_suite_agrees_with_direct_evaluation():
    """Clauses 1-3 recomputed with the reference evaluator on a fixed pool."""
    pool = [phi("p(x1)"), phi("q(x1)"), phi("(p(x1) & q(x2))"), phi("E x2. q(x2)")]
    reports = {r.name: r.ok for r in theorem2_suite(INTERP, pool)}
    for f in pool:
        assert sequent_grade(INTERP, f, f) == ONE
    for a, b, c in itertools.product(pool, repeat=3):
        assert min(sequent_grade(INTERP, a, b), sequent_grade(INTERP, b, c)) \
            <= sequent_grade(INTERP, a, c)
        assert min(sequent_grade(INTERP, a, b), sequent_grade(INTERP, a, c)) \
            == sequent_grade(INTERP, a, And(b, c))
    assert all(reports.values())


def test_pool_must_be_nonempty():
    with pytest.raises(SchemaError):
        theorem2_suite(INTERP, [])


def test_interpretation_validation():
    with pytest.raises(SchemaError):
        Interpretation((), {}, {}, {})
    with pytest.raises(SchemaError):
        Interpretation(("d1",), {1: "nope"}, {}, {})
    with pytest.raises(SchemaError):
        Interpretation(("d1", "d2"), {}, {}, {"p": {("d1",): F(1, 2)}})
    with pytest.raises(SchemaError):
        Interpretation(("d1",), {}, {"x1": {("d1",): "d1"}}, {})
