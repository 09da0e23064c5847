"""Shared strategies and independent brute-force oracles.

The oracles re-state the definitions as literally as possible (full subset
enumerations, direct recursion) so the optimized library paths are checked
against something that cannot share their shortcuts.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from graded_topos.fuzzy_sets import FuzzySet, Universe, intersection, union
from graded_topos.grades import ONE, ZERO, godel_arrow


def small_grades(max_denominator: int = 4):
    return st.fractions(min_value=0, max_value=1, max_denominator=max_denominator)


def universes(max_points: int = 4, prefix: str = "x"):
    return st.integers(min_value=1, max_value=max_points).map(
        lambda n: Universe(tuple(f"{prefix}{i + 1}" for i in range(n))))


@st.composite
def fuzzy_sets_over(draw, universe: Universe, max_denominator: int = 4):
    return FuzzySet(universe, tuple(
        draw(small_grades(max_denominator)) for _ in universe.elements))


@st.composite
def fuzzy_set_families(draw, count: int, max_points: int = 4):
    universe = draw(universes(max_points))
    return [draw(fuzzy_sets_over(universe)) for _ in range(count)]


# --- oracles -----------------------------------------------------------------

def brute_inclusion(a: FuzzySet, b: FuzzySet) -> Fraction:
    return min((godel_arrow(a(x), b(x)) for x in a.universe.elements), default=ONE)


def brute_space_closed(space) -> bool:
    """Clauses 1-3 by literal enumeration of every sublist union."""
    opens = set(space.opens)
    if not any(all(g == ZERO for g in t.grades) for t in opens):
        return False
    if not any(all(g == ONE for g in t.grades) for t in opens):
        return False
    items = list(space.opens)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            if union(list(combo), space.universe) not in opens:
                return False
    for a in items:
        for b in items:
            if intersection(a, b) not in opens:
                return False
    return True


def brute_frame_violation(frame) -> str | None:
    """The nine axioms, restated directly over every subset (small frames only)."""
    items = list(frame.carrier)
    rel = frame.relation
    meet = frame.meet_table
    for a in items:
        if rel[(a, a)] != ONE:
            return "axiom 1"
        if rel[(a, frame.top)] != ONE:
            return "axiom 5"
    for a in items:
        for b in items:
            if a != b and rel[(a, b)] == ONE and rel[(b, a)] == ONE:
                return "axiom 2"
            if rel[(meet[(a, b)], a)] != ONE or rel[(meet[(a, b)], b)] != ONE:
                return "axiom 4"
            for c in items:
                if min(rel[(a, b)], rel[(b, c)]) > rel[(a, c)]:
                    return "axiom 3"
                if min(rel[(a, b)], rel[(a, c)]) != rel[(a, meet[(b, c)])]:
                    return "axiom 6"
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            joined = frame.join_fn(frozenset(combo))
            for a in combo:
                if rel[(a, joined)] != ONE:
                    return "axiom 7"
            for b in items:
                lower = min((rel[(a, b)] for a in combo), default=ONE)
                if lower != rel[(joined, b)]:
                    return "axiom 8"
            for a in items:
                distributed = frame.join_fn(frozenset(meet[(a, b)] for b in combo))
                if rel[(meet[(a, joined)], distributed)] != ONE:
                    return "axiom 9"
    return None


def brute_system_violation(system) -> str | None:
    """The three system clauses over every finite/arbitrary subset."""
    frame = system.frame
    items = list(frame.carrier)
    for x in system.points.elements:
        for a in items:
            for b in items:
                if min(system.sat[(x, a)], frame.relation[(a, b)]) > system.sat[(x, b)]:
                    return "clause 1"
        for k in range(len(items) + 1):
            for combo in itertools.combinations(items, k):
                folded = frame.top
                for a in combo:
                    folded = frame.meet_table[(folded, a)]
                expected = min((system.sat[(x, a)] for a in combo), default=ONE)
                if system.sat[(x, folded)] != expected:
                    return "clause 2"
                joined = frame.join_fn(frozenset(combo))
                expected = max((system.sat[(x, a)] for a in combo), default=ZERO)
                if system.sat[(x, joined)] != expected:
                    return "clause 3"
    return None


def brute_frame_hom_ok(hom) -> bool:
    """Homomorphism clauses with full subset enumeration plus top preservation."""
    src, tgt, f = hom.source, hom.target, hom.map
    if f[src.top] != tgt.top:
        return False
    for a in src.carrier:
        for b in src.carrier:
            if f[src.meet_table[(a, b)]] != tgt.meet_table[(f[a], f[b])]:
                return False
            if src.relation[(a, b)] > tgt.relation[(f[a], f[b])]:
                return False
    for k in range(len(src.carrier) + 1):
        for combo in itertools.combinations(src.carrier, k):
            if f[src.join_fn(frozenset(combo))] != tgt.join_fn(frozenset(f[a] for a in combo)):
                return False
    return True
