from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_inclusion, fuzzy_set_families
from graded_topos.errors import MixedUniverse, SchemaError
from graded_topos.fuzzy_sets import (
    FuzzySet,
    PointMap,
    Universe,
    compose_point_maps,
    empty_set,
    full_set,
    graded_inclusion,
    image,
    intersection,
    preimage,
    union,
)
from graded_topos.grades import ONE, ZERO, meet

U2 = Universe.of("x1", "x2")


def fs(*values) -> FuzzySet:
    return FuzzySet(U2, tuple(F(v) if not isinstance(v, tuple) else F(*v) for v in values))


def test_universe_rejects_duplicates_and_empty():
    with pytest.raises(SchemaError):
        Universe(())
    with pytest.raises(SchemaError):
        Universe(("x1", "x1"))


def test_constant_sets():
    assert empty_set(U2)("x1") == ZERO
    assert full_set(U2)("x2") == ONE
    anything = fs((1, 2), (3, 4))
    assert graded_inclusion(empty_set(U2), anything) == ONE


def test_union_examples():
    t = fs((1, 2), (3, 4))
    assert union([t]) == t
    assert union([fs((1, 2), 0), fs((3, 4), 0)])("x1") == F(3, 4)
    assert union([], U2) == empty_set(U2)
    with pytest.raises(MixedUniverse):
        union([])


def test_intersection_examples():
    t = fs((1, 2), (3, 4))
    assert intersection(t, full_set(U2)) == t
    assert intersection(fs((1, 2), 0), fs((3, 4), 0))("x1") == F(1, 2)
    assert intersection(t, empty_set(U2)) == empty_set(U2)


def test_graded_inclusion_examples():
    t = fs((1, 2), (3, 4))
    assert graded_inclusion(t, t) == ONE
    # inf{1/2 -> 1/4, 3/4 -> 1} = inf{1/4, 1}
    assert graded_inclusion(fs((1, 2), (3, 4)), fs((1, 4), 1)) == F(1, 4)
    assert graded_inclusion(t, full_set(U2)) == ONE


def test_mixed_universe_rejected():
    other = FuzzySet(Universe.of("y1"), (ZERO,))
    with pytest.raises(MixedUniverse):
        intersection(fs(0, 0), other)
    with pytest.raises(MixedUniverse):
        graded_inclusion(fs(0, 0), other)


def test_image_examples():
    t = fs((1, 2), (3, 4))
    assert image(PointMap.identity(U2), t) == t
    collapse = PointMap(U2, Universe.of("y"), ("y", "y"))
    assert image(collapse, t)("y") == F(3, 4)
    skip = PointMap(Universe.of("x1"), U2, ("x1",))
    assert image(skip, FuzzySet(Universe.of("x1"), (F(1, 2),)))("x2") == ZERO


def test_preimage_examples():
    t = fs((1, 2), (3, 4))
    assert preimage(PointMap.identity(U2), t) == t
    const = PointMap(U2, U2, ("x2", "x2"))
    assert preimage(const, t) == fs((3, 4), (3, 4))
    assert preimage(const, full_set(U2)) == full_set(U2)


def test_point_map_validation_and_inverse():
    with pytest.raises(SchemaError):
        PointMap(U2, U2, ("x1",))
    with pytest.raises(SchemaError):
        PointMap(U2, U2, ("x1", "z9"))
    swap = PointMap(U2, U2, ("x2", "x1"))
    assert swap.inverse()("x1") == "x2"
    assert compose_point_maps(swap, swap) == PointMap.identity(U2)
    with pytest.raises(SchemaError):
        PointMap(U2, U2, ("x1", "x1")).inverse()


# --- the inclusion laws, over arbitrary fuzzy sets ---------------------------

@given(fuzzy_set_families(2))
def test_inclusion_matches_the_direct_definition(family):
    a, b = family
    assert graded_inclusion(a, b) == brute_inclusion(a, b)


@given(fuzzy_set_families(2))
def test_mutual_full_inclusion_is_equality(family):
    a, b = family
    if graded_inclusion(a, b) == ONE and graded_inclusion(b, a) == ONE:
        assert a == b


@given(fuzzy_set_families(3))
def test_inclusion_transitivity_bound(family):
    a, b, c = family
    assert meet(graded_inclusion(a, b), graded_inclusion(b, c)) <= graded_inclusion(a, c)


@given(fuzzy_set_families(2))
def test_intersection_below_both(family):
    a, b = family
    both = intersection(a, b)
    assert graded_inclusion(both, a) == ONE
    assert graded_inclusion(both, b) == ONE


@given(fuzzy_set_families(3))
def test_inclusion_into_intersection_is_exact(family):
    a, b, c = family
    lhs = meet(graded_inclusion(a, b), graded_inclusion(a, c))
    assert lhs == graded_inclusion(a, intersection(b, c))


@given(fuzzy_set_families(3))
def test_members_sit_inside_their_union(family):
    merged = union(family)
    for t in family:
        assert graded_inclusion(t, merged) == ONE


@given(fuzzy_set_families(4))
def test_union_inclusion_is_the_infimum(family):
    *members, target = family
    lhs = min(graded_inclusion(t, target) for t in members)
    assert lhs == graded_inclusion(union(members), target)


@given(fuzzy_set_families(3))
def test_meet_distributes_into_unions(family):
    t, rest = family[0], family[1:]
    lhs = intersection(t, union(rest))
    rhs = union([intersection(t, s) for s in rest])
    assert graded_inclusion(lhs, rhs) == ONE


@given(fuzzy_set_families(2))
def test_pointwise_modus_ponens(family):
    a, b = family
    degree = graded_inclusion(a, b)
    for x in a.universe.elements:
        assert meet(a(x), degree) <= b(x)


@given(fuzzy_set_families(2), st.integers(min_value=1, max_value=3), st.data())
def test_inclusion_monotone_under_image(family, target_size, data):
    a, b = family
    target = Universe(tuple(f"y{i + 1}" for i in range(target_size)))
    images = tuple(data.draw(st.sampled_from(target.elements))
                   for _ in a.universe.elements)
    f = PointMap(a.universe, target, images)
    assert graded_inclusion(a, b) <= graded_inclusion(image(f, a), image(f, b))


@given(fuzzy_set_families(3), st.data())
def test_preimage_is_a_homomorphism(family, data):
    b1, b2, b3 = family
    source = Universe(("z1", "z2", "z3"))
    images = tuple(data.draw(st.sampled_from(b1.universe.elements))
                   for _ in source.elements)
    f = PointMap(source, b1.universe, images)
    assert preimage(f, union([b1, b2, b3])) == union(
        [preimage(f, b1), preimage(f, b2), preimage(f, b3)])
    assert preimage(f, intersection(b1, b2)) == intersection(
        preimage(f, b1), preimage(f, b2))
