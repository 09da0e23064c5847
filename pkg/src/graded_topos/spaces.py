"""Fuzzy topological spaces with graded inclusion and their continuous maps.

A space is a universe plus a finite family of opens (fuzzy sets) containing
the constant-0 and constant-1 sets and closed under pairwise unions and
intersections. Pairwise closure is all that needs checking: union is
associative, commutative and idempotent, so every nonempty sublist union is
reachable from pairs, and the empty union is the constant-0 set required
anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .checks import Violation
from .errors import MixedUniverse, NotContinuous, Overflow
from .fuzzy_sets import (
    FuzzySet,
    PointMap,
    Universe,
    compose_point_maps,
    empty_set,
    full_set,
    intersection,
    preimage,
    union,
)

DEFAULT_CLOSURE_CAP = 4096


def _show_set(t: FuzzySet) -> str:
    return str({x: str(g) for x, g in zip(t.universe.elements, t.grades)})


@dataclass(frozen=True)
class GradedSpace:
    """Universe plus opens in canonical order (sorted by membership values)."""

    universe: Universe
    opens: tuple[FuzzySet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_value", {t: t for t in self.opens})

    def __contains__(self, t: FuzzySet) -> bool:
        return t in self._by_value  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.opens)


def canonical_opens(opens: Iterable[FuzzySet]) -> tuple[FuzzySet, ...]:
    """Deduplicate and sort opens lexicographically by membership values."""
    return tuple(sorted(set(opens), key=lambda t: t.grades))


def check_space(universe: Universe, candidates: Sequence[FuzzySet]) -> GradedSpace | Violation:
    """Validate the three topology clauses; returns the space (with opens in
    canonical order) or the first violation with a witness."""
    for t in candidates:
        if t.universe != universe:
            raise MixedUniverse("candidate open over a different universe")
    seen: dict[FuzzySet, FuzzySet] = {}
    for t in candidates:
        if t in seen:
            return Violation("space", "distinct opens", f"duplicate open {_show_set(t)}")
        seen[t] = t
    bottom, top = empty_set(universe), full_set(universe)
    if bottom not in seen:
        return Violation("space", "clause 1", "the constant-0 open is missing")
    if top not in seen:
        return Violation("space", "clause 1", "the constant-1 open is missing")
    items = list(seen)
    for i, a in enumerate(items):
        for b in items[i:]:
            if union([a, b]) not in seen:
                return Violation(
                    "space", "clause 2",
                    f"union of {_show_set(a)} and {_show_set(b)} is not an open")
            if intersection(a, b) not in seen:
                return Violation(
                    "space", "clause 3",
                    f"intersection of {_show_set(a)} and {_show_set(b)} is not an open")
    return GradedSpace(universe, canonical_opens(items))


def generate_topology(
    universe: Universe,
    generators: Sequence[FuzzySet],
    max_opens: int = DEFAULT_CLOSURE_CAP,
) -> GradedSpace:
    """Smallest topology containing the generators: saturate under pairwise
    unions and intersections starting from {0-set, 1-set} ∪ generators.

    Raises Overflow once the closure exceeds max_opens.
    """
    for t in generators:
        if t.universe != universe:
            raise MixedUniverse("generator over a different universe")
    opens = {empty_set(universe), full_set(universe)}
    opens.update(generators)
    frontier = list(opens)
    while frontier:
        if len(opens) > max_opens:
            raise Overflow(f"topology closure exceeded {max_opens} opens")
        fresh = []
        current = list(opens)
        for a in frontier:
            for b in current:
                for c in (union([a, b]), intersection(a, b)):
                    if c not in opens:
                        opens.add(c)
                        fresh.append(c)
        frontier = fresh
    if len(opens) > max_opens:
        raise Overflow(f"topology closure exceeded {max_opens} opens")
    return GradedSpace(universe, canonical_opens(opens))


def check_continuous(f: PointMap, source: GradedSpace, target: GradedSpace) -> Violation | None:
    """Every preimage of a target open must be a source open."""
    if f.source != source.universe or f.target != target.universe:
        raise MixedUniverse("map endpoints do not match the given spaces")
    for t in target.opens:
        if preimage(f, t) not in source:
            return Violation(
                "continuity", "preimage of an open",
                f"preimage of {_show_set(t)} is not an open of the source")
    return None


def compose_continuous(
    f: PointMap,
    g: PointMap,
    source: GradedSpace,
    middle: GradedSpace,
    target: GradedSpace,
) -> PointMap:
    """Composite of two continuous maps, re-checked for continuity."""
    for m, s, t in ((f, source, middle), (g, middle, target)):
        bad = check_continuous(m, s, t)
        if bad is not None:
            raise NotContinuous(str(bad))
    composite = compose_point_maps(f, g)
    bad = check_continuous(composite, source, target)
    if bad is not None:  # cannot happen: preimages compose
        raise NotContinuous(str(bad))
    return composite


def space_iso_check(f: PointMap, source: GradedSpace, target: GradedSpace) -> bool:
    """True iff f is a point bijection, continuous both ways, and preimage
    along f is a bijection between the open families."""
    if f.source != source.universe or f.target != target.universe:
        raise MixedUniverse("map endpoints do not match the given spaces")
    if len(source.universe) != len(target.universe) or not f.is_bijective():
        return False
    if check_continuous(f, source, target) is not None:
        return False
    if check_continuous(f.inverse(), target, source) is not None:
        return False
    pulled = {preimage(f, t) for t in target.opens}
    return len(pulled) == len(target.opens) and pulled == set(source.opens)
