"""Graded fuzzy topological systems and their morphisms.

A system pairs a point set with a graded frame through a grade-valued
satisfaction table. The three compatibility clauses are checked with the
same exhaustive/sampled subset regime the frames use; clause 2 only needs
the empty set, singletons and pairs once the meet is a verified
semilattice, because larger finite meets are folds of binary ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping

from .checks import DEFAULT_SUBSET_SAMPLES, Violation, mask_elements, subset_masks, subset_regime
from .errors import EmptyPoints, MixedStructure, SchemaError
from .frames import FrameHom, GradedFrame, _show, check_frame_hom, compose_frame_hom, same_frame
from .fuzzy_sets import PointMap, Universe, compose_point_maps
from .grades import Grade, ONE, ZERO


@dataclass(frozen=True, eq=False)
class GradedSystem:
    """Points, a graded frame, and the satisfaction table point x carrier."""

    points: Universe
    frame: GradedFrame
    sat: Mapping[tuple[Hashable, Hashable], Grade]

    def __post_init__(self) -> None:
        if len(self.points) == 0:
            raise EmptyPoints("a system needs at least one point")
        for x in self.points.elements:
            for a in self.frame.carrier:
                if (x, a) not in self.sat:
                    raise SchemaError("sat", f"missing entry for ({_show(x)}, {_show(a)})")

    def grade_of(self, x: Hashable, a: Hashable) -> Grade:
        return self.sat[(x, a)]


def check_system(system: GradedSystem, samples: int = DEFAULT_SUBSET_SAMPLES) -> Violation | None:
    """Verify the three system clauses against the (already structural)
    satisfaction table; returns the first violation, or None."""
    frame = system.frame
    items = frame.carrier
    n = len(items)
    xs = system.points.elements
    sat = [[system.sat[(x, a)] for a in items] for x in xs]
    idx = {a: i for i, a in enumerate(items)}
    rel = [[frame.relation[(a, b)] for b in items] for a in items]
    meet_idx = [[idx[frame.meet_table[(a, b)]] for b in items] for a in items]
    top = idx[frame.top]

    for xi, x in enumerate(xs):
        row = sat[xi]
        if row[top] != ONE:
            return Violation("system", "clause 2",
                             f"satisfaction of the top at {_show(x)} is {row[top]}, not 1 (empty meet)")
        for i in range(n):
            for j in range(n):
                if min(row[i], rel[i][j]) > row[j]:
                    return Violation("system", "clause 1",
                                     f"({_show(x)}, {_show(items[i])}, {_show(items[j])})")
                if row[meet_idx[i][j]] != min(row[i], row[j]):
                    return Violation("system", "clause 2",
                                     f"({_show(x)}, {_show(items[i])}, {_show(items[j])})")

    masks = subset_masks(n, samples=samples)
    joins: dict[int, int] = {}
    for mask in masks:
        j = frame.join_fn(frozenset(mask_elements(mask, items)))
        if j not in idx:
            return Violation("system", "clause 3",
                             f"join of mask {mask:b} is outside the carrier")
        joins[mask] = idx[j]
    if subset_regime(n) == "exhaustive":
        for xi, x in enumerate(xs):
            row = sat[xi]
            upper = [ZERO] * (1 << n)
            if row[joins[0]] != ZERO:
                return Violation("system", "clause 3", f"({_show(x)}, empty subset)")
            for mask in range(1, 1 << n):
                low = mask & -mask
                upper[mask] = max(upper[mask ^ low], row[low.bit_length() - 1])
                if upper[mask] != row[joins[mask]]:
                    return Violation("system", "clause 3",
                                     f"({_show(x)}, subset mask {mask:b})")
    else:
        for xi, x in enumerate(xs):
            row = sat[xi]
            for mask in masks:
                members = [i for i in range(n) if mask >> i & 1]
                expected = max((row[i] for i in members), default=ZERO)
                if expected != row[joins[mask]]:
                    return Violation("system", "clause 3",
                                     f"({_show(x)}, subset mask {mask:b})")
    return None


def check_spatial(system: GradedSystem) -> tuple[bool, tuple[Hashable, Hashable] | None]:
    """A system is spatial when distinct carrier elements are distinguished
    by some point. Returns (True, None) or (False, indistinguishable pair)."""
    columns: dict[tuple[Grade, ...], Hashable] = {}
    for a in system.frame.carrier:
        col = tuple(system.sat[(x, a)] for x in system.points.elements)
        if col in columns:
            return False, (columns[col], a)
        columns[col] = a
    return True, None


@dataclass(frozen=True, eq=False)
class SystemMorphism:
    """Point map forward, frame homomorphism backward."""

    source: GradedSystem
    target: GradedSystem
    point_map: PointMap
    frame_hom: FrameHom

    def __post_init__(self) -> None:
        if self.point_map.source != self.source.points or self.point_map.target != self.target.points:
            raise MixedStructure("point map endpoints do not match the systems")
        if not (same_frame(self.frame_hom.source, self.target.frame)
                and same_frame(self.frame_hom.target, self.source.frame)):
            raise MixedStructure("frame hom endpoints do not match the systems")

    @classmethod
    def identity(cls, system: GradedSystem) -> "SystemMorphism":
        return cls(system, system, PointMap.identity(system.points),
                   FrameHom.identity(system.frame))


def check_system_morphism(m: SystemMorphism, samples: int = DEFAULT_SUBSET_SAMPLES) -> Violation | None:
    """The frame component must be a graded frame homomorphism and the two
    satisfaction readings must agree at every (point, target element)."""
    bad = check_frame_hom(m.frame_hom, samples=samples)
    if bad is not None:
        return bad
    for x in m.source.points.elements:
        fx = m.point_map(x)
        for b in m.target.frame.carrier:
            if m.source.sat[(x, m.frame_hom.map[b])] != m.target.sat[(fx, b)]:
                return Violation("system-morphism", "clause (iii)",
                                 f"({_show(x)}, {_show(b)})")
    return None


def compose_system_morphisms(f: SystemMorphism, g: SystemMorphism) -> SystemMorphism:
    """Apply f, then g: point maps compose forward, frame homs backward."""
    if f.target is not g.source and not (
        f.target.points == g.source.points
        and same_frame(f.target.frame, g.source.frame)
        and dict(f.target.sat) == dict(g.source.sat)
    ):
        raise MixedStructure("composition endpoints do not match")
    return SystemMorphism(
        f.source, g.target,
        compose_point_maps(f.point_map, g.point_map),
        compose_frame_hom(g.frame_hom, f.frame_hom),
    )


def system_iso_check(m: SystemMorphism, samples: int = DEFAULT_SUBSET_SAMPLES) -> bool:
    """Componentwise isomorphism: both components bijective and the inverse
    pair is again a valid morphism."""
    if check_system_morphism(m, samples=samples) is not None:
        return False
    if not m.point_map.is_bijective() or not m.frame_hom.is_bijective():
        return False
    inverse = SystemMorphism(m.target, m.source, m.point_map.inverse(), m.frame_hom.inverse())
    return check_system_morphism(inverse, samples=samples) is None
