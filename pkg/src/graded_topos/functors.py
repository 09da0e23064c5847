"""The four functors between spaces, systems and frames, with executable
adjunction evidence.

Objects built here reuse the in-memory values of their inputs: the system a
space induces has the opens themselves as frame carrier, and the system a
frame induces has the enumerated grade-valued homomorphisms themselves as
points. That keeps every unit/counit/triangle/naturality equation a literal
equality of finite structures, checkable with ==.

Hom enumeration is finitized by an explicit GradeSet L: points of the
frame-induced system are the maps carrier -> L passing the homomorphism
axioms, so every S-side statement is relative to L. The adjunction units
only need L to contain the grades that actually occur, so the triangle
identities are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable

from .checks import LawReport, mask_elements, subset_masks
from .errors import GradeSetTooSmall, NoPoints, NotContinuous, SchemaError
from .frames import FrameHom, GradedFrame, compose_frame_hom, frame_from_space
from .fuzzy_sets import FuzzySet, PointMap, Universe, compose_point_maps, preimage
from .grades import Grade, ONE, ZERO
from .spaces import GradedSpace, canonical_opens, check_continuous
from .systems import (
    GradedSystem,
    SystemMorphism,
    check_spatial,
    compose_system_morphisms,
    system_iso_check,
)


@dataclass(frozen=True)
class GradeSet:
    """Finite set of grades containing 0 and 1, kept sorted."""

    grades: tuple[Grade, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(set(self.grades))) != self.grades:
            raise SchemaError("grades", "must be sorted and duplicate-free")
        if not self.grades or self.grades[0] != ZERO or self.grades[-1] != ONE:
            raise SchemaError("grades", "must contain 0 and 1")

    def __contains__(self, g: Grade) -> bool:
        return g in set(self.grades)

    def __len__(self) -> int:
        return len(self.grades)

    @classmethod
    def closure(cls, values: Iterable[Grade]) -> "GradeSet":
        """The given grades together with 0 and 1."""
        return cls(tuple(sorted(set(values) | {ZERO, ONE})))

    @classmethod
    def for_frame(cls, frame: GradedFrame) -> "GradeSet":
        return cls.closure(frame.relation.values())

    @classmethod
    def for_system(cls, system: GradedSystem) -> "GradeSet":
        return cls.closure(set(system.frame.relation.values()) | set(system.sat.values()))


@dataclass(frozen=True)
class PointHom:
    """A grade-valued homomorphism used as a point: the values are aligned
    with the frame carrier it was enumerated over."""

    carrier: tuple[Hashable, ...]
    values: tuple[Grade, ...]

    def __post_init__(self) -> None:
        if len(self.carrier) != len(self.values):
            raise SchemaError("values", "must be total on the carrier")
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(self.carrier)})
        object.__setattr__(self, "_hash", hash((self.carrier, self.values)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __call__(self, a: Hashable) -> Grade:
        return self.values[self._index[a]]  # type: ignore[attr-defined]

    def as_frame_hom(self, frame: GradedFrame, chain: GradedFrame) -> FrameHom:
        return FrameHom(frame, chain, dict(zip(self.carrier, self.values)))


def ext_column(system: GradedSystem, a: Hashable) -> FuzzySet:
    """The extent of a carrier element: its satisfaction column as a fuzzy
    subset of the points."""
    return FuzzySet(system.points,
                    tuple(system.sat[(x, a)] for x in system.points.elements))


def ext_object(system: GradedSystem) -> GradedSpace:
    """Space of extents: one open per distinct satisfaction column."""
    return GradedSpace(system.points,
                       canonical_opens(ext_column(system, a) for a in system.frame.carrier))


def ext_morphism(m: SystemMorphism) -> PointMap:
    """A system morphism's point component, continuous between the extent
    spaces."""
    return m.point_map


def j_object(space: GradedSpace) -> GradedSystem:
    """The system a space carries: membership read as satisfaction over the
    frame of opens."""
    frame = frame_from_space(space)
    sat = {(x, t): t(x) for x in space.universe.elements for t in space.opens}
    return GradedSystem(space.universe, frame, sat)


def j_morphism(f: PointMap, source: GradedSpace, target: GradedSpace) -> SystemMorphism:
    """Pair a continuous map with its preimage homomorphism."""
    bad = check_continuous(f, source, target)
    if bad is not None:
        raise NotContinuous(str(bad))
    source_sys = j_object(source)
    target_sys = j_object(target)
    hom = FrameHom(target_sys.frame, source_sys.frame,
                   {t: preimage(f, t) for t in target.opens})
    return SystemMorphism(source_sys, target_sys, f, hom)


def fm_object(system: GradedSystem) -> GradedFrame:
    """The frame a system carries."""
    return system.frame


def fm_morphism(m: SystemMorphism) -> FrameHom:
    """A system morphism's frame component (a morphism of frames in the
    opposite direction)."""
    return m.frame_hom


def enumerate_point_homs(frame: GradedFrame, values: GradeSet) -> list[PointHom]:
    """All maps carrier -> values satisfying the homomorphism axioms into
    the grade chain, in canonical (value-lexicographic) order.

    The top must land on 1 and the empty join on 0, so those coordinates are
    pinned and only the rest are enumerated. Join preservation is checked on
    the same subset regime the frame checkers use.
    """
    items = frame.carrier
    n = len(items)
    idx = {a: i for i, a in enumerate(items)}
    meet_idx = [[idx[frame.meet_table[(a, b)]] for b in items] for a in items]
    rel = [[frame.relation[(a, b)] for b in items] for a in items]
    masks = subset_masks(n)
    joins = {mask: idx[frame.join_fn(frozenset(mask_elements(mask, items)))]
             for mask in masks}
    top, bottom = idx[frame.top], idx[frame.bottom]
    if top == bottom:  # the top would need value 1 and the empty join value 0
        return []
    free = [i for i in range(n) if i != top and i != bottom]
    found = []
    for combo in itertools.product(values.grades, repeat=len(free)):
        v: list[Grade] = [ZERO] * n
        v[top], v[bottom] = ONE, ZERO
        for i, g in zip(free, combo):
            v[i] = g
        ok = True
        for i in range(n):
            vi = v[i]
            for j in range(n):
                vj = v[j]
                if v[meet_idx[i][j]] != (vi if vi <= vj else vj):
                    ok = False
                    break
                if vi > vj and rel[i][j] > vj:  # arrow(vi, vj) = vj here
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for mask, jm in joins.items():
                best = ZERO
                rest = mask
                while rest:
                    low = rest & -rest
                    rest ^= low
                    g = v[low.bit_length() - 1]
                    if g > best:
                        best = g
                if v[jm] != best:
                    ok = False
                    break
        if ok:
            found.append(PointHom(items, tuple(v)))
    found.sort(key=lambda p: p.values)
    return found


def s_object(frame: GradedFrame, values: GradeSet) -> GradedSystem:
    """The system of grade-valued homomorphisms of a frame, relative to the
    grade set: points are the enumerated homs, satisfaction is application.

    Raises NoPoints when the enumeration is empty (a system needs points).
    """
    points = enumerate_point_homs(frame, values)
    if not points:
        raise NoPoints(f"no homomorphisms into grades {[str(g) for g in values.grades]}")
    universe = Universe(tuple(points))
    sat = {(v, a): v(a) for v in points for a in frame.carrier}
    return GradedSystem(universe, frame, sat)


def s_morphism(h: FrameHom, values: GradeSet) -> SystemMorphism:
    """Precomposition with a frame homomorphism, from the hom-system of its
    target to the hom-system of its source."""
    source_sys = s_object(h.target, values)
    target_sys = s_object(h.source, values)
    images = []
    for v in source_sys.points.elements:
        composed = PointHom(h.source.carrier,
                            tuple(v(h.map[b]) for b in h.source.carrier))
        if composed not in target_sys.points:
            raise NoPoints("precomposition left the enumerated hom set")
        images.append(composed)
    pm = PointMap(source_sys.points, target_sys.points, tuple(images))
    return SystemMorphism(source_sys, target_sys, pm, h)


def counit(system: GradedSystem) -> SystemMorphism:
    """From the system of the extent space back to the system: identity on
    points, extent on the frame."""
    source = j_object(ext_object(system))
    hom = FrameHom(system.frame, source.frame,
                   {a: ext_column(system, a) for a in system.frame.carrier})
    return SystemMorphism(source, system, PointMap.identity(system.points), hom)


def unit_space(space: GradedSpace) -> PointMap:
    """The identity point map from a space to the extent space of its
    induced system (an isomorphism of spaces)."""
    return PointMap.identity(space.universe)


def point_evaluation(system: GradedSystem, x: Hashable) -> PointHom:
    """The satisfaction row of a point, as a grade-valued hom."""
    return PointHom(system.frame.carrier,
                    tuple(system.sat[(x, a)] for a in system.frame.carrier))


def unit_system(system: GradedSystem, values: GradeSet) -> SystemMorphism:
    """From a system to the hom-system of its frame: each point goes to its
    satisfaction row, the frame component is the identity.

    Raises GradeSetTooSmall when a satisfaction grade is outside the grade
    set (the row would not be an enumerated point).
    """
    pool = set(values.grades)
    for g in system.sat.values():
        if g not in pool:
            raise GradeSetTooSmall(f"satisfaction grade {g} is not in the grade set")
    target = s_object(system.frame, values)
    images = []
    for x in system.points.elements:
        p = point_evaluation(system, x)
        if p not in target.points:
            raise NoPoints("a satisfaction row is not an enumerated hom")
        images.append(p)
    pm = PointMap(system.points, target.points, tuple(images))
    return SystemMorphism(system, target, pm, FrameHom.identity(system.frame))


# ---------------------------------------------------------------------------
# law checks: triangle identities, naturality, equivalence

def is_identity_point_map(pm: PointMap) -> bool:
    return pm.source == pm.target and pm.images == pm.source.elements


def is_identity_frame_hom(h: FrameHom) -> bool:
    return (h.source.carrier == h.target.carrier
            and all(h.map[a] == a for a in h.source.carrier))


def is_identity_system_morphism(m: SystemMorphism) -> bool:
    return is_identity_point_map(m.point_map) and is_identity_frame_hom(m.frame_hom)


def point_maps_equal(f: PointMap, g: PointMap) -> bool:
    return f.source == g.source and f.images == g.images


def frame_homs_equal(f: FrameHom, g: FrameHom) -> bool:
    return (f.source.carrier == g.source.carrier
            and f.target.carrier == g.target.carrier
            and all(f.map[a] == g.map[a] for a in f.source.carrier))


def system_morphisms_equal(f: SystemMorphism, g: SystemMorphism) -> bool:
    return point_maps_equal(f.point_map, g.point_map) and frame_homs_equal(f.frame_hom, g.frame_hom)


def check_triangle_identities(
    adjunction: str,
    instance: GradedSpace | GradedSystem | GradedFrame,
    values: GradeSet | None = None,
) -> tuple[LawReport, ...]:
    """Both triangle identities of the named adjunction ("j-ext", "fm-s" or
    "composite"), evaluated componentwise at the instance."""
    if adjunction == "j-ext":
        if isinstance(instance, GradedSpace):
            space, system = instance, j_object(instance)
        elif isinstance(instance, GradedSystem):
            space, system = ext_object(instance), instance
        else:
            raise SchemaError("instance", "j-ext triangles need a space or a system")
        return (_j_ext_triangle_on_space(space), _j_ext_triangle_on_system(system))
    if adjunction == "fm-s":
        if isinstance(instance, GradedFrame):
            frame = instance
            values = values or GradeSet.for_frame(frame)
            system = s_object(frame, values)
        elif isinstance(instance, GradedSystem):
            system = instance
            frame = fm_object(system)
            values = values or GradeSet.for_system(system)
        else:
            raise SchemaError("instance", "fm-s triangles need a frame or a system")
        return (_fm_s_triangle_on_system(system, values), _fm_s_triangle_on_frame(frame, values))
    if adjunction == "composite":
        if isinstance(instance, GradedSpace):
            space = instance
            frame = frame_from_space(space)
        elif isinstance(instance, GradedFrame):
            frame = instance
            values = values or GradeSet.for_frame(frame)
            space = ext_object(s_object(frame, values))
        else:
            raise SchemaError("instance", "composite triangles need a space or a frame")
        values = values or GradeSet.for_system(j_object(space))
        return (_composite_triangle_on_space(space, values), _composite_triangle_on_frame(frame, values))
    raise SchemaError("adjunction", f"unknown adjunction {adjunction!r}")


def _j_ext_triangle_on_space(space: GradedSpace) -> LawReport:
    system = j_object(space)
    extent = ext_object(system)
    lifted_unit = j_morphism(unit_space(space), space, extent)
    composite = compose_system_morphisms(lifted_unit, counit(system))
    return LawReport("j-ext triangle at the space (counit after lifted unit)",
                     is_identity_system_morphism(composite))


def _j_ext_triangle_on_system(system: GradedSystem) -> LawReport:
    extent = ext_object(system)
    composite = compose_point_maps(unit_space(extent), ext_morphism(counit(system)))
    same_space = ext_object(j_object(extent)).opens == extent.opens
    return LawReport("j-ext triangle at the system (projected counit after unit)",
                     is_identity_point_map(composite) and same_space)


def _fm_s_triangle_on_system(system: GradedSystem, values: GradeSet) -> LawReport:
    unit = unit_system(system, values)
    composite = compose_frame_hom(FrameHom.identity(fm_object(system)), fm_morphism(unit))
    return LawReport("fm-s triangle at the system (projected unit after counit)",
                     is_identity_frame_hom(composite))


def _fm_s_triangle_on_frame(frame: GradedFrame, values: GradeSet) -> LawReport:
    hom_system = s_object(frame, values)
    unit = unit_system(hom_system, values)
    lifted_counit = s_morphism(FrameHom.identity(frame), values)
    composite = compose_system_morphisms(unit, lifted_counit)
    return LawReport("fm-s triangle at the frame (lifted counit after unit)",
                     is_identity_system_morphism(composite))


def composite_unit(space: GradedSpace, values: GradeSet) -> PointMap:
    """Unit of the composite adjunction at a space: each point goes to its
    satisfaction row over the frame of opens."""
    system = j_object(space)
    inner = unit_system(system, values)
    return compose_point_maps(unit_space(space), ext_morphism(inner))


def composite_counit_hom(frame: GradedFrame, values: GradeSet) -> FrameHom:
    """Counit of the composite adjunction at a frame, as the underlying
    frame homomorphism (extent into the opens of the hom-system's space)."""
    return counit(s_object(frame, values)).frame_hom


def _composite_triangle_on_space(space: GradedSpace, values: GradeSet) -> LawReport:
    system = j_object(space)
    frame = system.frame
    hom_system = s_object(frame, values)
    unit_pm = composite_unit(space, values)
    extent = ext_object(hom_system)
    lifted = j_morphism(unit_pm, space, extent)
    composite = compose_frame_hom(composite_counit_hom(frame, values), lifted.frame_hom)
    return LawReport("composite triangle at the space",
                     is_identity_frame_hom(composite))


def _composite_triangle_on_frame(frame: GradedFrame, values: GradeSet) -> LawReport:
    hom_system = s_object(frame, values)
    extent = ext_object(hom_system)
    unit_pm = composite_unit(extent, values)
    lifted_counit = s_morphism(composite_counit_hom(frame, values), values)
    composite = compose_point_maps(unit_pm, ext_morphism(lifted_counit))
    return LawReport("composite triangle at the frame",
                     is_identity_point_map(composite))


def check_naturality(
    adjunction: str,
    morphism: SystemMorphism | tuple[PointMap, GradedSpace, GradedSpace] | FrameHom,
    values: GradeSet | None = None,
) -> tuple[LawReport, ...]:
    """Unit/counit naturality squares of the named adjunction at a morphism:
    a (map, source, target) triple of spaces, a system morphism, or a frame
    homomorphism, whichever category the square lives in."""
    if adjunction == "j-ext":
        if isinstance(morphism, tuple):
            f, source, target = morphism
            lhs = compose_point_maps(f, unit_space(target))
            m = j_morphism(f, source, target)
            rhs = compose_point_maps(unit_space(source), ext_morphism(m))
            return (LawReport("j-ext unit square", point_maps_equal(lhs, rhs)),)
        if isinstance(morphism, SystemMorphism):
            lifted = j_morphism(ext_morphism(morphism),
                                ext_object(morphism.source), ext_object(morphism.target))
            lhs = compose_system_morphisms(lifted, counit(morphism.target))
            rhs = compose_system_morphisms(counit(morphism.source), morphism)
            return (LawReport("j-ext counit square", system_morphisms_equal(lhs, rhs)),)
        raise SchemaError("morphism", "j-ext naturality needs a space map or a system morphism")
    if adjunction == "fm-s":
        if isinstance(morphism, SystemMorphism):
            values = values or GradeSet.closure(
                set(morphism.source.sat.values()) | set(morphism.target.sat.values()))
            lhs = compose_system_morphisms(morphism, unit_system(morphism.target, values))
            rhs = compose_system_morphisms(
                unit_system(morphism.source, values),
                s_morphism(fm_morphism(morphism), values))
            return (LawReport("fm-s unit square", system_morphisms_equal(lhs, rhs)),)
        if isinstance(morphism, FrameHom):
            values = values or GradeSet.closure(
                set(morphism.source.relation.values()) | set(morphism.target.relation.values()))
            roundtrip = fm_morphism(s_morphism(morphism, values))
            return (LawReport("fm-s counit square", frame_homs_equal(roundtrip, morphism)),)
        raise SchemaError("morphism", "fm-s naturality needs a system morphism or a frame hom")
    raise SchemaError("adjunction", f"unknown adjunction {adjunction!r}")


def check_spatial_equivalence(system: GradedSystem) -> bool:
    """The instance-level equivalence: the counit is an isomorphism exactly
    when the system is spatial."""
    spatial, _ = check_spatial(system)
    return spatial == system_iso_check(counit(system))
