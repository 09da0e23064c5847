"""Graded frames and graded frame homomorphisms.

A graded frame carries a finite set of elements, a top, a binary meet, a
join defined on every subset, and a grade-valued relation satisfying nine
axioms. Axioms over pairs and triples are always checked exhaustively;
subset-indexed axioms follow the exhaustive/sampled regime of `checks`
(all 2^n subsets within the cap, a disclosed sample beyond it).

Carrier elements are opaque hashables: strings when frames come from files,
opens (fuzzy sets) for frames built from a space, grades for the chain frame
the hom-enumeration targets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Hashable, Iterable, Mapping

from .checks import (
    DEFAULT_SUBSET_SAMPLES,
    Violation,
    mask_elements,
    subset_cap,
    subset_masks,
    subset_regime,
)
from .errors import MixedCarrier, SchemaError
from .fuzzy_sets import FuzzySet, full_set, graded_inclusion, intersection, union
from .grades import Grade, ONE, ZERO, godel_arrow, inf
from .spaces import GradedSpace


def _show(element: Any) -> str:
    if isinstance(element, FuzzySet):
        return str({k: str(v) for k, v in element.as_map().items()})
    return repr(element)


@dataclass(frozen=True, eq=False)
class GradedFrame:
    """Carrier, top, binary meet table, subset-join evaluator, and the
    grade-valued relation. Compared by identity; use the check functions for
    semantic questions."""

    carrier: tuple[Hashable, ...]
    top: Hashable
    meet_table: Mapping[tuple[Hashable, Hashable], Hashable]
    relation: Mapping[tuple[Hashable, Hashable], Grade]
    join_fn: Callable[[frozenset], Hashable] = field(repr=False)
    join_table: Mapping[frozenset, Hashable] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not self.carrier:
            raise SchemaError("carrier", "must be non-empty")
        index = {}
        for i, a in enumerate(self.carrier):
            if a in index:
                raise SchemaError("carrier", f"duplicate element {_show(a)}")
            index[a] = i
        object.__setattr__(self, "_index", index)
        if self.top not in index:
            raise SchemaError("top", f"{_show(self.top)} is not in the carrier")
        for a in self.carrier:
            for b in self.carrier:
                if (a, b) not in self.meet_table:
                    raise SchemaError("meet", f"missing entry for ({_show(a)}, {_show(b)})")
                if self.meet_table[(a, b)] not in index:
                    raise SchemaError("meet", f"value at ({_show(a)}, {_show(b)}) is outside the carrier")
                if (a, b) not in self.relation:
                    raise SchemaError("relation", f"missing entry for ({_show(a)}, {_show(b)})")
        bottom = self.join_fn(frozenset())
        if bottom not in index:
            raise SchemaError("join", "join of the empty set is outside the carrier")
        object.__setattr__(self, "_bottom", bottom)

    def __len__(self) -> int:
        return len(self.carrier)

    def index(self, a: Hashable) -> int:
        return self._index[a]  # type: ignore[attr-defined]

    def __contains__(self, a: Hashable) -> bool:
        return a in self._index  # type: ignore[attr-defined]

    @property
    def bottom(self) -> Hashable:
        """The join of the empty subset."""
        return self._bottom  # type: ignore[attr-defined]

    def meet(self, a: Hashable, b: Hashable) -> Hashable:
        return self.meet_table[(a, b)]

    def join_of(self, elements: Iterable[Hashable]) -> Hashable:
        return self.join_fn(frozenset(elements))

    def rel(self, a: Hashable, b: Hashable) -> Grade:
        return self.relation[(a, b)]

    @classmethod
    def from_tables(
        cls,
        carrier: Iterable[Hashable],
        top: Hashable,
        meet_table: Mapping[tuple[Hashable, Hashable], Hashable],
        join_table: Mapping[frozenset, Hashable],
        relation: Mapping[tuple[Hashable, Hashable], Grade],
    ) -> "GradedFrame":
        """Frame whose join is given by an explicit total table over subsets."""
        items = tuple(carrier)
        if len(join_table) != 1 << len(items):
            raise SchemaError("join", f"join table must cover all {1 << len(items)} subsets")
        universe = set(items)
        for s, v in join_table.items():
            if not set(s) <= universe:
                raise SchemaError("join", "join table key is not a subset of the carrier")
            if v not in universe:
                raise SchemaError("join", f"join value {_show(v)} is outside the carrier")
        table = {frozenset(s): v for s, v in join_table.items()}
        return cls(items, top, dict(meet_table), dict(relation), table.__getitem__, table)


def frame_from_space(space: GradedSpace) -> GradedFrame:
    """The frame of opens: meet is intersection, join is union, the relation
    is graded inclusion, top is the constant-1 open. Requires a valid space
    (closure makes every table entry land back in the opens)."""
    opens = space.opens
    n = len(opens)
    meet_table = {}
    relation = {}
    for a in opens:
        for b in opens:
            meet_table[(a, b)] = intersection(a, b)
            relation[(a, b)] = graded_inclusion(a, b)
    if n <= subset_cap():
        # materialize the join table mask by mask, each union incrementally
        table: dict[frozenset, FuzzySet] = {}
        joined: list[FuzzySet] = [FuzzySet(space.universe, (ZERO,) * len(space.universe))] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            prev = joined[mask ^ low]
            t = opens[low.bit_length() - 1]
            joined[mask] = union([prev, t])
        for mask in range(1 << n):
            table[frozenset(mask_elements(mask, opens))] = joined[mask]
        return GradedFrame(opens, full_set(space.universe), meet_table, relation,
                           table.__getitem__, table)
    cache: dict[frozenset, FuzzySet] = {}

    def join_fn(subset: frozenset) -> FuzzySet:
        if subset not in cache:
            cache[subset] = union(sorted(subset, key=lambda t: t.grades), space.universe)
        return cache[subset]

    return GradedFrame(opens, full_set(space.universe), meet_table, relation, join_fn)


def chain_frame(values: Iterable[Grade]) -> GradedFrame:
    """The linear frame on a finite grade set: meet is min, join is max with
    empty join 0, and the relation is the Gödel arrow."""
    carrier = tuple(sorted(set(values)))
    if not carrier or carrier[0] != ZERO or carrier[-1] != ONE:
        raise SchemaError("grades", "a grade chain must contain 0 and 1")
    meet_table = {(a, b): min(a, b) for a in carrier for b in carrier}
    relation = {(a, b): godel_arrow(a, b) for a in carrier for b in carrier}
    return GradedFrame(carrier, ONE, meet_table, relation,
                       lambda s: max(s) if s else ZERO)


def finite_meet(frame: GradedFrame, subset: Iterable[Hashable]) -> Hashable:
    """Fold of the binary meet; the empty meet is the top."""
    return reduce(frame.meet, sorted(subset, key=frame.index), frame.top)


def check_frame(frame: GradedFrame, samples: int = DEFAULT_SUBSET_SAMPLES) -> Violation | None:
    """Verify the meet-semilattice laws and then the nine frame axioms;
    returns the first violation found, or None.

    Pairs and triples are exhaustive. Axioms 7-9 run over `subset_masks`,
    which is every subset within the cap and a disclosed sample beyond it;
    in the exhaustive regime the per-subset aggregations are computed by
    sharing each mask's result with its sub-masks.
    """
    items = frame.carrier
    n = len(items)
    idx = {a: i for i, a in enumerate(items)}
    meet_idx = [[idx[frame.meet_table[(a, b)]] for b in items] for a in items]
    rel = [[frame.relation[(a, b)] for b in items] for a in items]

    # structural pre-check: the meet must actually be a semilattice operation
    for i in range(n):
        if meet_idx[i][i] != i:
            return Violation("frame", "meet-semilattice",
                             f"meet({_show(items[i])}, same) is not idempotent")
        for j in range(n):
            if meet_idx[i][j] != meet_idx[j][i]:
                return Violation("frame", "meet-semilattice",
                                 f"meet not commutative at ({_show(items[i])}, {_show(items[j])})")
            for k in range(n):
                if meet_idx[meet_idx[i][j]][k] != meet_idx[i][meet_idx[j][k]]:
                    return Violation(
                        "frame", "meet-semilattice",
                        f"meet not associative at ({_show(items[i])}, {_show(items[j])}, {_show(items[k])})")

    top = idx[frame.top]
    for i in range(n):
        if rel[i][i] != ONE:
            return Violation("frame", "axiom 1", f"relation({_show(items[i])}, same) != 1")
        if rel[i][top] != ONE:
            return Violation("frame", "axiom 5", f"relation({_show(items[i])}, top) != 1")
    for i in range(n):
        for j in range(n):
            if i != j and rel[i][j] == ONE and rel[j][i] == ONE:
                return Violation("frame", "axiom 2",
                                 f"{_show(items[i])} and {_show(items[j])} are distinct but related by 1 both ways")
            m = meet_idx[i][j]
            if rel[m][i] != ONE or rel[m][j] != ONE:
                return Violation("frame", "axiom 4",
                                 f"meet of ({_show(items[i])}, {_show(items[j])}) is not below both")
            for k in range(n):
                if min(rel[i][j], rel[j][k]) > rel[i][k]:
                    return Violation("frame", "axiom 3",
                                     f"transitivity fails at ({_show(items[i])}, {_show(items[j])}, {_show(items[k])})")
                if min(rel[i][j], rel[i][k]) != rel[i][meet_idx[j][k]]:
                    return Violation("frame", "axiom 6",
                                     f"meet distribution fails at ({_show(items[i])}, {_show(items[j])}, {_show(items[k])})")

    masks = subset_masks(n, samples=samples)
    exhaustive = subset_regime(n) == "exhaustive"
    joins: dict[int, int] = {}
    for mask in masks:
        j = frame.join_fn(frozenset(mask_elements(mask, items)))
        if j not in idx:
            return Violation("frame", "join closure",
                             f"join of mask {mask:b} is outside the carrier")
        joins[mask] = idx[j]

    for mask in masks:
        jm = joins[mask]
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if rel[low.bit_length() - 1][jm] != ONE:
                return Violation("frame", "axiom 7",
                                 f"{_show(items[low.bit_length() - 1])} is not below the join of its subset")

    if exhaustive:
        for b in range(n):
            if rel[joins[0]][b] != ONE:
                return Violation("frame", "axiom 8",
                                 f"at target {_show(items[b])}, empty subset (bottom not below it)")
            col = [r[b] for r in rel]
            lower = [ONE] * (1 << n)
            for mask in range(1, 1 << n):
                low = mask & -mask
                lower[mask] = min(lower[mask ^ low], col[low.bit_length() - 1])
                if lower[mask] != rel[joins[mask]][b]:
                    return Violation("frame", "axiom 8",
                                     f"at target {_show(items[b])}, subset mask {mask:b}")
        for a in range(n):
            row = meet_idx[a]
            img = [0] * (1 << n)
            for mask in range(1, 1 << n):
                low = mask & -mask
                img[mask] = img[mask ^ low] | (1 << row[low.bit_length() - 1])
            for mask in range(1 << n):
                if rel[meet_idx[a][joins[mask]]][joins[img[mask]]] != ONE:
                    return Violation("frame", "axiom 9",
                                     f"at {_show(items[a])}, subset mask {mask:b}")
    else:
        for mask in masks:
            members = [i for i in range(n) if mask >> i & 1]
            for b in range(n):
                if inf(rel[a][b] for a in members) != rel[joins[mask]][b]:
                    return Violation("frame", "axiom 8",
                                     f"at target {_show(items[b])}, subset mask {mask:b}")
            for a in range(n):
                image = frozenset(items[meet_idx[a][i]] for i in members)
                j = frame.join_fn(image)
                if j not in idx or rel[meet_idx[a][joins[mask]]][idx[j]] != ONE:
                    return Violation("frame", "axiom 9",
                                     f"at {_show(items[a])}, subset mask {mask:b}")
    return None


@dataclass(frozen=True, eq=False)
class FrameHom:
    """Map between frame carriers, packaged with its endpoints."""

    source: GradedFrame
    target: GradedFrame
    map: Mapping[Hashable, Hashable]

    def __post_init__(self) -> None:
        for a in self.source.carrier:
            if a not in self.map:
                raise SchemaError("map", f"missing image for {_show(a)}")
            if self.map[a] not in self.target:
                raise SchemaError("map", f"image of {_show(a)} is outside the target carrier")

    def __call__(self, a: Hashable) -> Hashable:
        return self.map[a]

    @classmethod
    def identity(cls, frame: GradedFrame) -> "FrameHom":
        return cls(frame, frame, {a: a for a in frame.carrier})

    def is_bijective(self) -> bool:
        values = set(self.map.values())
        return (len(values) == len(self.map)
                and len(self.map) == len(self.target.carrier))

    def inverse(self) -> "FrameHom":
        if not self.is_bijective():
            raise SchemaError("map", "not a bijection")
        return FrameHom(self.target, self.source, {v: k for k, v in self.map.items()})


def same_frame(a: GradedFrame, b: GradedFrame) -> bool:
    """Identity, or table-for-table equality for frames loaded from files."""
    if a is b:
        return True
    return (a.carrier == b.carrier and a.top == b.top
            and dict(a.meet_table) == dict(b.meet_table)
            and dict(a.relation) == dict(b.relation)
            and a.join_table is not None and b.join_table is not None
            and dict(a.join_table) == dict(b.join_table))


def check_frame_hom(h: FrameHom, samples: int = DEFAULT_SUBSET_SAMPLES) -> Violation | None:
    """Check meet preservation, subset-join preservation, relation
    non-expansion, and top preservation (required so satisfaction at the top
    can reach 1 in every system the hom induces)."""
    src, tgt, f = h.source, h.target, h.map
    if f[src.top] != tgt.top:
        return Violation("frame-hom", "top preservation",
                         f"top maps to {_show(f[src.top])}")
    for a in src.carrier:
        for b in src.carrier:
            if f[src.meet_table[(a, b)]] != tgt.meet_table[(f[a], f[b])]:
                return Violation("frame-hom", "clause (i)",
                                 f"meet of ({_show(a)}, {_show(b)}) is not preserved")
            if src.relation[(a, b)] > tgt.relation[(f[a], f[b])]:
                return Violation("frame-hom", "clause (iii)",
                                 f"relation shrinks at ({_show(a)}, {_show(b)})")
    for mask in subset_masks(len(src.carrier), samples=samples):
        subset = mask_elements(mask, src.carrier)
        lhs = f[src.join_fn(frozenset(subset))]
        rhs = tgt.join_fn(frozenset(f[a] for a in subset))
        if lhs != rhs:
            return Violation("frame-hom", "clause (ii)",
                             f"join of subset mask {mask:b} is not preserved")
    return None


def compose_frame_hom(f: FrameHom, g: FrameHom) -> FrameHom:
    """Apply f, then g."""
    if not same_frame(f.target, g.source):
        raise MixedCarrier("composition endpoints do not match")
    return FrameHom(f.source, g.target, {a: g.map[f.map[a]] for a in f.source.carrier})
