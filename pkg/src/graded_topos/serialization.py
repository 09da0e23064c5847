"""Canonical JSON interchange for every structure the CLI consumes.

One format: JSON with sorted keys, two-space indent, a trailing newline, and
grades always serialized as lowest-terms "p/q" strings. Loading validates
structure (totality of tables, membership of references) but never runs the
axiom checkers; those are explicit commands. save(load(f)) is byte-identical
for files in canonical form.

Computed structures whose elements are not strings (frames carrying opens,
systems carrying enumerated homs) are saved by assigning positional names
e0, e1, ... (points: p0, p1, ...) in canonical order.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .errors import GradeRangeError, ParseError, SchemaError
from .frames import GradedFrame
from .fuzzy_sets import FuzzySet, PointMap, Universe
from .grades import Grade, format_grade, grade
from .logic.parser import Signature, parse_formula
from .logic.syntax import Formula, format_formula
from .spaces import GradedSpace, canonical_opens
from .systems import GradedSystem


def dumps_canonical(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(path), str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON at offset {exc.pos}") from exc


def _write(path: str | Path, payload: Any) -> None:
    Path(path).write_text(dumps_canonical(payload))


def _expect_object(obj: Any, field: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an object")
    return obj


def _identifier(value: Any, field: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError(field, "identifiers must be non-empty strings")
    if "," in value:
        raise SchemaError(field, f"identifier {value!r} must not contain a comma")
    return value


def _identifier_list(obj: Any, field: str) -> tuple[str, ...]:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(field, "expected a non-empty array of identifiers")
    return tuple(_identifier(e, field) for e in obj)


def _grade(value: Any, field: str) -> Grade:
    if not isinstance(value, str):
        raise SchemaError(field, "grades must be strings like \"1/2\" or \"0.5\"")
    try:
        return grade(value)
    except GradeRangeError as exc:
        raise SchemaError(field, str(exc)) from exc


def _pair_key(key: str, field: str) -> tuple[str, str]:
    parts = key.split(",")
    if len(parts) != 2 or not all(parts):
        raise SchemaError(field, f"key {key!r} must be two comma-joined identifiers")
    return parts[0], parts[1]


def _names_for(elements: Sequence, prefix: str = "e") -> dict:
    if all(isinstance(e, str) for e in elements):
        return {e: e for e in elements}
    return {e: f"{prefix}{i}" for i, e in enumerate(elements)}


# --- fuzzy sets and point maps ---------------------------------------------

def fuzzy_set_to_json(t: FuzzySet) -> dict:
    return {
        "universe": list(t.universe.elements),
        "membership": {x: format_grade(g) for x, g in zip(t.universe.elements, t.grades)},
    }


def _membership_from_json(obj: Any, universe: Universe, field: str) -> FuzzySet:
    table = _expect_object(obj, field)
    extras = set(table) - set(universe.elements)
    if extras:
        raise SchemaError(field, f"unknown element {sorted(extras)[0]!r}")
    missing = [e for e in universe.elements if e not in table]
    if missing:
        raise SchemaError(field, f"missing grade for {missing[0]!r}")
    return FuzzySet(universe, tuple(_grade(table[e], field) for e in universe.elements))


def fuzzy_set_from_json(obj: Any) -> FuzzySet:
    body = _expect_object(obj, "fuzzy set")
    universe = Universe(_identifier_list(body.get("universe"), "universe"))
    return _membership_from_json(body.get("membership"), universe, "membership")


def point_map_to_json(f: PointMap) -> dict:
    return {
        "source": list(f.source.elements),
        "target": list(f.target.elements),
        "map": {x: y for x, y in zip(f.source.elements, f.images)},
    }


def point_map_from_json(obj: Any) -> PointMap:
    body = _expect_object(obj, "point map")
    source = Universe(_identifier_list(body.get("source"), "source"))
    target = Universe(_identifier_list(body.get("target"), "target"))
    table = _expect_object(body.get("map"), "map")
    missing = [e for e in source.elements if e not in table]
    if missing:
        raise SchemaError("map", f"missing image for {missing[0]!r}")
    images = []
    for e in source.elements:
        y = table[e]
        if y not in target:
            raise SchemaError("map", f"image {y!r} is not in the target universe")
        images.append(y)
    return PointMap(source, target, tuple(images))


# --- spaces -----------------------------------------------------------------

def space_to_json(space: GradedSpace) -> dict:
    return {
        "universe": list(space.universe.elements),
        "opens": [
            {x: format_grade(g) for x, g in zip(space.universe.elements, t.grades)}
            for t in space.opens
        ],
    }


def space_from_json(obj: Any) -> GradedSpace:
    body = _expect_object(obj, "space")
    universe = Universe(_identifier_list(body.get("universe"), "universe"))
    raw = body.get("opens")
    if not isinstance(raw, list):
        raise SchemaError("opens", "expected an array of membership objects")
    opens = [_membership_from_json(entry, universe, f"opens[{i}]") for i, entry in enumerate(raw)]
    if len(set(opens)) != len(opens):
        raise SchemaError("opens", "duplicate opens")
    return GradedSpace(universe, canonical_opens(opens))


# --- frames -----------------------------------------------------------------

def frame_to_json(frame: GradedFrame) -> dict:
    names = _names_for(frame.carrier)
    table = frame.join_table
    if table is None:
        if len(frame.carrier) > 16:
            raise SchemaError("join", "carrier too large to materialize the join table")
        table = {}
        for mask in range(1 << len(frame.carrier)):
            subset = frozenset(a for i, a in enumerate(frame.carrier) if mask >> i & 1)
            table[subset] = frame.join_fn(subset)
    join = {}
    for subset, value in table.items():
        key = ",".join(sorted(names[a] for a in subset))
        join[key] = names[value]
    return {
        "carrier": [names[a] for a in frame.carrier],
        "top": names[frame.top],
        "meet": {f"{names[a]},{names[b]}": names[v] for (a, b), v in frame.meet_table.items()},
        "join": join,
        "relation": {f"{names[a]},{names[b]}": format_grade(g) for (a, b), g in frame.relation.items()},
    }


def frame_from_json(obj: Any) -> GradedFrame:
    body = _expect_object(obj, "frame")
    carrier = _identifier_list(body.get("carrier"), "carrier")
    pool = set(carrier)
    if len(pool) != len(carrier):
        raise SchemaError("carrier", "duplicate elements")
    top = _identifier(body.get("top"), "top")
    if top not in pool:
        raise SchemaError("top", f"{top!r} is not in the carrier")

    raw_meet = _expect_object(body.get("meet"), "meet")
    meet_table = {}
    for key, value in raw_meet.items():
        a, b = _pair_key(key, "meet")
        if a not in pool or b not in pool or value not in pool:
            raise SchemaError("meet", f"entry {key!r} leaves the carrier")
        meet_table[(a, b)] = value
    if len(meet_table) != len(carrier) ** 2:
        raise SchemaError("meet", "table must be total on carrier pairs")

    raw_rel = _expect_object(body.get("relation"), "relation")
    relation = {}
    for key, value in raw_rel.items():
        a, b = _pair_key(key, "relation")
        if a not in pool or b not in pool:
            raise SchemaError("relation", f"entry {key!r} leaves the carrier")
        relation[(a, b)] = _grade(value, "relation")
    if len(relation) != len(carrier) ** 2:
        raise SchemaError("relation", "table must be total on carrier pairs")

    raw_join = _expect_object(body.get("join"), "join")
    join_table = {}
    for key, value in raw_join.items():
        parts = tuple(p for p in key.split(",") if p)
        if len(set(parts)) != len(parts) or any(p not in pool for p in parts):
            raise SchemaError("join", f"key {key!r} is not a subset of the carrier")
        if value not in pool:
            raise SchemaError("join", f"value {value!r} is outside the carrier")
        join_table[frozenset(parts)] = value
    if len(join_table) != 1 << len(carrier):
        raise SchemaError("join", f"table must cover all {1 << len(carrier)} subsets")
    return GradedFrame.from_tables(carrier, top, meet_table, join_table, relation)


# --- systems ----------------------------------------------------------------

def system_to_json(system: GradedSystem) -> dict:
    point_names = _names_for(system.points.elements, "p")
    carrier_names = _names_for(system.frame.carrier)
    frame_json = frame_to_json(system.frame)
    return {
        "points": [point_names[x] for x in system.points.elements],
        "frame": frame_json,
        "sat": {
            f"{point_names[x]},{carrier_names[a]}": format_grade(g)
            for (x, a), g in system.sat.items()
        },
    }


def system_from_json(obj: Any) -> GradedSystem:
    body = _expect_object(obj, "system")
    points = Universe(_identifier_list(body.get("points"), "points"))
    frame = frame_from_json(body.get("frame"))
    raw_sat = _expect_object(body.get("sat"), "sat")
    sat = {}
    for key, value in raw_sat.items():
        x, a = _pair_key(key, "sat")
        if x not in points:
            raise SchemaError("sat", f"unknown point {x!r}")
        if a not in frame:
            raise SchemaError("sat", f"unknown carrier element {a!r}")
        sat[(x, a)] = _grade(value, "sat")
    if len(sat) != len(points) * len(frame.carrier):
        raise SchemaError("sat", "table must be total on points x carrier")
    return GradedSystem(points, frame, sat)


# --- interpretations and formulas --------------------------------------------

def interpretation_to_json(interp) -> dict:
    return {
        "domain": list(interp.domain),
        "constants": {f"c{i}": d for i, d in interp.constants.items()},
        "functions": {
            name: {",".join(k): v for k, v in table.items()}
            for name, table in interp.functions.items()
        },
        "predicates": {
            name: {",".join(k): format_grade(g) for k, g in table.items()}
            for name, table in interp.predicates.items()
        },
    }


def interpretation_from_json(obj: Any):
    from .logic.semantics import Interpretation

    body = _expect_object(obj, "interpretation")
    domain = _identifier_list(body.get("domain"), "domain")
    constants = {}
    for key, value in _expect_object(body.get("constants", {}), "constants").items():
        if not key.startswith("c") or not key[1:].isdigit():
            raise SchemaError("constants", f"key {key!r} is not of the form cN")
        constants[int(key[1:])] = _identifier(value, "constants")
    functions = {}
    for name, raw in _expect_object(body.get("functions", {}), "functions").items():
        table = {}
        for key, value in _expect_object(raw, f"functions.{name}").items():
            args = tuple(key.split(","))
            table[args] = _identifier(value, f"functions.{name}")
        functions[name] = table
    predicates = {}
    for name, raw in _expect_object(body.get("predicates", {}), "predicates").items():
        table = {}
        for key, value in _expect_object(raw, f"predicates.{name}").items():
            args = tuple(key.split(","))
            table[args] = _grade(value, f"predicates.{name}")
        predicates[name] = table
    return Interpretation(domain, constants, functions, predicates)


def formulas_to_json(formulas: Sequence[Formula]) -> dict:
    return {"formulas": [format_formula(f) for f in formulas]}


def formulas_from_json(obj: Any, signature: Signature | None = None) -> list[Formula]:
    body = _expect_object(obj, "formulas")
    raw = body.get("formulas")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("formulas", "expected a non-empty array of formula strings")
    out = []
    for i, text in enumerate(raw):
        if not isinstance(text, str):
            raise SchemaError(f"formulas[{i}]", "expected a string")
        out.append(parse_formula(text, signature))
    return out


# --- file-level wrappers ------------------------------------------------------

def load_fuzzy_set(path: str | Path) -> FuzzySet:
    return fuzzy_set_from_json(_read_json(path))


def load_point_map(path: str | Path) -> PointMap:
    return point_map_from_json(_read_json(path))


def load_space(path: str | Path) -> GradedSpace:
    return space_from_json(_read_json(path))


def load_frame(path: str | Path) -> GradedFrame:
    return frame_from_json(_read_json(path))


def load_system(path: str | Path) -> GradedSystem:
    return system_from_json(_read_json(path))


def load_interpretation(path: str | Path):
    return interpretation_from_json(_read_json(path))


def load_formulas(path: str | Path, signature: Signature | None = None) -> list[Formula]:
    return formulas_from_json(_read_json(path), signature)


def save_fuzzy_set(t: FuzzySet, path: str | Path) -> None:
    _write(path, fuzzy_set_to_json(t))


def save_point_map(f: PointMap, path: str | Path) -> None:
    _write(path, point_map_to_json(f))


def save_space(space: GradedSpace, path: str | Path) -> None:
    _write(path, space_to_json(space))


def save_frame(frame: GradedFrame, path: str | Path) -> None:
    _write(path, frame_to_json(frame))


def save_system(system: GradedSystem, path: str | Path) -> None:
    _write(path, system_to_json(system))


def save_interpretation(interp, path: str | Path) -> None:
    _write(path, interpretation_to_json(interp))


def save_formulas(formulas: Sequence[Formula], path: str | Path) -> None:
    _write(path, formulas_to_json(formulas))
