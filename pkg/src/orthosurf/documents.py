"""Versioned JSON documents for surfaces, simplicial balls, and
suspended plane triangulations.

Formats are "surface/1", "ball/1" and "triangulation/1".  Emission is
canonical — sorted object keys, two-space indent, canonical ordering
inside collections — so canonical text round-trips byte-identically
through parse/emit.
"""

from __future__ import annotations

import json
from typing import Any

from .cporder import SimplicialBall
from .schnyder import PlaneGraph
from .surface import Surface, surface_from_points

SURFACE_FORMAT = "surface/1"
BALL_FORMAT = "ball/1"
TRIANGULATION_FORMAT = "triangulation/1"


class DocumentError(ValueError):
    """The document violates its schema; the message names the field."""


def _dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _load_object(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    return doc


def _expect_format(doc: dict, expected: str) -> None:
    fmt = doc.get("format")
    if fmt != expected:
        raise DocumentError(f"field 'format': expected {expected!r}, got {fmt!r}")


def _no_unknown_fields(doc: dict, allowed: set[str]) -> None:
    unknown = set(doc) - allowed
    if unknown:
        raise DocumentError(f"unknown fields: {sorted(unknown)}")


def _int(value: Any, field: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"field {field!r} must be an integer")
    return value


def _int_array(value: Any, field: str) -> list[int]:
    if not isinstance(value, list):
        raise DocumentError(f"field {field!r} must be an array")
    for x in value:
        if not isinstance(x, int) or isinstance(x, bool):
            raise DocumentError(f"field {field!r} must contain only integers")
    return value


# -- surfaces -----------------------------------------------------------------


def parse_surface(text: str) -> Surface:
    doc = _load_object(text)
    _expect_format(doc, SURFACE_FORMAT)
    _no_unknown_fields(
        doc, {"format", "dim", "vertices", "names", "suspensions", "metadata"}
    )
    dim = _int(doc.get("dim"), "dim")
    raw = doc.get("vertices")
    if not isinstance(raw, list) or not raw:
        raise DocumentError("field 'vertices' must be a non-empty array")
    vertices = []
    for k, row in enumerate(raw):
        coords = _int_array(row, f"vertices[{k}]")
        if len(coords) != dim:
            raise DocumentError(
                f"vertices[{k}] has {len(coords)} coordinates, expected {dim}"
            )
        vertices.append(tuple(coords))
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(
            isinstance(x, str) for x in names
        ):
            raise DocumentError("field 'names' must be an array of strings")
        if len(names) != len(vertices):
            raise DocumentError(
                f"{len(names)} names for {len(vertices)} vertices"
            )
    susp = doc.get("suspensions")
    if susp is not None:
        susp = _int_array(susp, "suspensions")
        bad = [x for x in susp if not 0 <= x < len(vertices)]
        if bad:
            raise DocumentError(f"suspension ids out of range: {bad}")
    meta = doc.get("metadata")
    if meta is not None and not isinstance(meta, dict):
        raise DocumentError("field 'metadata' must be an object")
    return surface_from_points(vertices, names, susp)


def surface_to_doc(surface: Surface, metadata: dict | None = None) -> dict:
    doc: dict[str, Any] = {
        "format": SURFACE_FORMAT,
        "dim": surface.dim,
        "vertices": [list(v) for v in surface.vertices],
        "names": list(surface.names),
    }
    if surface.is_suspended:
        doc["suspensions"] = sorted(surface.suspension_ids)
    if metadata:
        doc["metadata"] = metadata
    return doc


def emit_surface(surface: Surface, metadata: dict | None = None) -> str:
    return _dumps(surface_to_doc(surface, metadata))


# -- balls --------------------------------------------------------------------


def parse_ball(text: str) -> SimplicialBall:
    doc = _load_object(text)
    _expect_format(doc, BALL_FORMAT)
    _no_unknown_fields(doc, {"format", "n", "dim", "facets", "outer", "metadata"})
    n = _int(doc.get("n"), "n")
    dim = _int(doc.get("dim"), "dim")
    raw = doc.get("facets")
    if not isinstance(raw, list) or not raw:
        raise DocumentError("field 'facets' must be a non-empty array")
    facets = []
    for k, row in enumerate(raw):
        facet = _int_array(row, f"facets[{k}]")
        if sorted(set(facet)) != facet:
            raise DocumentError(
                f"facets[{k}] must be strictly increasing, got {facet}"
            )
        facets.append(frozenset(facet))
    outer = _int_array(doc.get("outer"), "outer")
    if sorted(set(outer)) != outer:
        raise DocumentError(f"field 'outer' must be strictly increasing, got {outer}")
    meta = doc.get("metadata")
    if meta is not None and not isinstance(meta, dict):
        raise DocumentError("field 'metadata' must be an object")
    return SimplicialBall(
        n=n, dim=dim, facets=frozenset(facets), outer=frozenset(outer)
    )


def ball_to_doc(ball: SimplicialBall, metadata: dict | None = None) -> dict:
    doc: dict[str, Any] = {
        "format": BALL_FORMAT,
        "n": ball.n,
        "dim": ball.dim,
        "facets": sorted(sorted(f) for f in ball.facets),
        "outer": sorted(ball.outer),
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def emit_ball(ball: SimplicialBall, metadata: dict | None = None) -> str:
    return _dumps(ball_to_doc(ball, metadata))


# -- triangulations -----------------------------------------------------------


def parse_triangulation(text: str) -> PlaneGraph:
    doc = _load_object(text)
    _expect_format(doc, TRIANGULATION_FORMAT)
    _no_unknown_fields(doc, {"format", "rotations", "outer", "metadata"})
    raw = doc.get("rotations")
    if not isinstance(raw, list) or not raw:
        raise DocumentError("field 'rotations' must be a non-empty array")
    rotations: dict[int, tuple[int, ...]] = {}
    for k, row in enumerate(raw):
        if (
            not isinstance(row, list)
            or len(row) != 2
            or not isinstance(row[0], int)
            or isinstance(row[0], bool)
        ):
            raise DocumentError(
                f"rotations[{k}] must be a [vertex, [neighbors...]] pair"
            )
        v, nbrs = row
        nbrs = _int_array(nbrs, f"rotations[{k}][1]")
        if v in rotations:
            raise DocumentError(f"duplicate rotation for vertex {v}")
        rotations[v] = tuple(nbrs)
    outer = _int_array(doc.get("outer"), "outer")
    if len(outer) != 3:
        raise DocumentError(f"field 'outer' must list 3 suspensions, got {outer}")
    meta = doc.get("metadata")
    if meta is not None and not isinstance(meta, dict):
        raise DocumentError("field 'metadata' must be an object")
    return PlaneGraph.from_dict(rotations, tuple(outer))


def _canonical_rotation(nbrs: tuple[int, ...]) -> list[int]:
    k = nbrs.index(min(nbrs))
    return list(nbrs[k:] + nbrs[:k])


def triangulation_to_doc(graph: PlaneGraph, metadata: dict | None = None) -> dict:
    doc: dict[str, Any] = {
        "format": TRIANGULATION_FORMAT,
        "rotations": [
            [v, _canonical_rotation(nbrs)] for v, nbrs in graph.rotations
        ],
        "outer": list(graph.outer),
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def emit_triangulation(graph: PlaneGraph, metadata: dict | None = None) -> str:
    return _dumps(triangulation_to_doc(graph, metadata))


# -- shared helpers -----------------------------------------------------------

_PARSERS = {
    SURFACE_FORMAT: (parse_surface, lambda obj, meta: surface_to_doc(obj, meta)),
    BALL_FORMAT: (parse_ball, lambda obj, meta: ball_to_doc(obj, meta)),
    TRIANGULATION_FORMAT: (
        parse_triangulation,
        lambda obj, meta: triangulation_to_doc(obj, meta),
    ),
}


def canonicalize(text: str) -> str:
    """Validate any known document and re-emit it canonically,
    preserving metadata."""
    doc = _load_object(text)
    fmt = doc.get("format")
    if fmt not in _PARSERS:
        raise DocumentError(f"unknown format {fmt!r}")
    parse, to_doc = _PARSERS[fmt]
    obj = parse(text)
    return _dumps(to_doc(obj, doc.get("metadata")))


def load_surface(path: str) -> Surface:
    with open(path, encoding="utf-8") as fh:
        return parse_surface(fh.read())


def load_ball(path: str) -> SimplicialBall:
    with open(path, encoding="utf-8") as fh:
        return parse_ball(fh.read())


def load_triangulation(path: str) -> PlaneGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_triangulation(fh.read())
