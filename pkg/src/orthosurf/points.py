"""Integer points, dominance comparisons, and antichain validation.

Points are tuples of non-negative integers.  Coordinate directions
("colors") are 1-based in every public signature; vertex ids are the
0-based positions of the vertices in their input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Point = tuple[int, ...]


class GeometryError(ValueError):
    """Base class for all geometric input errors."""


class DimensionMismatch(GeometryError):
    """Points of different dimensions were mixed in one operation."""


class NotAnAntichain(GeometryError):
    """A vertex set contains two comparable points."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class InternalError(AssertionError):
    """An invariant that should hold by theorem was violated."""


def as_point(coords: Iterable[int]) -> Point:
    p = tuple(coords)
    if not p:
        raise GeometryError("points must have at least one coordinate")
    for c in p:
        if not isinstance(c, int) or isinstance(c, bool):
            raise GeometryError(f"coordinates must be integers, got {c!r}")
        if c < 0:
            raise GeometryError(f"coordinates must be non-negative, got {c}")
    return p


def check_same_dim(p: Point, q: Point) -> None:
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension mismatch: {len(p)} vs {len(q)}")


def dominates(p: Point, q: Point) -> bool:
    """True iff p >= q coordinatewise."""
    check_same_dim(p, q)
    return all(a >= b for a, b in zip(p, q))


def strictly_dominates(p: Point, q: Point) -> bool:
    """True iff p > q in every coordinate."""
    check_same_dim(p, q)
    return all(a > b for a, b in zip(p, q))


def almost_strictly_dominates(p: Point, q: Point, i: int) -> bool:
    """True iff p_i == q_i and p_j > q_j for every j != i (i is 1-based)."""
    check_same_dim(p, q)
    if not 1 <= i <= len(p):
        raise GeometryError(f"color {i} out of range 1..{len(p)}")
    return p[i - 1] == q[i - 1] and all(
        a > b for j, (a, b) in enumerate(zip(p, q), start=1) if j != i
    )


def join(points: Sequence[Point]) -> Point:
    """Coordinatewise maximum of a non-empty collection of points."""
    pts = list(points)
    if not pts:
        raise GeometryError("join of an empty collection is undefined")
    for p in pts[1:]:
        check_same_dim(pts[0], p)
    return tuple(max(cs) for cs in zip(*pts))


def meet(points: Sequence[Point]) -> Point:
    """Coordinatewise minimum of a non-empty collection of points."""
    pts = list(points)
    if not pts:
        raise GeometryError("meet of an empty collection is undefined")
    for p in pts[1:]:
        check_same_dim(pts[0], p)
    return tuple(min(cs) for cs in zip(*pts))


@dataclass(frozen=True)
class VertexSet:
    """A validated antichain of integer points.

    Vertex ids are positions in ``vertices``; ``names`` runs parallel to
    ``vertices`` and defaults to ``v{id}``.
    """

    dim: int
    vertices: tuple[Point, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise GeometryError("dimension must be at least 1")
        if not self.names and self.vertices:
            object.__setattr__(
                self, "names", tuple(f"v{i}" for i in range(len(self.vertices)))
            )
        if len(self.names) != len(self.vertices):
            raise GeometryError("names and vertices must have equal length")

    def __len__(self) -> int:
        return len(self.vertices)

    def name_of(self, vid: int) -> str:
        return self.names[vid]

    def id_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GeometryError(f"unknown vertex name {name!r}") from None


def validate_antichain(
    vertices: Sequence[Iterable[int]],
    names: Sequence[str] | None = None,
    dim: int | None = None,
) -> VertexSet:
    """Validate points as a non-empty antichain and wrap them in a VertexSet.

    Raises NotAnAntichain (carrying the offending id pair) if one point
    dominates another, including duplicates.
    """
    pts = [as_point(v) for v in vertices]
    if not pts:
        raise GeometryError("vertex set must be non-empty")
    d = len(pts[0]) if dim is None else dim
    for p in pts:
        if len(p) != d:
            raise DimensionMismatch(f"dimension mismatch: {len(p)} vs {d}")
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if dominates(pts[a], pts[b]):
                raise NotAnAntichain(
                    f"vertex {a} dominates vertex {b}: {pts[a]} >= {pts[b]}",
                    (a, b),
                )
            if dominates(pts[b], pts[a]):
                raise NotAnAntichain(
                    f"vertex {b} dominates vertex {a}: {pts[b]} >= {pts[a]}",
                    (b, a),
                )
    if names is None:
        names = tuple(f"v{i}" for i in range(len(pts)))
    else:
        names = tuple(names)
        if len(names) != len(pts):
            raise GeometryError("names and vertices must have equal length")
        if len(set(names)) != len(names):
            raise GeometryError("vertex names must be unique")
    return VertexSet(dim=d, vertices=tuple(pts), names=names)
