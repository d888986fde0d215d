"""Orthogonal surfaces generated by integer antichains.

The surface of a vertex set V is the boundary of the filter
{p : p >= v for some v in V}: a point lies on the surface iff it
dominates some vertex and strictly dominates none.

Exactness convention: probe points that conceptually sit half a unit
off the integer grid are represented on a doubled grid, where an even
coordinate 2c encodes c and an odd coordinate 2c+1 encodes c + 1/2.
All dominance comparisons are then plain integer comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .points import (
    GeometryError,
    Point,
    VertexSet,
    check_same_dim,
    validate_antichain,
)


@dataclass(frozen=True)
class FlatId:
    """One i-flat: a maximal connected piece of the surface with fixed
    i-th coordinate ``value``, spanned by the vertices in ``members``."""

    color: int
    value: int
    members: frozenset[int]


@dataclass(frozen=True)
class StrongDegeneracy:
    """Two distinct flats of the same color and value whose closures meet."""

    color: int
    value: int
    classes: tuple[frozenset[int], frozenset[int]]
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class Surface:
    """An orthogonal surface, optionally suspended.

    ``suspension_ids`` marks one vertex per coordinate direction of the
    form M_i * e_i; when present, every other vertex stays strictly
    below the suspension bound in every coordinate.
    """

    vset: VertexSet
    suspension_ids: frozenset[int] | None = None

    def __post_init__(self):
        if self.suspension_ids is not None:
            d = self.dim
            ids = self.suspension_ids
            if len(ids) != d:
                raise GeometryError(
                    f"a suspended surface in dimension {d} needs {d} suspensions"
                )
            colors = {}
            for vid in ids:
                v = self.vset.vertices[vid]
                support = [j for j in range(d) if v[j] > 0]
                if len(support) != 1:
                    raise GeometryError(
                        f"suspension vertex {vid} must lie on a coordinate axis"
                    )
                colors[support[0] + 1] = vid
            if len(colors) != d:
                raise GeometryError("suspensions must cover all coordinate axes")
            for vid, v in enumerate(self.vset.vertices):
                if vid in ids:
                    continue
                for i in range(1, d + 1):
                    if v[i - 1] >= self.suspension_bound(i):
                        raise GeometryError(
                            f"vertex {vid} reaches the suspension bound in "
                            f"coordinate {i}"
                        )

    @property
    def dim(self) -> int:
        return self.vset.dim

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.vset.vertices

    @property
    def names(self) -> tuple[str, ...]:
        return self.vset.names

    def __len__(self) -> int:
        return len(self.vset)

    @property
    def is_suspended(self) -> bool:
        return self.suspension_ids is not None

    @property
    def inner_ids(self) -> tuple[int, ...]:
        susp = self.suspension_ids or frozenset()
        return tuple(v for v in range(len(self.vset)) if v not in susp)

    def suspension_of_color(self, i: int) -> int:
        if self.suspension_ids is None:
            raise GeometryError("surface is not suspended")
        for vid in self.suspension_ids:
            if self.vset.vertices[vid][i - 1] > 0:
                return vid
        raise GeometryError(f"no suspension for coordinate {i}")

    def suspension_bound(self, i: int) -> int:
        return self.vset.vertices[self.suspension_of_color(i)][i - 1]

    def color_of_suspension(self, vid: int) -> int:
        if self.suspension_ids is None or vid not in self.suspension_ids:
            raise GeometryError(f"vertex {vid} is not a suspension")
        v = self.vset.vertices[vid]
        return next(j + 1 for j in range(self.dim) if v[j] > 0)

    # -- doubled-grid core ------------------------------------------------

    def _verts2(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(2 * c for c in v) for v in self.vset.vertices)

    def on_surface2(self, p2: Sequence[int]) -> bool:
        """Surface membership of a point on the doubled grid."""
        below = False
        for v in self.vset.vertices:
            if all(2 * c <= x for c, x in zip(v, p2)):
                below = True
            if all(2 * c < x for c, x in zip(v, p2)):
                return False
        return below

    def downset2(self, p2: Sequence[int]) -> tuple[int, ...]:
        """Ids of vertices dominated by a doubled-grid point."""
        return tuple(
            vid
            for vid, v in enumerate(self.vset.vertices)
            if all(2 * c <= x for c, x in zip(v, p2))
        )

    def is_witness2(self, p2: Sequence[int], vid: int, i: int) -> bool:
        """Witness test against a doubled-grid point (see is_witness)."""
        v = self.vset.vertices[vid]
        c = i - 1
        if not all(2 * a <= x for a, x in zip(v, p2)):
            return False
        if 2 * v[c] != p2[c]:
            return False
        for w in self.vset.vertices:
            if w[c] >= v[c]:
                continue
            if all(
                w[j] <= v[j] or 2 * w[j] < p2[j]
                for j in range(len(p2))
                if j != c
            ):
                return False
        return True

    # -- public predicates -------------------------------------------------

    def downset(self, p: Point) -> tuple[int, ...]:
        """Ids of vertices dominated by p, in id order."""
        if self.vset.vertices:
            check_same_dim(p, self.vset.vertices[0])
        return self.downset2(tuple(2 * c for c in p))


def on_surface(surface: Surface, p: Point) -> bool:
    """True iff p lies on the surface: p dominates some vertex and
    strictly dominates none."""
    if len(surface.vset) and len(p) != surface.dim:
        raise GeometryError(f"point has dimension {len(p)}, surface {surface.dim}")
    return surface.on_surface2(tuple(2 * c for c in p))


def make_suspended(
    vertices: Sequence[Iterable[int]] | VertexSet,
    names: Sequence[str] | None = None,
) -> Surface:
    """Suspend an antichain of strictly positive points.

    Appends one suspension M_i * e_i per coordinate, M_i = 1 + max of
    the i-th coordinates, so every input vertex satisfies 0 < v_i < M_i.
    """
    if isinstance(vertices, VertexSet):
        vset = vertices
    else:
        vset = validate_antichain(vertices, names)
    if not vset.vertices:
        raise GeometryError("cannot suspend an empty vertex set")
    d = vset.dim
    bad = [
        (vid, i + 1)
        for vid, v in enumerate(vset.vertices)
        for i in range(d)
        if v[i] == 0
    ]
    if bad:
        raise GeometryError(
            f"suspension needs strictly positive coordinates; zeros at "
            f"(vertex, color) pairs {bad}"
        )
    bounds = [1 + max(v[i] for v in vset.vertices) for i in range(d)]
    susp_points = [
        tuple(bounds[i] if j == i else 0 for j in range(d)) for i in range(d)
    ]
    susp_names = []
    taken = set(vset.names)
    for i in range(1, d + 1):
        name = f"s{i}"
        while name in taken:
            name = "_" + name
        taken.add(name)
        susp_names.append(name)
    full = VertexSet(
        dim=d,
        vertices=vset.vertices + tuple(susp_points),
        names=vset.names + tuple(susp_names),
    )
    n = len(vset.vertices)
    return Surface(vset=full, suspension_ids=frozenset(range(n, n + d)))


def is_generic(surface: Surface) -> bool:
    """True iff no two vertices share an i-th coordinate for any i,
    except that suspension vertices may share zeros."""
    susp = surface.suspension_ids or frozenset()
    d = surface.dim
    for c in range(d):
        seen: dict[int, int] = {}
        for vid, v in enumerate(surface.vertices):
            val = v[c]
            if val in seen:
                other = seen[val]
                if val == 0 and vid in susp and other in susp:
                    continue
                return False
            seen[val] = vid
    return True


def is_witness(surface: Surface, p: Point, vid: int, i: int) -> bool:
    """True iff vertex vid witnesses that p lies in the closed i-flat of vid.

    Requires v <= p with v_i = p_i, and that no vertex w has w_i < v_i
    together with w_j <= v_j or w_j < p_j for every other coordinate j.
    """
    if not 0 <= vid < len(surface.vset):
        raise GeometryError(f"vertex id {vid} out of range")
    if not 1 <= i <= surface.dim:
        raise GeometryError(f"color {i} out of range 1..{surface.dim}")
    if len(p) != surface.dim:
        raise GeometryError(f"point has dimension {len(p)}, surface {surface.dim}")
    return surface.is_witness2(tuple(2 * c for c in p), vid, i)


def flat_colors(surface: Surface, p: Point) -> frozenset[int]:
    """Colors i such that p lies in the closed i-flat of some vertex."""
    if not on_surface(surface, p):
        raise GeometryError(f"point {p} is not on the surface")
    p2 = tuple(2 * c for c in p)
    out = set()
    for i in range(1, surface.dim + 1):
        for vid in surface.downset2(p2):
            if surface.is_witness2(p2, vid, i):
                out.add(i)
                break
    return frozenset(out)


def flats(surface: Surface, i: int) -> tuple[FlatId, ...]:
    """All i-flats, each as the set of vertices spanning one connected
    piece of the surface with constant i-th coordinate."""
    if not 1 <= i <= surface.dim:
        raise GeometryError(f"color {i} out of range 1..{surface.dim}")
    verts = surface.vertices
    n = len(verts)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    c = i - 1
    for a, b in combinations(range(n), 2):
        if verts[a][c] != verts[b][c]:
            continue
        if find(a) == find(b):
            continue
        probe = [
            2 * max(verts[a][j], verts[b][j]) + 1 if j != c else 2 * verts[a][c]
            for j in range(surface.dim)
        ]
        if surface.on_surface2(probe):
            parent[find(a)] = find(b)
    groups: dict[int, set[int]] = {}
    for vid in range(n):
        groups.setdefault(find(vid), set()).add(vid)
    out = [
        FlatId(color=i, value=verts[min(g)][c], members=frozenset(g))
        for g in groups.values()
    ]
    out.sort(key=lambda f: (f.value, min(f.members)))
    return tuple(out)


def strong_degeneracy(surface: Surface) -> StrongDegeneracy | None:
    """Search for two distinct same-color same-value flats whose closures
    intersect; returns the first witness in canonical order, or None.

    Candidate intersection points are scanned on the doubled grid: the
    predicates involved only depend on how each coordinate compares to
    the vertex coordinates, so grid points at vertex values and half
    units above them cover every possible order type.
    """
    d = surface.dim
    verts = surface.vertices
    for i in range(1, d + 1):
        c = i - 1
        by_value: dict[int, list[FlatId]] = {}
        for f in flats(surface, i):
            by_value.setdefault(f.value, []).append(f)
        for value in sorted(by_value):
            classes = sorted(by_value[value], key=lambda f: min(f.members))
            if len(classes) < 2:
                continue
            axes: list[list[int]] = []
            for j in range(d):
                if j == c:
                    axes.append([2 * value])
                    continue
                vals = sorted({v[j] for v in verts} | {0})
                cands = sorted({x for val in vals for x in (2 * val, 2 * val + 1)})
                axes.append(cands)
            for fa, fb in combinations(classes, 2):
                for p2 in product(*axes):
                    if not surface.on_surface2(p2):
                        continue
                    if not any(
                        surface.is_witness2(p2, vid, i) for vid in fa.members
                    ):
                        continue
                    if not any(
                        surface.is_witness2(p2, vid, i) for vid in fb.members
                    ):
                        continue
                    return StrongDegeneracy(
                        color=i,
                        value=value,
                        classes=(fa.members, fb.members),
                        point=tuple(Fraction(x, 2) for x in p2),
                    )
    return None


def surface_from_points(
    vertices: Sequence[Iterable[int]],
    names: Sequence[str] | None = None,
    suspension_ids: Iterable[int] | None = None,
) -> Surface:
    """Build a surface from raw points, optionally marking suspensions."""
    vset = validate_antichain(vertices, names)
    ids = frozenset(suspension_ids) if suspension_ids is not None else None
    return Surface(vset=vset, suspension_ids=ids)


def max_coordinate(surface: Surface) -> int:
    return max((max(v) for v in surface.vertices), default=0)
