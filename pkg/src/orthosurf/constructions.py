"""Surface constructions: simplex seed, stacking, pyramid, prism, and
path products.

Every construction re-derives the characteristic-point family of its
output and compares it against an independently built face family; a
mismatch raises ConstructionVerificationError rather than returning an
unverified surface.  The "small enough epsilon" arguments are made
exact by pre-scaling all coordinates by s = 4 * (vertices + dim + 1)
and using epsilon = 1; if verification fails the scale is doubled and
the construction retried once.
"""

from __future__ import annotations

from itertools import combinations

from .charpoints import characteristic_points, is_maximum
from .cporder import SimplicialBall, matches_ball
from .points import GeometryError, Point, VertexSet
from .surface import Surface, is_generic, make_suspended, surface_from_points


class ConstructionVerificationError(GeometryError):
    """The constructed surface does not realize the expected face
    family; carries the missing/extra faces for diagnosis."""

    def __init__(self, message: str, missing=(), extra=()):
        detail = message
        if missing:
            detail += f"; missing faces: {sorted(map(sorted, missing))[:6]}"
        if extra:
            detail += f"; extra faces: {sorted(map(sorted, extra))[:6]}"
        super().__init__(detail)
        self.missing = frozenset(missing)
        self.extra = frozenset(extra)


def cp_family(surface: Surface) -> frozenset[frozenset[int]]:
    """The characteristic-point family as vertex-id sets."""
    return frozenset(frozenset(cp.downset) for cp in characteristic_points(surface))


def maxima_of(surface: Surface) -> tuple[Point, ...]:
    """All maxima, ascending."""
    return tuple(
        cp.point
        for cp in characteristic_points(surface)
        if is_maximum(surface, cp.point)
    )


def _require_family(surface: Surface, expected: frozenset[frozenset[int]], what: str) -> None:
    got = cp_family(surface)
    if got != expected:
        raise ConstructionVerificationError(
            f"{what}: characteristic-point family differs from the face family",
            missing=expected - got,
            extra=got - expected,
        )


def _scaled(surface: Surface, s: int) -> Surface:
    verts = tuple(tuple(c * s for c in v) for v in surface.vertices)
    return Surface(
        VertexSet(surface.dim, verts, surface.names), surface.suspension_ids
    )


def _fresh_name(names: tuple[str, ...], base: str) -> str:
    name = base
    while name in names:
        name = "_" + name
    return name


def simplex_surface(d: int) -> Surface:
    """The suspended surface of a single inner vertex (1, ..., 1); its
    cp-order is the d-simplex face lattice minus one facet."""
    if d < 2:
        raise GeometryError("simplex_surface needs dimension at least 2")
    surface = make_suspended([(1,) * d])
    # faces of the simplex on ids {0 (inner), 1..d (suspensions)} minus
    # the all-suspension outer facet and the improper full face
    expected = frozenset(
        frozenset(c)
        for k in range(1, d + 1)
        for c in combinations(range(d + 1), k)
        if set(c) != set(range(1, d + 1))
    )
    _require_family(surface, expected, "simplex")
    return surface


def stack(surface: Surface, m: Point) -> Surface:
    """Replace the maximum m by a new vertex just below it: the
    cp-order loses that maximum and gains the faces of the stacked
    vertex (all proper subsets of the old facet, coned)."""
    if not surface.is_suspended or not is_generic(surface):
        raise GeometryError("stacking needs a generic suspended surface")
    if not is_maximum(surface, m):
        raise GeometryError(f"{m} is not a maximum; only maxima can be stacked")
    d = surface.dim
    n = len(surface.vertices)
    fam_before = cp_family(surface)
    facet = frozenset(surface.downset(m))
    new_id = n
    expected = (fam_before - {facet}) | {
        frozenset({new_id}) | frozenset(g)
        for k in range(0, d)
        for g in combinations(sorted(facet), k)
    }
    s = 4 * (n + d + 1)
    last_error: ConstructionVerificationError | None = None
    for scale in (s, 2 * s):
        base = _scaled(surface, scale)
        v_new = tuple(c * scale - 1 for c in m)
        verts = base.vertices + (v_new,)
        names = base.names + (_fresh_name(base.names, f"v{new_id}"),)
        stacked = Surface(VertexSet(d, verts, names), base.suspension_ids)
        try:
            if not is_generic(stacked):
                raise ConstructionVerificationError("stacking broke genericity")
            _require_family(stacked, expected, "stack")
            for f in cp_family(stacked):
                if new_id in f and not f <= facet | {new_id}:
                    raise ConstructionVerificationError(
                        f"stacked vertex generates a stray face {sorted(f)}"
                    )
            return stacked
        except ConstructionVerificationError as exc:
            last_error = exc
    raise last_error


def pyramid(surface: Surface) -> Surface:
    """Lift a suspended d-surface into dimension d+1 and add an apex
    suspension: inner vertices move to level 1, suspensions stay at
    level 0, and the apex sits at (0, ..., 0, 2).  The cp-order must
    be exactly the pyramid of the input's face family (base faces, the
    old outer facet, the full base, the apex, and all apex cones)."""
    if not surface.is_suspended:
        raise GeometryError("pyramid needs a suspended surface")
    d = surface.dim
    n = len(surface.vertices)
    susp = surface.suspension_ids
    fam = cp_family(surface)
    apex_id = n
    expected = (
        fam
        | {frozenset(susp), frozenset(range(n)), frozenset({apex_id})}
        | {f | {apex_id} for f in fam}
    )
    verts = tuple(
        v + ((0,) if vid in susp else (1,))
        for vid, v in enumerate(surface.vertices)
    ) + ((0,) * d + (2,),)
    names = surface.names + (_fresh_name(surface.names, f"s{d + 1}"),)
    lifted = Surface(
        VertexSet(d + 1, verts, names), frozenset(susp) | {apex_id}
    )
    _require_family(lifted, expected, "pyramid")
    return lifted


def prism(surface: Surface, m: Point) -> Surface:
    """Double the facet realized by the maximum m.

    The facet's own realization is the restriction of the surface to
    the vertices below m (restricting changes no face of the interval:
    any obstructor of a join below m lies below m itself).  Each vertex
    v of that restriction, contributing its unique coordinate i to m,
    gains a copy v' = v + 2e_i - 1 after pre-scaling.  The result must
    realize the prism over the facet with the copied facet missing as
    its outer face; a mismatch raises with the exact face difference.
    """
    if not is_maximum(surface, m):
        raise GeometryError(f"{m} is not a maximum; only maxima can be prismed")
    d = surface.dim
    facet = sorted(surface.downset(m))
    k = len(facet)
    tight_color: dict[int, int] = {}
    for vid in facet:
        tights = [
            i for i in range(1, d + 1) if surface.vertices[vid][i - 1] == m[i - 1]
        ]
        if len(tights) != 1:
            raise GeometryError(
                f"vertex {vid} contributes {len(tights)} coordinates to {m}"
            )
        tight_color[vid] = tights[0]
    pos = {vid: idx for idx, vid in enumerate(facet)}
    base_faces = frozenset(
        frozenset(pos[x] for x in f)
        for f in cp_family(surface)
        if f <= frozenset(facet)
    )
    top = frozenset(range(k))

    def primed_face(f: frozenset[int]) -> frozenset[int]:
        return frozenset(x + k for x in f)

    expected = (
        base_faces
        | {primed_face(f) for f in base_faces if f != top}
        | {f | primed_face(f) for f in base_faces if f != top}
    )
    base_names = tuple(surface.names[vid] for vid in facet)
    names = base_names + tuple(_fresh_name(base_names, nm + "'") for nm in base_names)
    s = 4 * (k + d + 1)
    last_error: ConstructionVerificationError | None = None
    for scale in (s, 2 * s):
        verts = [
            tuple(c * scale + 1 for c in surface.vertices[vid]) for vid in facet
        ]
        for idx, vid in enumerate(facet):
            i = tight_color[vid]
            verts.append(
                tuple(
                    c + (2 if j == i - 1 else 0) - 1
                    for j, c in enumerate(verts[idx])
                )
            )
        doubled = surface_from_points(verts, names)
        restricted = surface_from_points(verts[:k], base_names)
        try:
            _require_family(restricted, base_faces, "prism base")
            _require_family(doubled, expected, "prism")
            return doubled
        except ConstructionVerificationError as exc:
            last_error = exc
    raise last_error


def path_product(surface: Surface, k: int) -> Surface:
    """Product with a path on k nodes: level i holds a copy of every
    vertex, translated one unit down per level after pre-scaling, with
    the level as a new last coordinate.

    The target family is the boundary complex of the stack of k - 1
    prisms over the base polytope (level copies of every base face,
    side faces between consecutive levels, and the two end caps) minus
    a single facet, the outer face of the product; any other difference
    raises with the exact missing and extra faces.
    """
    if k < 2:
        raise GeometryError("a path product needs at least 2 copies")
    if not surface.is_suspended:
        raise GeometryError(
            "path products need a suspended base so the outer facet is known"
        )
    d = surface.dim + 1
    n = len(surface.vertices)
    polytope_faces = cp_family(surface) | {frozenset(surface.suspension_ids)}

    def level(f: frozenset[int], i: int) -> frozenset[int]:
        return frozenset((i - 1) * n + x for x in f)

    cap = frozenset(range(n))
    sphere = (
        {level(f, i) for f in polytope_faces for i in range(1, k + 1)}
        | {
            level(f, i) | level(f, i + 1)
            for f in polytope_faces
            for i in range(1, k)
        }
        | {level(cap, 1), level(cap, k)}
    )
    facets = frozenset(f for f in sphere if not any(f < g for g in sphere))
    names = tuple(
        f"{surface.names[vid]}@{i}"
        for i in range(1, k + 1)
        for vid in range(n)
    )
    s = 4 * (n + d + 1)
    last_error: ConstructionVerificationError | None = None
    for scale in (s, 2 * s):
        copies = [
            tuple(c * scale + (k - i) for c in v) + (i,)
            for i in range(1, k + 1)
            for v in surface.vertices
        ]
        product_surface = surface_from_points(copies, names)
        got = cp_family(product_surface)
        missing = sphere - got
        extra = got - sphere
        if not extra and len(missing) == 1 and missing <= facets:
            return product_surface
        last_error = ConstructionVerificationError(
            "product: the characteristic-point family must miss exactly one "
            "facet of the product boundary complex",
            missing=missing,
            extra=extra,
        )
    raise last_error


def ball_from_family(
    fam: frozenset[frozenset[int]], outer: frozenset[int], dim: int
) -> SimplicialBall:
    """Package a facet family built from vertex ids as a 1-based
    simplicial ball (facets = maximal faces plus the outer one)."""
    facets = [f for f in fam if not any(f < g for g in fam)]
    labels = sorted({x for f in fam for x in f} | set(outer))
    relabel = {x: i + 1 for i, x in enumerate(labels)}
    return SimplicialBall(
        n=len(labels),
        dim=dim,
        facets=frozenset(
            frozenset(relabel[x] for x in f) for f in [*facets, outer]
        ),
        outer=frozenset(relabel[x] for x in outer),
    )


def verify_against_ball(surface: Surface, ball: SimplicialBall) -> None:
    res = matches_ball(surface, ball)
    if not res.holds:
        raise ConstructionVerificationError(f"surface does not match ball: {res.reason}")
