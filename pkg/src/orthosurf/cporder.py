"""The order of characteristic points and its polytopal properties.

Characteristic points are ordered by dominance and framed by an
artificial bottom and top.  For surfaces realizing a polytope ball the
order is isomorphic to the face lattice of the ball via the map that
sends a point to the set of vertices below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .charpoints import CharPoint, characteristic_points, is_characteristic
from .points import GeometryError, InternalError, Point, dominates, join
from .surface import Surface, on_surface

BOTTOM = 0


@dataclass(frozen=True)
class CpOrder:
    """Characteristic points ordered by dominance, with artificial
    bottom (index 0, rank -1) and top (last index, rank dim)."""

    dim: int
    points: tuple[CharPoint, ...]
    leq: tuple[tuple[bool, ...], ...]
    covers: tuple[tuple[int, int], ...]
    ranks: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.points) + 2

    @property
    def top(self) -> int:
        return self.size - 1

    def point_of(self, idx: int) -> CharPoint:
        if not 1 <= idx <= len(self.points):
            raise GeometryError(f"index {idx} is an artificial bound")
        return self.points[idx - 1]

    def label_of(self, idx: int) -> str:
        if idx == BOTTOM:
            return "bottom"
        if idx == self.top:
            return "top"
        cp = self.point_of(idx)
        return "{" + ",".join(map(str, cp.downset)) + "}@" + str(cp.point)

    def index_of(self, p: Point) -> int:
        for i, cp in enumerate(self.points, start=1):
            if cp.point == p:
                return i
        raise GeometryError(f"{p} is not a characteristic point of the order")


def build_cporder(surface: Surface) -> CpOrder:
    pts = characteristic_points(surface)
    m = len(pts)
    size = m + 2
    top = size - 1
    leq = [[False] * size for _ in range(size)]
    for i in range(size):
        leq[i][i] = True
        leq[BOTTOM][i] = True
        leq[i][top] = True
    for a in range(m):
        for b in range(m):
            if dominates(pts[b].point, pts[a].point):
                leq[a + 1][b + 1] = True
    covers = []
    for a in range(size):
        for b in range(size):
            if a == b or not leq[a][b]:
                continue
            if any(
                leq[a][c] and leq[c][b] and c not in (a, b) for c in range(size)
            ):
                continue
            covers.append((a, b))
    ranks = [-1] + [cp.rank for cp in pts] + [surface.dim]
    return CpOrder(
        dim=surface.dim,
        points=pts,
        leq=tuple(tuple(row) for row in leq),
        covers=tuple(sorted(covers)),
        ranks=tuple(ranks),
    )


def minimal_upper_bounds(order: CpOrder, a: int, b: int) -> tuple[int, ...]:
    ubs = [
        x for x in range(order.size) if order.leq[a][x] and order.leq[b][x]
    ]
    return tuple(
        x for x in ubs if not any(y != x and order.leq[y][x] for y in ubs)
    )


def maximal_lower_bounds(order: CpOrder, a: int, b: int) -> tuple[int, ...]:
    lbs = [
        x for x in range(order.size) if order.leq[x][a] and order.leq[x][b]
    ]
    return tuple(
        x for x in lbs if not any(y != x and order.leq[x][y] for y in lbs)
    )


@dataclass(frozen=True)
class LatticeResult:
    holds: bool
    kind: str | None = None
    pair: tuple[int, int] | None = None
    candidates: tuple[int, ...] = ()


def is_lattice(order: CpOrder) -> LatticeResult:
    """Check unique joins; in a finite order with bottom and top this is
    equivalent to being a lattice.  The witness is the violating pair of
    maximal rank sum (ties broken by index) with its minimal upper
    bounds, which surfaces the highest-rank obstruction first."""
    pairs = sorted(
        (
            (a, b)
            for a, b in combinations(range(order.size), 2)
            if not order.leq[a][b] and not order.leq[b][a]
        ),
        key=lambda ab: (-(order.ranks[ab[0]] + order.ranks[ab[1]]), ab),
    )
    for a, b in pairs:
        mub = minimal_upper_bounds(order, a, b)
        if len(mub) != 1:
            return LatticeResult(False, "join", (a, b), mub)
    for a, b in pairs:
        if len(maximal_lower_bounds(order, a, b)) != 1:
            raise InternalError(
                f"unique joins but several maximal lower bounds for "
                f"({a}, {b}); impossible in a bounded finite order"
            )
    return LatticeResult(True)


@dataclass(frozen=True)
class GradedResult:
    holds: bool
    witness: tuple[int, int] | None = None


def is_graded(order: CpOrder) -> GradedResult:
    """True iff every cover step raises the rank by exactly one."""
    for a, b in order.covers:
        if order.ranks[b] - order.ranks[a] != 1:
            return GradedResult(False, (a, b))
    return GradedResult(True)


@dataclass(frozen=True)
class DiamondResult:
    holds: bool
    interval: tuple[int, int] | None = None
    middles: tuple[int, ...] = ()


def diamond_check(order: CpOrder) -> DiamondResult:
    """Every rank-two interval not ending at the artificial top must
    contain exactly two intermediate elements.  Requires a graded order."""
    if not is_graded(order).holds:
        raise GeometryError("diamond check requires a graded order")
    for a in range(order.size):
        for b in range(order.size):
            if b == order.top or not order.leq[a][b] or a == b:
                continue
            if order.ranks[b] - order.ranks[a] != 2:
                continue
            middles = tuple(
                x
                for x in range(order.size)
                if x not in (a, b) and order.leq[a][x] and order.leq[x][b]
            )
            if len(middles) != 2:
                return DiamondResult(False, (a, b), middles)
    return DiamondResult(True)


@dataclass(frozen=True)
class RigidityResult:
    holds: bool
    mode: str
    witness: tuple | None = None


def is_rigid(surface: Surface) -> RigidityResult:
    """A surface is rigid when the characteristic points of each rank
    form an antichain under dominance.

    When some point has an ambiguous rank (several sizes of minimal
    generating sets, or sizes conflicting with the tight-set partition)
    the rank classes are not well defined; in dimension 3 the check
    falls back to the pairwise form (the join of two vertices, when
    characteristic, dominates exactly those two), otherwise it errors.
    """
    pts = characteristic_points(surface)
    ambiguous = [cp for cp in pts if cp.rank_ambiguous]
    if ambiguous:
        if surface.dim != 3:
            raise GeometryError(
                f"ranks are ambiguous at {ambiguous[0].point}; the rank "
                f"antichain test needs unambiguous ranks"
            )
        verts = surface.vertices
        for a, b in combinations(range(len(verts)), 2):
            p = join([verts[a], verts[b]])
            if not on_surface(surface, p):
                continue
            if not is_characteristic(surface, p):
                continue
            down = surface.downset(p)
            if len(down) != 2:
                return RigidityResult(False, "pair-degree", (a, b, down))
        return RigidityResult(True, "pair-degree")
    by_rank: dict[int, list[CharPoint]] = {}
    for cp in pts:
        by_rank.setdefault(cp.rank, []).append(cp)
    for rank in sorted(by_rank):
        group = by_rank[rank]
        for x, y in combinations(group, 2):
            if dominates(x.point, y.point) or dominates(y.point, x.point):
                return RigidityResult(
                    False, "rank-antichain", (x.point, y.point, rank)
                )
    return RigidityResult(True, "rank-antichain")


# -- simplicial balls -------------------------------------------------------


@dataclass(frozen=True)
class SimplicialBall:
    """A simplicial (d-1)-sphere given by its facets, with one facet
    marked as outer; labels are 1..n."""

    n: int
    dim: int
    facets: frozenset[frozenset[int]]
    outer: frozenset[int]

    def __post_init__(self):
        if self.n < self.dim:
            raise GeometryError("fewer labels than the dimension")
        seen: set[int] = set()
        for f in self.facets:
            if len(f) != self.dim:
                raise GeometryError(
                    f"facet {sorted(f)} has {len(f)} vertices, expected "
                    f"{self.dim} (complex must be pure)"
                )
            if not all(1 <= x <= self.n for x in f):
                raise GeometryError(f"facet {sorted(f)} uses labels outside 1..{self.n}")
            seen |= f
        if seen != set(range(1, self.n + 1)):
            raise GeometryError("every label must appear in some facet")
        if self.outer not in self.facets:
            raise GeometryError("the outer facet must be one of the facets")
        for ridge in {
            f - {x} for f in self.facets for x in f
        }:
            count = sum(1 for f in self.facets if ridge <= f)
            if count > 2:
                raise GeometryError(
                    f"ridge {sorted(ridge)} lies in {count} facets"
                )

    @property
    def inner_labels(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.outer

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(
            frozenset(e) for f in self.facets for e in combinations(sorted(f), 2)
        )

    def facets_of(self, face: frozenset[int]) -> tuple[frozenset[int], ...]:
        return tuple(f for f in sorted(self.facets, key=sorted) if face <= f)


def face_lattice_of_ball(ball: SimplicialBall) -> frozenset[frozenset[int]]:
    """All nonempty faces of the ball: subsets of facets, with the outer
    facet itself removed (its proper subfaces remain)."""
    faces: set[frozenset[int]] = set()
    for f in ball.facets:
        for size in range(1, len(f) + 1):
            for combo in combinations(sorted(f), size):
                faces.add(frozenset(combo))
    faces.discard(ball.outer)
    return frozenset(faces)


# -- face-family matching ---------------------------------------------------


@dataclass(frozen=True)
class MatchResult:
    holds: bool
    mapping: tuple[tuple[int, int], ...] | None = None
    reason: str | None = None


def _element_signature(elem, faces):
    sizes: dict[int, int] = {}
    for f in faces:
        if elem in f:
            sizes[len(f)] = sizes.get(len(f), 0) + 1
    return tuple(sorted(sizes.items()))


def find_face_bijection(
    elems_a,
    faces_a,
    elems_b,
    faces_b,
    allowed: dict | None = None,
):
    """Search a bijection elems_a -> elems_b carrying the face family
    faces_a exactly onto faces_b; returns a dict or None.  ``allowed``
    restricts candidate images per element."""
    elems_a = sorted(elems_a)
    elems_b = sorted(elems_b)
    if len(elems_a) != len(elems_b) or len(faces_a) != len(faces_b):
        return None
    if sorted(map(len, faces_a)) != sorted(map(len, faces_b)):
        return None
    sig_b: dict[int, tuple] = {e: _element_signature(e, faces_b) for e in elems_b}
    cands: dict[int, list[int]] = {}
    for ea in elems_a:
        sig = _element_signature(ea, faces_a)
        opts = [eb for eb in elems_b if sig_b[eb] == sig]
        if allowed is not None and ea in allowed:
            opts = [eb for eb in opts if eb in allowed[ea]]
        if not opts:
            return None
        cands[ea] = opts
    faces_b_set = set(faces_b)
    order = sorted(elems_a, key=lambda e: len(cands[e]))
    assignment: dict[int, int] = {}
    used: set[int] = set()

    faces_a_sorted = sorted(faces_a, key=lambda f: (len(f), sorted(f)))

    def consistent() -> bool:
        for fa in faces_a_sorted:
            if all(x in assignment for x in fa):
                if frozenset(assignment[x] for x in fa) not in faces_b_set:
                    return False
        return True

    def backtrack(k: int) -> bool:
        if k == len(order):
            image = {frozenset(assignment[x] for x in fa) for fa in faces_a}
            return image == faces_b_set
        ea = order[k]
        for eb in cands[ea]:
            if eb in used:
                continue
            assignment[ea] = eb
            used.add(eb)
            if consistent() and backtrack(k + 1):
                return True
            del assignment[ea]
            used.remove(eb)
        return False

    if backtrack(0):
        return dict(assignment)
    return None


def cp_face_family(surface: Surface) -> tuple[tuple[frozenset[int], ...], str | None]:
    """Downsets of all characteristic points as a face family.

    Returns (faces, problem): problem is set when two points share a
    downset or when dominance disagrees with downset inclusion, in
    which case the family cannot represent the order."""
    pts = characteristic_points(surface)
    fams = [cp.downset_key for cp in pts]
    if len(set(fams)) != len(fams):
        return tuple(fams), "two characteristic points share a downset"
    for x, y in combinations(pts, 2):
        dom = dominates(y.point, x.point)
        inc = x.downset_key < y.downset_key
        rdom = dominates(x.point, y.point)
        rinc = y.downset_key < x.downset_key
        if dom != inc or rdom != rinc:
            return (
                tuple(fams),
                f"dominance and downset inclusion disagree on "
                f"{x.point} vs {y.point}",
            )
    return tuple(fams), None


def matches_faces(
    surface: Surface,
    faces: frozenset[frozenset[int]],
    outer_labels: frozenset[int],
) -> MatchResult:
    """Test whether the characteristic points of the surface, mapped to
    their downsets, form exactly the given face family under some
    relabeling that sends suspensions onto ``outer_labels``."""
    fams, problem = cp_face_family(surface)
    if problem is not None:
        return MatchResult(False, None, problem)
    labels = {x for f in faces for x in f}
    susp = surface.suspension_ids or frozenset()
    inner = set(range(len(surface.vset))) - susp
    allowed = {vid: set(outer_labels) for vid in susp}
    allowed.update({vid: labels - outer_labels for vid in inner})
    mapping = find_face_bijection(
        range(len(surface.vset)), set(fams), labels, faces, allowed
    )
    if mapping is None:
        return MatchResult(
            False,
            None,
            f"no relabeling matches: surface has {len(fams)} faces "
            f"{sorted(map(len, fams))}, target has {len(faces)} faces "
            f"{sorted(map(len, faces))}",
        )
    return MatchResult(True, tuple(sorted(mapping.items())))


def matches_ball(surface: Surface, ball: SimplicialBall) -> MatchResult:
    """Test whether the cp-order realizes the ball: downsets must match
    the ball faces (outer facet removed) with suspensions landing on the
    outer facet's vertices."""
    if not surface.is_suspended:
        return MatchResult(False, None, "surface is not suspended")
    if surface.dim != ball.dim:
        return MatchResult(
            False, None, f"dimension mismatch: {surface.dim} vs {ball.dim}"
        )
    if len(surface.vset) != ball.n:
        return MatchResult(
            False, None, f"vertex count mismatch: {len(surface.vset)} vs {ball.n}"
        )
    return matches_faces(surface, face_lattice_of_ball(ball), ball.outer)
