"""Characteristic points, their ranks, degeneracy patterns, and syzygies.

A generated point is a join of vertices that lies on the surface.  Such
a point p is characteristic when p lies in a closed i-flat for every
color i; its rank is one less than the size of a smallest generating
subset of the vertices below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .points import GeometryError, InternalError, Point, join
from .surface import Surface, flat_colors, on_surface


@dataclass(frozen=True)
class CharPoint:
    """One characteristic point with its local combinatorial data."""

    point: Point
    downset: tuple[int, ...]
    tights: tuple[frozenset[int], ...]
    parts: tuple[frozenset[int], ...]
    rank: int
    rank_ambiguous: bool

    def tight_of(self, vid: int) -> frozenset[int]:
        return self.tights[self.downset.index(vid)]

    @property
    def tight_map(self) -> dict[int, frozenset[int]]:
        return dict(zip(self.downset, self.tights))

    @property
    def downset_key(self) -> frozenset[int]:
        return frozenset(self.downset)


@dataclass(frozen=True)
class DegeneracyWitness:
    """A triple of vertices below one characteristic point whose tight
    sets interleave on a coordinate pair (i, j)."""

    point: Point
    x: int
    u: int
    v: int
    i: int
    j: int


@dataclass(frozen=True)
class SyzygyComplex:
    """Local simplicial complex of a surface point: a color set I is a
    face iff pushing the point half a unit in the directions of I stays
    on the surface."""

    dim: int
    point: Point
    faces: frozenset[frozenset[int]]


def tight_set(surface: Surface, p: Point, vid: int) -> frozenset[int]:
    """Colors where vertex vid meets p: T_p(v) = {i : v_i = p_i}.

    Requires v <= p."""
    v = surface.vertices[vid]
    if len(p) != surface.dim:
        raise GeometryError(f"point has dimension {len(p)}, surface {surface.dim}")
    if not all(a <= b for a, b in zip(v, p)):
        raise GeometryError(f"vertex {vid} is not below {p}")
    return frozenset(i for i in range(1, surface.dim + 1) if v[i - 1] == p[i - 1])


def generated_points(surface: Surface) -> tuple[Point, ...]:
    """All joins of vertex subsets that lie on the surface, sorted."""
    verts = surface.vertices
    closure: set[Point] = set(verts)
    frontier = set(verts)
    while frontier:
        new: set[Point] = set()
        for p in frontier:
            for v in verts:
                q = tuple(max(a, b) for a, b in zip(p, v))
                if q not in closure:
                    new.add(q)
        closure |= new
        frontier = new
    return tuple(sorted(p for p in closure if on_surface(surface, p)))


def _tights_of(surface: Surface, p: Point) -> tuple[tuple[int, ...], list[frozenset[int]]]:
    down = surface.downset(p)
    tights = [
        frozenset(
            i
            for i in range(1, surface.dim + 1)
            if surface.vertices[vid][i - 1] == p[i - 1]
        )
        for vid in down
    ]
    return down, tights


def _pattern_at(
    down: tuple[int, ...], tights: list[frozenset[int]], dim: int
) -> tuple[int, int, int, int, int] | None:
    """First (x, u, v, i, j) with {i,j} <= T(x), j in T(u) w/o i, i in T(v) w/o j."""
    tmap = dict(zip(down, tights))
    for x in down:
        tx = tmap[x]
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                if i == j or i not in tx or j not in tx:
                    continue
                for u in down:
                    if u == x:
                        continue
                    tu = tmap[u]
                    if j not in tu or i in tu:
                        continue
                    for v in down:
                        if v in (x, u):
                            continue
                        tv = tmap[v]
                        if i in tv and j not in tv:
                            return (x, u, v, i, j)
    return None


def is_characteristic(surface: Surface, p: Point) -> bool:
    """True iff p lies in a closed flat of every color.

    Cross-checked against the tight-set formulation (no strict
    containment among the tight sets below p); the two may only differ
    when the vertex triple pattern of a degenerate surface is present
    at p."""
    if not on_surface(surface, p):
        raise GeometryError(f"point {p} is not on the surface")
    geometric = flat_colors(surface, p) == frozenset(range(1, surface.dim + 1))
    down, tights = _tights_of(surface, p)
    attained = frozenset().union(*tights) if tights else frozenset()
    if len(attained) < surface.dim:
        # p is not the join of its downset: a color with no tight vertex
        # has no witness, so p cannot be characteristic, and the
        # tight-set formulation below does not apply
        if geometric:
            raise InternalError(
                f"{p} lies on a flat of every color yet color "
                f"{min(set(range(1, surface.dim + 1)) - attained)} has no "
                f"tight vertex below"
            )
        return False
    combinatorial = not any(
        a != b and tights[a] < tights[b]
        for a in range(len(down))
        for b in range(len(down))
    )
    if geometric != combinatorial:
        if _pattern_at(down, tights, surface.dim) is None:
            raise InternalError(
                f"flat membership and tight-set tests disagree at {p} "
                f"without a degeneracy pattern"
            )
    return geometric


def minimal_generating_sets(surface: Surface, p: Point) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal vertex subsets whose join is p, sorted by
    size and then by ids."""
    if not on_surface(surface, p):
        raise GeometryError(f"point {p} is not on the surface")
    down = surface.downset(p)
    verts = surface.vertices
    found: list[frozenset[int]] = []
    for size in range(1, len(down) + 1):
        for combo in combinations(down, size):
            if any(f <= frozenset(combo) for f in found):
                continue
            if join([verts[v] for v in combo]) == p:
                found.append(frozenset(combo))
    if not found:
        raise GeometryError(f"point {p} is not a join of vertices")
    return tuple(sorted(found, key=lambda f: (len(f), sorted(f))))


def char_point_at(surface: Surface, p: Point) -> CharPoint:
    """Assemble the CharPoint record for a characteristic point p."""
    if not is_characteristic(surface, p):
        raise GeometryError(f"point {p} is not characteristic")
    down, tights = _tights_of(surface, p)
    part_map: dict[frozenset[int], list[int]] = {}
    for vid, t in zip(down, tights):
        part_map.setdefault(t, []).append(vid)
    parts = tuple(
        sorted((frozenset(g) for g in part_map.values()), key=min)
    )
    mgs = minimal_generating_sets(surface, p)
    sizes = {len(g) for g in mgs}
    rank = min(sizes) - 1
    ambiguous = len(sizes) > 1 or min(sizes) != len(parts)
    return CharPoint(
        point=p,
        downset=down,
        tights=tuple(tights),
        parts=parts,
        rank=rank,
        rank_ambiguous=ambiguous,
    )


def characteristic_points(surface: Surface) -> tuple[CharPoint, ...]:
    """All characteristic points, sorted by rank and then by coordinates."""
    out = [
        char_point_at(surface, p)
        for p in generated_points(surface)
        if is_characteristic(surface, p)
    ]
    out.sort(key=lambda cp: (cp.rank, cp.point))
    return tuple(out)


def detect_degeneracy(surface: Surface) -> DegeneracyWitness | None:
    """Scan characteristic points for the vertex triple pattern; returns
    the first witness in canonical order (point, then ids), or None."""
    d = surface.dim
    full = frozenset(range(1, d + 1))
    for p in generated_points(surface):
        if flat_colors(surface, p) != full:
            continue
        down, tights = _tights_of(surface, p)
        hit = _pattern_at(down, tights, d)
        if hit is not None:
            x, u, v, i, j = hit
            return DegeneracyWitness(point=p, x=x, u=u, v=v, i=i, j=j)
    return None


def is_maximum(surface: Surface, p: Point) -> bool:
    """True iff p is a maximal surface point: every color has a vertex
    below p tight exactly there, so every push off p leaves the surface."""
    if not on_surface(surface, p):
        raise GeometryError(f"point {p} is not on the surface")
    down, tights = _tights_of(surface, p)
    return all(
        any(t == frozenset({i}) for t in tights)
        for i in range(1, surface.dim + 1)
    )


def scarf_complex(surface: Surface) -> frozenset[frozenset[int]]:
    """All vertex subsets whose join lies on the surface (generic only)."""
    from .surface import is_generic

    if not is_generic(surface):
        raise GeometryError("the subset-join complex requires a generic surface")
    n = len(surface.vset)
    verts = surface.vertices
    faces: set[frozenset[int]] = set()
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            if on_surface(surface, join([verts[v] for v in combo])):
                faces.add(frozenset(combo))
    return frozenset(faces)


def syzygy_complex(surface: Surface, p: Point) -> SyzygyComplex:
    """Face I iff p pushed half a unit along every color in I stays on
    the surface.  Downward-closedness is asserted."""
    if not on_surface(surface, p):
        raise GeometryError(f"point {p} is not on the surface")
    d = surface.dim
    faces: set[frozenset[int]] = set()
    for size in range(0, d + 1):
        for combo in combinations(range(1, d + 1), size):
            p2 = tuple(
                2 * c + (1 if i in combo else 0) for i, c in enumerate(p, start=1)
            )
            if surface.on_surface2(p2):
                faces.add(frozenset(combo))
    for f in faces:
        for x in f:
            if f - {x} not in faces:
                raise InternalError(
                    f"syzygy complex at {p} is not downward closed: "
                    f"{set(f)} present, {set(f - {x})} missing"
                )
    return SyzygyComplex(dim=d, point=p, faces=frozenset(faces))


def _matrix_rank(rows: list[list[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [row[:] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, m) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def reduced_betti_numbers(faces: frozenset[frozenset[int]]) -> dict[int, int]:
    """Reduced rational Betti numbers of a simplicial complex given by
    its faces (the empty face included for a non-void complex)."""
    if not faces:
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()}

    def boundary_rank(k: int) -> int:
        # rank of the boundary map from k-chains to (k-1)-chains
        if k - 1 not in by_dim or k not in by_dim:
            return 0
        rows = []
        for f in by_dim[k]:
            row = [Fraction(0)] * len(by_dim[k - 1])
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1 :]
                row[index[k - 1][sub]] = Fraction(-1 if pos % 2 else 1)
            rows.append(row)
        return _matrix_rank(rows)

    betti = {}
    for k in range(-1, top + 1):
        dim_ck = len(by_dim.get(k, []))
        betti[k] = dim_ck - boundary_rank(k) - boundary_rank(k + 1)
    return betti


def is_syzygy(surface: Surface, p: Point) -> bool:
    """True iff the local face complex of p has non-trivial reduced
    rational homology in some degree."""
    comp = syzygy_complex(surface, p)
    betti = reduced_betti_numbers(comp.faces)
    return any(b != 0 for b in betti.values())
