"""Schnyder woods of suspended plane graphs and 3D surfaces.

Rotations are stored in a fixed cyclic convention ("wood order"): for a
surface drawn by projecting onto the plane x+y+z = const, the wood
order at a vertex lists neighbors by increasing angle of the projected
direction, so the three outgoing colors of an inner vertex appear in
the cyclic order 1, 2, 3.  Suspension a_i carries an implicit half-edge
of color i pointing into the outer face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .charpoints import characteristic_points, is_maximum
from .cporder import is_rigid
from .points import GeometryError, InternalError, Point
from .surface import Surface, make_suspended

HALF = -1  # token for the suspension half-edge slot in a rotation


def _direction_class(d: tuple[int, int]) -> int:
    dx, dy = d
    if dx == 0 and dy == 0:
        raise GeometryError("zero direction vector")
    if dy < 0:
        return 0
    if dy == 0 and dx > 0:
        return 1
    if dy > 0:
        return 2
    return 3  # dy == 0, dx < 0


def _angle_cmp(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    c1, c2 = _direction_class(d1), _direction_class(d2)
    if c1 != c2:
        return -1 if c1 < c2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    raise GeometryError(f"directions {d1} and {d2} are parallel")


def sort_by_angle(dirs: dict[int, tuple[int, int]]) -> tuple[int, ...]:
    """Neighbors sorted into wood order by exact projected angle."""
    return tuple(
        sorted(dirs, key=cmp_to_key(lambda a, b: _angle_cmp(dirs[a], dirs[b])))
    )


@dataclass(frozen=True)
class PlaneGraph:
    """A suspended plane graph: cyclic rotations plus the outer triple
    (a1, a2, a3); the outer face must be the triangle a1 a3 a2 in trace
    order."""

    rotations: tuple[tuple[int, tuple[int, ...]], ...]
    outer: tuple[int, int, int]

    @classmethod
    def from_dict(
        cls, rotations: dict[int, tuple[int, ...]], outer: tuple[int, int, int]
    ) -> "PlaneGraph":
        rots = tuple(sorted((v, tuple(nbrs)) for v, nbrs in rotations.items()))
        g = cls(rotations=rots, outer=tuple(outer))
        g.validate()
        return g

    @property
    def rotation_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rotations)

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.rotations)

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(
            frozenset((v, w)) for v, nbrs in self.rotations for w in nbrs
        )

    @property
    def outer_edges(self) -> frozenset[frozenset[int]]:
        a1, a2, a3 = self.outer
        return frozenset(
            {frozenset((a1, a2)), frozenset((a2, a3)), frozenset((a1, a3))}
        )

    def validate(self) -> None:
        rot = self.rotation_map
        if len(rot) != len(self.rotations):
            raise GeometryError("duplicate vertex in rotations")
        if len(set(self.outer)) != 3:
            raise GeometryError("outer vertices must be three distinct ids")
        for a in self.outer:
            if a not in rot:
                raise GeometryError(f"outer vertex {a} missing from rotations")
        for v, nbrs in self.rotations:
            if len(set(nbrs)) != len(nbrs):
                raise GeometryError(f"repeated neighbor at vertex {v}")
            if v in nbrs:
                raise GeometryError(f"loop at vertex {v}")
            for w in nbrs:
                if w not in rot:
                    raise GeometryError(f"unknown neighbor {w} of {v}")
                if v not in rot[w]:
                    raise GeometryError(f"edge {v}-{w} is not symmetric")
            if not nbrs:
                raise GeometryError(f"isolated vertex {v}")
        a1, a2, a3 = self.outer
        for x, y in ((a1, a2), (a2, a3), (a1, a3)):
            if frozenset((x, y)) not in self.edges:
                raise GeometryError(f"missing outer edge {x}-{y}")
        walk = self.trace_face(a1, a3)
        if set(walk) != set(self.outer) or len(walk) != 3:
            raise GeometryError(
                f"outer face traced from {a1}->{a3} is {walk}, expected the "
                f"outer triangle"
            )
        v = len(rot)
        e = len(self.edges)
        f = len(self.faces())
        if v - e + f != 2:
            raise GeometryError(
                f"rotation system is not planar: V-E+F = {v}-{e}+{f}"
            )

    def next_in_face(self, u: int, v: int) -> tuple[int, int]:
        """Successor half-edge of (u, v) along the face to its trace side:
        (v, predecessor of u in the rotation at v)."""
        nbrs = self.rotation_map[v]
        i = nbrs.index(u)
        return v, nbrs[(i - 1) % len(nbrs)]

    def trace_face(self, u: int, v: int) -> tuple[int, ...]:
        walk = [u]
        cur = (u, v)
        while True:
            cur = self.next_in_face(*cur)
            if cur == (u, v):
                break
            walk.append(cur[0])
            if len(walk) > 4 * len(self.edges) + 4:
                raise GeometryError("face tracing does not close")
        return tuple(walk)

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All faces as directed boundary walks, each starting at its
        least vertex; the outer face is included."""
        seen: set[tuple[int, int]] = set()
        out = []
        for v, nbrs in self.rotations:
            for w in nbrs:
                if (v, w) in seen:
                    continue
                walk = self.trace_face(v, w)
                for i in range(len(walk)):
                    seen.add((walk[i], walk[(i + 1) % len(walk)]))
                k = walk.index(min(walk))
                out.append(walk[k:] + walk[:k])
        return tuple(sorted(out))

    def outer_face_walk(self) -> tuple[int, ...]:
        a1, _, a3 = self.outer
        walk = self.trace_face(a1, a3)
        k = walk.index(min(walk))
        return walk[k:] + walk[:k]

    def inner_faces(self) -> tuple[tuple[int, ...], ...]:
        outer = self.outer_face_walk()
        return tuple(f for f in self.faces() if f != outer)

    @property
    def is_triangulation(self) -> bool:
        return all(len(f) == 3 for f in self.faces())

    def virtual_rotation(self, v: int) -> tuple[int, ...]:
        """Rotation at v with the half-edge token spliced into the outer
        corner when v is a suspension."""
        nbrs = self.rotation_map[v]
        if v not in self.outer:
            return nbrs
        others = [a for a in self.outer if a != v]
        k = len(nbrs)
        for i in range(k):
            a, b = nbrs[i], nbrs[(i + 1) % k]
            if {a, b} == set(others):
                # the outer corner at v lies between its two outer
                # neighbors; the half-edge points into it
                return nbrs[: i + 1] + (HALF,) + nbrs[i + 1 :]
        raise GeometryError(
            f"suspension {v}: outer neighbors are not rotation-consecutive"
        )


@dataclass(frozen=True)
class SchnyderWood:
    """Colored orientation: arcs (tail, head, color), plus the three
    suspensions (a1, a2, a3) whose half-edges carry their own colors."""

    suspensions: tuple[int, int, int]
    arcs: frozenset[tuple[int, int, int]]

    def out_map(self) -> dict[int, dict[int, int]]:
        """vertex -> color -> head (raises on duplicate out-colors)."""
        out: dict[int, dict[int, int]] = {}
        for tail, head, color in self.arcs:
            slot = out.setdefault(tail, {})
            if color in slot:
                raise GeometryError(
                    f"vertex {tail} has two outgoing arcs of color {color}"
                )
            slot[color] = head
        return out

    def arcs_on(self, u: int, v: int) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            sorted(a for a in self.arcs if {a[0], a[1]} == {u, v})
        )

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((t, h)) for t, h, _ in self.arcs)


@dataclass(frozen=True)
class WoodCheck:
    ok: bool
    violations: tuple[str, ...] = ()


def _cyclic_between(x: int, lo: int, hi: int, n: int) -> bool:
    """x in the closed cyclic interval [lo, hi] of Z_n."""
    if lo <= hi:
        return lo <= x <= hi
    return x >= lo or x <= hi


def check_wood_axioms(graph: PlaneGraph, wood: SchnyderWood) -> WoodCheck:
    """Validate the four wood axioms on a suspended plane graph.

    (1) every edge is oriented one way or two opposite ways, a
    bioriented edge carrying two distinct colors; (2) the half-edge of
    suspension a_i is colored i; (3) every vertex has one outgoing edge
    per color, in cyclic wood order 1, 2, 3, with an incoming edge of
    color i confined to the sector between the outgoing i+1 and i-1;
    (4) no inner face boundary is a monochromatic directed cycle.
    """
    bad: list[str] = []
    edges = graph.edges
    if tuple(wood.suspensions) != tuple(graph.outer):
        bad.append(
            f"suspensions {wood.suspensions} differ from outer {graph.outer}"
        )
    by_edge: dict[frozenset[int], list[tuple[int, int, int]]] = {}
    for arc in wood.arcs:
        t, h, c = arc
        if frozenset((t, h)) not in edges:
            bad.append(f"arc {arc} is not an edge of the graph")
            continue
        if not 1 <= c <= 3:
            bad.append(f"arc {arc} has color outside 1..3")
            continue
        by_edge.setdefault(frozenset((t, h)), []).append(arc)
    for e in sorted(edges, key=sorted):
        arcs = by_edge.get(e, [])
        if not arcs:
            bad.append(f"edge {sorted(e)} carries no arc")
        elif len(arcs) == 2:
            (t1, h1, c1), (t2, h2, c2) = arcs
            if (t1, h1) == (t2, h2):
                bad.append(f"edge {sorted(e)} directed twice the same way")
            elif c1 == c2:
                bad.append(f"bioriented edge {sorted(e)} repeats color {c1}")
        elif len(arcs) > 2:
            bad.append(f"edge {sorted(e)} carries {len(arcs)} arcs")
    if bad:
        return WoodCheck(False, tuple(bad))

    out_arcs: dict[int, dict[int, int]] = {v: {} for v in graph.vertex_ids}
    in_arcs: dict[int, list[tuple[int, int]]] = {v: [] for v in graph.vertex_ids}
    for t, h, c in wood.arcs:
        if c in out_arcs[t]:
            bad.append(f"vertex {t} has two outgoing arcs of color {c}")
        out_arcs[t][c] = h
        in_arcs[h].append((t, c))
    susp_color = {a: i for i, a in enumerate(wood.suspensions, start=1)}

    for v in graph.vertex_ids:
        rot = graph.virtual_rotation(v)
        n = len(rot)
        pos = {w: i for i, w in enumerate(rot)}
        expect = {1, 2, 3}
        have = dict(out_arcs[v])
        if v in susp_color:
            c = susp_color[v]
            if c in have:
                bad.append(
                    f"suspension {v} has a real outgoing arc of its own "
                    f"color {c}"
                )
                continue
            have[c] = HALF
        if set(have) != expect:
            bad.append(
                f"vertex {v} has outgoing colors {sorted(have)}, expected 1,2,3"
            )
            continue
        p = {c: pos[have[c]] for c in (1, 2, 3)}
        if not (p[2] - p[1]) % n < (p[3] - p[1]) % n:
            bad.append(
                f"vertex {v}: outgoing colors not in cyclic order 1,2,3 "
                f"(slots {p})"
            )
        for t, c in in_arcs[v]:
            lo = p[1 if c == 3 else c + 1]
            hi = p[3 if c == 1 else c - 1]
            if not _cyclic_between(pos[t], lo, hi, n):
                bad.append(
                    f"incoming {c}-arc {t}->{v} outside the sector between "
                    f"outgoing {1 if c == 3 else c + 1} and {3 if c == 1 else c - 1}"
                )

    outer = graph.outer_face_walk()
    for face in graph.faces():
        if face == outer:
            continue
        k = len(face)
        for color in (1, 2, 3):
            fwd = all(
                (face[i], face[(i + 1) % k], color) in wood.arcs for i in range(k)
            )
            rev = all(
                (face[(i + 1) % k], face[i], color) in wood.arcs for i in range(k)
            )
            if fwd or rev:
                bad.append(
                    f"inner face {face} is a directed monochromatic cycle "
                    f"in color {color}"
                )
    return WoodCheck(not bad, tuple(bad))


# -- angle labeling ---------------------------------------------------------


@dataclass(frozen=True)
class AngleLabeling:
    """Corner colors of all inner faces: labels[k][j] colors the corner
    of faces[k] at walk position j."""

    faces: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, ...], ...]

    def label_at(self, face: tuple[int, ...], v: int) -> int:
        k = self.faces.index(face)
        return self.labels[k][face.index(v)]


def angle_labeling(graph: PlaneGraph, wood: SchnyderWood) -> AngleLabeling:
    """Color the inner corners by the sector rule: a corner of v lying
    between the outgoing i+1 and i-1 edges gets color i.

    Asserts the classic angle rules: every inner triangle reads 1, 2, 3
    in trace order, and around a vertex the labels form three blocks."""
    check = check_wood_axioms(graph, wood)
    if not check.ok:
        raise GeometryError(
            "angle labeling needs a valid wood: " + "; ".join(check.violations)
        )
    out_arcs: dict[int, dict[int, int]] = {v: {} for v in graph.vertex_ids}
    for t, h, c in wood.arcs:
        out_arcs[t][c] = h
    susp_color = {a: i for i, a in enumerate(wood.suspensions, start=1)}

    def corner_color(v: int, prv: int, nxt: int) -> int:
        # corner between rotation-consecutive neighbors prv -> nxt at v
        rot = graph.virtual_rotation(v)
        n = len(rot)
        pos = {w: i for i, w in enumerate(rot)}
        have = dict(out_arcs[v])
        if v in susp_color:
            have[susp_color[v]] = HALF
        p = {c: 2 * pos[have[c]] for c in (1, 2, 3)}
        gap = (2 * pos[nxt] - 1) % (2 * n)
        if pos[nxt] != (pos[prv] + 1) % n:
            raise InternalError(
                f"corner {prv}->{nxt} at {v} is not rotation-consecutive"
            )
        for i in (1, 2, 3):
            lo = p[1 if i == 3 else i + 1]
            hi = p[3 if i == 1 else i - 1]
            if _cyclic_between(gap, lo, hi, 2 * n):
                return i
        raise InternalError(f"corner {prv}->{nxt} at {v} is in no sector")

    faces = graph.inner_faces()
    labels = []
    for face in faces:
        k = len(face)
        row = []
        for j in range(k):
            v = face[j]
            nxt = face[(j + 1) % k]
            prv = face[(j - 1) % k]
            # faces are traced so that prv follows nxt in the rotation at v
            row.append(corner_color(v, nxt, prv))
        labels.append(tuple(row))
    for face, row in zip(faces, labels):
        if len(face) == 3 and sorted(row) != [1, 2, 3]:
            raise InternalError(f"face {face} has corner colors {row}")
        if len(face) == 3:
            k = row.index(1)
            if (row[k], row[(k + 1) % 3], row[(k + 2) % 3]) != (1, 2, 3):
                raise InternalError(
                    f"face {face} reads {row}, not 1,2,3 in trace order"
                )
    for a, color in susp_color.items():
        for face, row in zip(faces, labels):
            if a in face and row[face.index(a)] != color:
                raise InternalError(
                    f"corner at suspension {a} in {face} is {row[face.index(a)]},"
                    f" not {color}"
                )
    return AngleLabeling(faces=faces, labels=tuple(labels))


# -- extraction from a surface ----------------------------------------------


def _projected_direction(p: Point, q: Point) -> tuple[int, int]:
    """Direction of q - p projected onto the plane x1 + x2 + x3 = const."""
    dx = (q[0] - q[2]) - (p[0] - p[2])
    dy = (q[1] - q[2]) - (p[1] - p[2])
    return dx, dy


def extract_wood(surface: Surface) -> tuple[PlaneGraph, SchnyderWood]:
    """Read the suspended plane graph and its wood off a rigid suspended
    3D surface: edges are the rank-1 characteristic points, an arc runs
    toward the endpoint whose unique tight color it carries, and the
    rotations order neighbors by the exact projected angle of the first
    leg of the edge geodesic, which bends at the characteristic point."""
    if surface.dim != 3:
        raise GeometryError("wood extraction requires dimension 3")
    if not surface.is_suspended:
        raise GeometryError("wood extraction requires a suspended surface")
    rigid = is_rigid(surface)
    if not rigid.holds:
        raise GeometryError(f"surface is not rigid: {rigid.witness}")
    pts = characteristic_points(surface)
    arcs: set[tuple[int, int, int]] = set()
    bends: dict[int, dict[int, Point]] = {
        v: {} for v in range(len(surface.vset))
    }
    for cp in pts:
        if len(cp.downset) != 2:
            if cp.rank == 1:
                raise InternalError(
                    f"rank-1 point {cp.point} dominates {len(cp.downset)} "
                    f"vertices on a rigid surface"
                )
            continue
        u, v = cp.downset
        tu, tv = cp.tights
        uu, uv = tu - tv, tv - tu
        if not uu or not uv:
            raise InternalError(
                f"edge {u}-{v}: tight sets {set(tu)}, {set(tv)} are nested"
            )
        bends[u][v] = cp.point
        bends[v][u] = cp.point
        if len(uu) == 1:
            arcs.add((v, u, next(iter(uu))))
        if len(uv) == 1:
            arcs.add((u, v, next(iter(uv))))
        if len(uu) > 1 and len(uv) > 1:
            raise InternalError(
                f"edge {u}-{v}: no singleton contribution in {set(tu)}, {set(tv)}"
            )
    rotations = {}
    verts = surface.vertices
    for v, nbrs in bends.items():
        if not nbrs:
            raise InternalError(f"vertex {v} has no incident edge")
        dirs = {w: _projected_direction(verts[v], p) for w, p in nbrs.items()}
        rotations[v] = sort_by_angle(dirs)
    outer = tuple(surface.suspension_of_color(i) for i in (1, 2, 3))
    graph = PlaneGraph.from_dict(rotations, outer)
    n_max = sum(1 for cp in pts if is_maximum(surface, cp.point))
    if len(graph.inner_faces()) != n_max:
        raise InternalError(
            f"{len(graph.inner_faces())} inner faces vs {n_max} maxima"
        )
    wood = SchnyderWood(suspensions=outer, arcs=frozenset(arcs))
    check = check_wood_axioms(graph, wood)
    if not check.ok:
        raise InternalError(
            "extracted wood violates the axioms: " + "; ".join(check.violations)
        )
    return graph, wood


# -- computing a wood on a triangulation --------------------------------------


def compute_wood(graph: PlaneGraph) -> SchnyderWood:
    """Build a Schnyder wood of a triangulation by peeling a canonical
    order: the peeled vertex sends color 1 to its left boundary
    neighbor and color 2 to its right one, and receives color 3 from
    the fan in between; outer edges end up bioriented."""
    if not graph.is_triangulation:
        raise GeometryError("wood computation requires a triangulation")
    a1, a2, a3 = graph.outer
    rot = graph.rotation_map
    alive: set[int] = set(graph.vertex_ids)
    boundary: list[int] = [a1, a3, a2]
    arcs: set[tuple[int, int, int]] = set()

    def alive_neighbors(v: int) -> list[int]:
        return [w for w in rot[v] if w in alive]

    while len(boundary) > 2:
        picked = None
        on_boundary = set(boundary)
        for k in range(1, len(boundary) - 1):
            v = boundary[k]
            nbrs_on = {w for w in alive_neighbors(v) if w in on_boundary}
            if nbrs_on == {boundary[k - 1], boundary[k + 1]}:
                if picked is None or v < boundary[picked]:
                    picked = k
        if picked is None:
            raise GeometryError("no removable boundary vertex; bad embedding")
        k = picked
        v = boundary[k]
        left, right = boundary[k - 1], boundary[k + 1]
        nbrs = alive_neighbors(v)
        cyc = rot[v]
        i = cyc.index(left)
        fan: list[int] = []
        j = i
        while True:
            j = (j + 1) % len(cyc)
            w = cyc[j]
            if w not in alive:
                continue
            if w == right:
                break
            fan.append(w)
        arcs.add((v, left, 1))
        arcs.add((v, right, 2))
        for w in fan:
            arcs.add((w, v, 3))
        if set(fan) | {left, right} != set(nbrs):
            raise InternalError(
                f"fan of {v} between {left} and {right} misses neighbors"
            )
        alive.remove(v)
        boundary[k : k + 1] = fan
        for x, y in zip(boundary, boundary[1:]):
            if frozenset((x, y)) not in graph.edges:
                raise InternalError(
                    f"boundary {boundary} has a non-edge {x}-{y}"
                )
    outer_pairs = ((a1, a2), (a2, a3), (a3, a1))
    colors = {a1: 1, a2: 2, a3: 3}
    arcs = {
        arc
        for arc in arcs
        if frozenset((arc[0], arc[1])) not in graph.outer_edges
    }
    for x, y in outer_pairs:
        arcs.add((x, y, colors[y]))
        arcs.add((y, x, colors[x]))
    wood = SchnyderWood(suspensions=graph.outer, arcs=frozenset(arcs))
    check = check_wood_axioms(graph, wood)
    if not check.ok:
        raise InternalError(
            "computed wood violates the axioms: " + "; ".join(check.violations)
        )
    return wood


# -- region vectors -----------------------------------------------------------


@dataclass(frozen=True)
class RegionEmbedding:
    """Surface built from face-counting region vectors, with the
    correspondence between graph vertices and surface vertex ids."""

    surface: Surface
    vertex_to_id: tuple[tuple[int, int], ...]

    @property
    def id_map(self) -> dict[int, int]:
        return dict(self.vertex_to_id)


def _path_edges(
    out_arcs: dict[int, dict[int, int]], v: int, color: int, stop: int
) -> frozenset[frozenset[int]]:
    edges: set[frozenset[int]] = set()
    cur = v
    seen = {v}
    while cur != stop:
        if color not in out_arcs[cur]:
            raise InternalError(f"path of color {color} stuck at {cur}")
        nxt = out_arcs[cur][color]
        edges.add(frozenset((cur, nxt)))
        cur = nxt
        if cur in seen:
            raise InternalError(f"path of color {color} cycles at {cur}")
        seen.add(cur)
    return frozenset(edges)


def region_vectors(graph: PlaneGraph, wood: SchnyderWood) -> RegionEmbedding:
    """Count bounded faces in the three regions of every inner vertex
    and suspend the resulting points.

    The i-region of v is delimited by its outgoing paths of colors i+1
    and i-1 and the outer boundary; its faces are collected by flooding
    across non-boundary edges from the corners labeled i at v."""
    labeling = angle_labeling(graph, wood)
    faces = labeling.faces
    n_faces = len(faces)
    edge_faces: dict[frozenset[int], list[int]] = {}
    for k, face in enumerate(faces):
        for j in range(len(face)):
            e = frozenset((face[j], face[(j + 1) % len(face)]))
            edge_faces.setdefault(e, []).append(k)
    out_arcs: dict[int, dict[int, int]] = {v: {} for v in graph.vertex_ids}
    for t, h, c in wood.arcs:
        out_arcs[t][c] = h
    a = {i: wood.suspensions[i - 1] for i in (1, 2, 3)}
    inner = sorted(v for v in graph.vertex_ids if v not in graph.outer)
    if not inner:
        raise GeometryError("graph has no inner vertex")
    vectors: dict[int, tuple[int, int, int]] = {}
    for v in inner:
        coords = []
        for i in (1, 2, 3):
            up = 1 if i == 3 else i + 1
            dn = 3 if i == 1 else i - 1
            blocked = (
                _path_edges(out_arcs, v, up, a[up])
                | _path_edges(out_arcs, v, dn, a[dn])
                | graph.outer_edges
            )
            seeds = [
                k
                for k, face in enumerate(faces)
                if v in face and labeling.labels[k][face.index(v)] == i
            ]
            if not seeds:
                raise InternalError(f"vertex {v} has no corner of color {i}")
            visited = set(seeds)
            stack = list(seeds)
            while stack:
                k = stack.pop()
                face = faces[k]
                for j in range(len(face)):
                    e = frozenset((face[j], face[(j + 1) % len(face)]))
                    if e in blocked:
                        continue
                    for other in edge_faces[e]:
                        if other not in visited:
                            visited.add(other)
                            stack.append(other)
            coords.append(len(visited))
        if sum(coords) != n_faces:
            raise InternalError(
                f"regions of {v} cover {sum(coords)} of {n_faces} faces"
            )
        vectors[v] = tuple(coords)
    surface = make_suspended([vectors[v] for v in inner])
    pairs = [(v, k) for k, v in enumerate(inner)]
    n = len(inner)
    pairs += [(a[i], n + i - 1) for i in (1, 2, 3)]
    return RegionEmbedding(surface=surface, vertex_to_id=tuple(sorted(pairs)))


def woods_equal(
    wa: SchnyderWood, wb: SchnyderWood, vmap: dict[int, int] | None = None
) -> bool:
    """Compare woods, optionally relabeling the first through vmap."""
    if vmap is None:
        return wa.arcs == wb.arcs and wa.suspensions == wb.suspensions
    mapped = frozenset((vmap[t], vmap[h], c) for t, h, c in wa.arcs)
    susp = tuple(vmap[x] for x in wa.suspensions)
    return mapped == wb.arcs and susp == wb.suspensions


def dual_surface(surface: Surface) -> Surface:
    """Reflect the maxima of a rigid suspended 3D surface and suspend
    the result; the maxima of the dual play the role of the primal's
    vertices."""
    if surface.dim != 3:
        raise GeometryError("duality implemented for dimension 3")
    if not surface.is_suspended:
        raise GeometryError("duality requires a suspended surface")
    rigid = is_rigid(surface)
    if not rigid.holds:
        raise GeometryError(f"surface is not rigid: {rigid.witness}")
    maxima = [
        cp.point
        for cp in characteristic_points(surface)
        if is_maximum(surface, cp.point)
    ]
    if not maxima:
        raise GeometryError("surface has no maxima")
    c = 1 + max(max(p) for p in maxima)
    reflected = [tuple(c - x for x in p) for p in maxima]
    return make_suspended(sorted(reflected))
