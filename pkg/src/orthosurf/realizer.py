"""Realizability analysis for simplicial balls.

Edge classification on 4D surfaces, the maximum-walk realization
criterion, the suspension/counting refutation criteria with the clique
dimension screen, and exhaustive search for realizing surfaces over
coordinate-order tuples.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .charpoints import characteristic_points, is_characteristic, is_maximum
from .cporder import SimplicialBall, matches_ball
from .points import GeometryError, InternalError, NotAnAntichain, Point
from .surface import Surface, is_generic, make_suspended

# Order dimension of complete-graph face complexes: a skeleton that
# contains K_13 cannot belong to a 4-polytope realized on a surface.
CLIQUE_DIMENSION = {12: 4, 13: 5}
CLIQUE_SCREEN_SIZE = 13


@dataclass(frozen=True)
class EdgeClass:
    """A rank-1 characteristic point classified by coordinate split."""

    edge: tuple[int, int]
    kind: str  # "orthogonal" | "symmetric"
    split: tuple[frozenset[int], frozenset[int]]


def classify_edges(surface: Surface) -> tuple[EdgeClass, ...]:
    """Classify every two-vertex characteristic point of a generic
    suspended 4D surface: a 3/1 coordinate split (equivalently any
    suspension-incident edge) is orthogonal, a 2/2 split symmetric."""
    if surface.dim != 4:
        raise GeometryError("edge classification is defined in dimension 4")
    if not surface.is_suspended or not is_generic(surface):
        raise GeometryError("edge classification needs a generic suspended surface")
    susp = surface.suspension_ids or frozenset()
    out = []
    for cp in characteristic_points(surface):
        if len(cp.downset) != 2:
            continue
        u, v = cp.downset
        tu, tv = cp.tights
        uu, uv = tu - tv, tv - tu
        if u in susp or v in susp:
            kind = "orthogonal"
        elif {len(uu), len(uv)} == {3, 1}:
            kind = "orthogonal"
        elif len(uu) == len(uv) == 2:
            kind = "symmetric"
        else:
            raise InternalError(
                f"edge {u}-{v} has unexpected split {set(uu)}/{set(uv)}"
            )
        out.append(EdgeClass(edge=(u, v), kind=kind, split=(uu, uv)))
    return tuple(sorted(out, key=lambda e: e.edge))


def outgoing_orthogonal_counts(surface: Surface) -> dict[int, int]:
    """Per inner vertex: the number of its outgoing orthogonal arcs.
    The arc of v in coordinate direction i stops at an obstructing
    vertex that is tight in exactly {i}, so an edge is outgoing from
    the endpoint opposite the singleton-tight one."""
    counts = {v: 0 for v in surface.inner_ids}
    for cp in characteristic_points(surface):
        if len(cp.downset) != 2:
            continue
        (u, tu), (v, tv) = zip(cp.downset, cp.tights)
        if len(tv) == 1 and u in counts:
            counts[u] += 1
        if len(tu) == 1 and v in counts:
            counts[v] += 1
    return counts


def realization_criterion_check(surface: Surface, p: Point) -> bool:
    """Verify the maximum-walk criterion at a characteristic point p:
    for every choice of one tight coordinate i_j per generator (with
    p_{i_j} > 0), augmenting each remaining coordinate once reaches a
    maximum M with M_{i_j} = p_{i_j}.

    Returns True; any failure raises InternalError since the property
    is a theorem on generic suspended surfaces."""
    if not surface.is_suspended or not is_generic(surface):
        raise GeometryError("the criterion needs a generic suspended surface")
    if not is_characteristic(surface, p):
        raise GeometryError(f"{p} is not characteristic")
    d = surface.dim
    verts = surface.vertices
    down = surface.downset(p)
    tight_sets = [
        [i for i in range(1, d + 1) if verts[vid][i - 1] == p[i - 1] and p[i - 1] > 0]
        for vid in down
    ]
    if any(not t for t in tight_sets):
        raise InternalError(f"a generator of {p} is tight only where p vanishes")
    maxima: set[Point] = set()
    supports: set[frozenset[int]] = set()
    for choice in product(*tight_sets):
        fixed = set(choice)
        supports.add(frozenset(choice))
        q = p
        dq = set(down)
        for c in range(1, d + 1):
            if c in fixed:
                continue
            cands = [
                w
                for wid, w in enumerate(verts)
                if wid not in dq
                and w[c - 1] > q[c - 1]
                and all(w[j] <= q[j] for j in range(d) if j != c - 1)
            ]
            if not cands:
                raise InternalError(
                    f"no vertex bounds coordinate {c} above {q} (from {p})"
                )
            w = min(cands, key=lambda x: x[c - 1])
            q = tuple(max(a, b) for a, b in zip(q, w))
            new_dq = set(surface.downset(q))
            if len(new_dq) != len(dq) + 1:
                raise InternalError(
                    f"augmenting {c} above {p} absorbed "
                    f"{len(new_dq) - len(dq)} vertices at once"
                )
            dq = new_dq
        if not is_maximum(surface, q):
            raise InternalError(
                f"walk from {p} with choice {choice} ended at non-maximum {q}"
            )
        for i in fixed:
            if q[i - 1] != p[i - 1]:
                raise InternalError(f"walk from {p} moved fixed coordinate {i}: {q}")
        maxima.add(q)
    if len(maxima) < len(supports):
        raise InternalError(
            f"only {len(maxima)} maxima above {p}, "
            f"expected at least {len(supports)}"
        )
    return True


# -- ball criteria ------------------------------------------------------------


def suspension_criterion(ball: SimplicialBall) -> tuple[frozenset[int], ...]:
    """Inner edges whose endpoints are both adjacent to all outer
    vertices; such edges must be symmetric in any realization."""
    if ball.dim != 4:
        raise GeometryError("the suspension criterion is stated for dimension 4")
    adj: dict[int, set[int]] = {x: set() for x in range(1, ball.n + 1)}
    for e in ball.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    inner = ball.inner_labels
    forced = [
        e
        for e in ball.edges
        if e <= inner and all(ball.outer <= adj[x] for x in e)
    ]
    return tuple(sorted(forced, key=sorted))


def counting_criterion(ball: SimplicialBall) -> int:
    """Lower bound on the number of symmetric inner edges:
    max(0, |E| - (4n - 10))."""
    if ball.dim != 4:
        raise GeometryError("the counting criterion is stated for dimension 4")
    return max(0, len(ball.edges) - (4 * ball.n - 10))


def _has_clique(edges: frozenset[frozenset[int]], labels: set[int], k: int) -> tuple[int, ...] | None:
    """Exact search for a k-clique (small n; degree pruning first)."""
    adj: dict[int, set[int]] = {x: set() for x in labels}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    cand = sorted(x for x in labels if len(adj[x]) >= k - 1)

    def extend(clique: list[int], pool: list[int]) -> tuple[int, ...] | None:
        if len(clique) == k:
            return tuple(clique)
        if len(clique) + len(pool) < k:
            return None
        for i, x in enumerate(pool):
            nxt = [y for y in pool[i + 1 :] if y in adj[x]]
            hit = extend(clique + [x], nxt)
            if hit is not None:
                return hit
        return None

    return extend([], cand)


@dataclass(frozen=True)
class Refutation:
    status: str  # "refuted" | "open"
    criterion: str | None = None
    witness: tuple | None = None


def nonrealizability_check(ball: SimplicialBall) -> Refutation:
    """Try to refute realizability of the ball: a forced-symmetric edge
    in at most 3 facets, too few inner edges in at least 4 facets, or a
    K_13 in the skeleton (whose complex needs order dimension 5)."""
    if ball.dim != 4:
        raise GeometryError("the refutation criteria are stated for dimension 4")
    for e in suspension_criterion(ball):
        n_facets = len(ball.facets_of(e))
        if n_facets <= 3:
            return Refutation("refuted", "suspension", (tuple(sorted(e)), n_facets))
    need = counting_criterion(ball)
    inner_deep = [
        e
        for e in ball.edges
        if e <= ball.inner_labels and len(ball.facets_of(e)) >= 4
    ]
    if len(inner_deep) < need:
        return Refutation("refuted", "counting", (len(inner_deep), need))
    labels = set(range(1, ball.n + 1))
    if ball.n >= CLIQUE_SCREEN_SIZE:
        clique = _has_clique(ball.edges, labels, CLIQUE_SCREEN_SIZE)
        if clique is not None:
            return Refutation("refuted", "clique", clique)
    return Refutation("open")


# -- exhaustive search --------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "exhausted" | "budget"
    surface: Surface | None
    tried: int


def _nth_permutation(items: tuple[int, ...], idx: int) -> tuple[int, ...]:
    pool = list(items)
    out = []
    for k in range(len(items), 0, -1):
        f = math.factorial(k - 1)
        out.append(pool.pop(idx // f))
        idx %= f
    return tuple(out)


def surface_from_orders(
    ball: SimplicialBall, orders: tuple[tuple[int, ...], ...]
) -> Surface:
    """Instantiate a generic suspended surface from one linear order of
    the inner vertices per coordinate: position in the order becomes the
    coordinate value."""
    inner = sorted(ball.inner_labels)
    coords = {v: [0] * ball.dim for v in inner}
    for c, order in enumerate(orders):
        for pos, v in enumerate(order, start=1):
            coords[v][c] = pos
    return make_suspended([tuple(coords[v]) for v in inner])


def _orders_of_index(inner: tuple[int, ...], dim: int, idx: int) -> tuple[tuple[int, ...], ...]:
    m = len(inner)
    f = math.factorial(m)
    rest = []
    for _ in range(dim - 1):
        rest.append(idx % f)
        idx //= f
    orders = [inner]  # first coordinate order fixed to the identity
    for r in reversed(rest):
        orders.append(_nth_permutation(inner, r))
    return tuple(orders)


def _try_index(args) -> int | None:
    ball, start, stop = args
    inner = tuple(sorted(ball.inner_labels))
    for idx in range(start, stop):
        orders = _orders_of_index(inner, ball.dim, idx)
        try:
            surface = surface_from_orders(ball, orders)
        except NotAnAntichain:
            continue
        if matches_ball(surface, ball).holds:
            return idx
    return None


def search_realization(
    ball: SimplicialBall, budget: int = 10**6, jobs: int = 1
) -> SearchResult:
    """Enumerate coordinate-order tuples for the inner vertices (first
    order fixed to the identity) and return the first surface whose
    cp-order matches the ball.

    The outcome distinguishes a full exhaustion (a proof that no
    generic realization exists) from an exhausted budget."""
    inner = tuple(sorted(ball.inner_labels))
    m = len(inner)
    space = math.factorial(m) ** (ball.dim - 1)
    limit = min(space, budget)
    hit: int | None = None
    if jobs <= 1 or limit < 64:
        hit = _try_index((ball, 0, limit))
    else:
        chunk = (limit + 4 * jobs - 1) // (4 * jobs)
        spans = [
            (ball, lo, min(lo + chunk, limit)) for lo in range(0, limit, chunk)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for r in pool.map(_try_index, spans) if r is not None]
        hit = min(results) if results else None
    if hit is not None:
        orders = _orders_of_index(inner, ball.dim, hit)
        return SearchResult("found", surface_from_orders(ball, orders), hit + 1)
    if limit == space:
        return SearchResult("exhausted", None, space)
    return SearchResult("budget", None, limit)
