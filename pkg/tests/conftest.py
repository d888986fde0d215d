"""Shared fixtures: canonical example surfaces, random generators, and
the acceptance-summary reporting hook."""

from __future__ import annotations

from pathlib import Path

import pytest

from orthosurf import NotAnAntichain, SimplicialBall, is_generic, make_suspended
from orthosurf.documents import load_ball, load_surface, load_triangulation
from orthosurf.schnyder import PlaneGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


@pytest.fixture(scope="session")
def syzygy_counterexample():
    return load_surface(fixture_path("syzygy-counterexample.json"))


@pytest.fixture(scope="session")
def weak_degeneracy():
    return load_surface(fixture_path("weak-degeneracy.json"))


@pytest.fixture(scope="session")
def no_lattice():
    return load_surface(fixture_path("no-lattice.json"))


@pytest.fixture(scope="session")
def no_diamond():
    return load_surface(fixture_path("no-diamond.json"))


@pytest.fixture(scope="session")
def strong_degeneracy_triple():
    return load_surface(fixture_path("strong-degeneracy.json"))


@pytest.fixture(scope="session")
def cyclic_4_7():
    return load_ball(fixture_path("cyclic-4-7.json"))


@pytest.fixture(scope="session")
def k4_triangulation():
    return load_triangulation(fixture_path("triangulation-k4.json"))


def cyclic_ball_with_outer(ball: SimplicialBall, outer) -> SimplicialBall:
    """The same facet family with a different designated outer facet."""
    return SimplicialBall(
        n=ball.n, dim=ball.dim, facets=ball.facets, outer=frozenset(outer)
    )


def random_generic_suspended(rng, d: int, n_inner: int):
    """A generic suspended d-surface with n_inner inner vertices, built
    from per-color samples of distinct values."""
    while True:
        cols = [rng.sample(range(1, 4 * n_inner + 4), n_inner) for _ in range(d)]
        pts = [tuple(col[j] for col in cols) for j in range(n_inner)]
        try:
            surface = make_suspended(pts)
        except NotAnAntichain:
            continue
        if is_generic(surface):
            return surface


def random_triangulation(rng, n: int) -> PlaneGraph:
    """Random plane triangulation on n >= 3 vertices with outer face
    (1, 2, 3): stacked insertion into a random inner face, then random
    edge flips."""
    rot = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    inner = [(1, 2, 3)]
    for v in range(4, n + 1):
        a, b, c = inner.pop(rng.randrange(len(inner)))
        rot[v] = [a, b, c]
        rot[b].insert(rot[b].index(a), v)
        rot[c].insert(rot[c].index(b), v)
        rot[a].insert(rot[a].index(c), v)
        inner += [(v, a, b), (v, b, c), (v, c, a)]
    g = PlaneGraph.from_dict({v: tuple(r) for v, r in rot.items()}, (1, 2, 3))
    for _ in range(8 * n):
        edges = [e for e in g.edges if e not in g.outer_edges]
        u, v = edges[rng.randrange(len(edges))]
        fu = g.trace_face(u, v)
        fv = g.trace_face(v, u)
        if len(fu) != 3 or len(fv) != 3:
            continue
        outer_set = set(g.outer)
        if set(fu) <= outer_set or set(fv) <= outer_set:
            continue
        x = next(w for w in fu if w not in (u, v))
        y = next(w for w in fv if w not in (u, v))
        if x == y or y in g.rotation_map[x]:
            continue
        if len(g.rotation_map[u]) <= 3 or len(g.rotation_map[v]) <= 3:
            continue
        rot = {w: list(r) for w, r in g.rotation_map.items()}
        rot[u].remove(v)
        rot[v].remove(u)
        rot[x].insert(rot[x].index(v), y)
        rot[y].insert(rot[y].index(u), x)
        g2 = PlaneGraph.from_dict({w: tuple(r) for w, r in rot.items()}, g.outer)
        if g2.is_triangulation:
            g = g2
    return g


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_PREFIX = "tests/test_acceptance.py::test_a"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid or "::test_a" not in nodeid:
                continue
            name = nodeid.split("::test_", 1)[1]
            tag = name.split("_", 1)[0].upper()
            desc = name.split("_", 1)[1].replace("_", " ") if "_" in name else ""
            verdict = "PASS" if outcome == "passed" else "FAIL"
            lines.append((tag, f"{tag} {verdict} — {desc}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines, key=lambda t: (len(t[0]), t[0])):
            terminalreporter.write_line(line)
