"""Dominance order on characteristic points and ball matching."""

import pytest

from orthosurf import (
    GeometryError,
    SimplicialBall,
    build_cporder,
    diamond_check,
    face_lattice_of_ball,
    is_graded,
    is_lattice,
    is_rigid,
    matches_ball,
    maximal_lower_bounds,
    minimal_upper_bounds,
)
from orthosurf.constructions import simplex_surface
from orthosurf.surface import make_suspended


def _ball(n, facets, outer):
    return SimplicialBall(
        n=n,
        dim=len(next(iter(facets))),
        facets=frozenset(frozenset(f) for f in facets),
        outer=frozenset(outer),
    )


def test_simplex_order_is_a_graded_diamond_lattice():
    order = build_cporder(simplex_surface(3))
    assert order.size == 15  # 13 points plus artificial bounds
    assert is_lattice(order).holds
    assert is_graded(order).holds
    assert diamond_check(order).holds
    assert order.label_of(0) == "bottom"
    assert order.label_of(order.top) == "top"


def test_minimal_upper_and_maximal_lower_bounds():
    order = build_cporder(simplex_surface(3))
    a = order.index_of((1, 1, 1))
    b = order.index_of((2, 0, 0))
    (mub,) = minimal_upper_bounds(order, a, b)
    assert order.label_of(mub) == "{0,1}@(2, 1, 1)"
    (mlb,) = maximal_lower_bounds(order, a, b)
    assert mlb == 0  # only the artificial bottom lies below both


def test_order_with_a_join_violation(no_lattice):
    order = build_cporder(no_lattice)
    assert is_graded(order).holds
    res = is_lattice(order)
    assert not res.holds
    assert res.kind == "join"
    assert order.label_of(res.pair[0]) == "{0,1}@(3, 3, 2, 3)"
    assert order.label_of(res.pair[1]) == "{0,2}@(4, 2, 3, 3)"
    assert [order.label_of(m) for m in res.candidates] == [
        "{0,1,2,3}@(4, 4, 4, 3)",
        "{0,1,2,5}@(4, 5, 3, 3)",
    ]


def test_lattice_order_with_a_diamond_violation(no_diamond):
    order = build_cporder(no_diamond)
    assert is_lattice(order).holds
    res = diamond_check(order)
    assert not res.holds
    assert order.label_of(res.interval[0]) == "{0}@(3, 3, 3, 3)"
    assert order.label_of(res.interval[1]) == "{0,1,2,3,4,5}@(5, 5, 5, 3)"
    assert [order.label_of(m) for m in res.middles] == [
        "{0,1}@(3, 4, 4, 3)",
        "{0,2}@(4, 3, 4, 3)",
        "{0,3}@(4, 4, 3, 3)",
    ]


def test_rigidity_verdicts(no_lattice, no_diamond):
    for surface in (no_lattice, no_diamond):
        res = is_rigid(surface)
        assert (res.holds, res.mode, res.witness) == (True, "rank-antichain", None)
    res = is_rigid(make_suspended([(3, 1, 2), (1, 3, 2), (3, 3, 1)]))
    assert not res.holds
    assert res.mode == "pair-degree"
    assert res.witness == (0, 1, (0, 1, 2))


TET = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
BIPYRAMID = [(1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5)]
OCTAHEDRON = [
    (1, 2, 3),
    (1, 3, 5),
    (1, 5, 6),
    (1, 6, 2),
    (4, 2, 3),
    (4, 3, 5),
    (4, 5, 6),
    (4, 6, 2),
]


def test_face_lattice_of_ball_drops_only_the_outer_facet():
    ball = _ball(4, TET, (2, 3, 4))
    faces = face_lattice_of_ball(ball)
    # 14 faces of the tetrahedron boundary minus the outer facet
    assert len(faces) == 13
    assert frozenset({2, 3, 4}) not in faces
    assert frozenset({1, 2, 3, 4}) not in faces
    assert frozenset({1, 2, 3}) in faces
    assert ball.inner_labels == frozenset({1})
    assert frozenset({2, 3}) in ball.edges


def test_surfaces_match_their_balls():
    res = matches_ball(simplex_surface(3), _ball(4, TET, (2, 3, 4)))
    assert res.holds
    assert res.mapping == ((0, 1), (1, 2), (2, 3), (3, 4))
    two_inner = make_suspended([(1, 1, 2), (2, 2, 1)])
    assert matches_ball(two_inner, _ball(5, BIPYRAMID, (1, 2, 4))).holds


def test_ball_match_fails_across_combinatorial_types():
    stacked = make_suspended([(1, 1, 3), (2, 2, 2), (3, 3, 1)])
    res = matches_ball(stacked, _ball(6, OCTAHEDRON, (1, 2, 3)))
    assert not res.holds
    assert "no relabeling matches" in res.reason


def test_ball_match_reports_shape_mismatches(syzygy_counterexample, no_lattice):
    tet = _ball(4, TET, (2, 3, 4))
    res = matches_ball(syzygy_counterexample, tet)
    assert not res.holds and res.reason == "surface is not suspended"
    res = matches_ball(no_lattice, tet)
    assert not res.holds and "dimension mismatch" in res.reason
    five = _ball(5, BIPYRAMID, (1, 2, 4))
    res = matches_ball(simplex_surface(3), five)
    assert not res.holds and "vertex count mismatch" in res.reason


def test_ball_validation_rejects_malformed_complexes():
    with pytest.raises(GeometryError, match="pure"):
        _ball(4, [(1, 2, 3), (1, 2)], (1, 2, 3))
    with pytest.raises(GeometryError, match="outside"):
        _ball(4, [(1, 2, 3), (2, 3, 5)], (1, 2, 3))
    with pytest.raises(GeometryError, match="every label"):
        _ball(5, TET, (1, 2, 3))
    with pytest.raises(GeometryError, match="outer facet"):
        _ball(4, TET, (1, 2, 5))
    with pytest.raises(GeometryError, match="ridge"):
        _ball(5, TET + [(1, 2, 5)], (1, 3, 4))


def test_cyclic_polytope_ball_fixture_loads(cyclic_4_7):
    assert (cyclic_4_7.n, cyclic_4_7.dim) == (7, 4)
    assert len(cyclic_4_7.facets) == 14
    assert cyclic_4_7.outer == frozenset({1, 2, 3, 4})
