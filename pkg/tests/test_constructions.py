"""Verified surface constructions and their failure diagnoses."""

import pytest

from orthosurf import (
    ConstructionVerificationError,
    GeometryError,
    SimplicialBall,
    ball_from_family,
    cp_family,
    matches_ball,
    maxima_of,
    path_product,
    prism,
    pyramid,
    simplex_surface,
    stack,
    verify_against_ball,
)
from orthosurf.surface import is_generic, make_suspended, surface_from_points


def _sets(faces):
    return sorted(sorted(f) for f in faces)


def test_simplex_surface_family_sizes():
    assert len(cp_family(simplex_surface(2))) == 5
    assert len(cp_family(simplex_surface(3))) == 13
    assert len(cp_family(simplex_surface(4))) == 29
    with pytest.raises(GeometryError, match="at least 2"):
        simplex_surface(1)


def test_simplex_maxima_are_the_inner_facets():
    assert maxima_of(simplex_surface(3)) == ((1, 2, 2), (2, 1, 2), (2, 2, 1))


def test_stack_replaces_one_facet_by_a_cone():
    s3 = simplex_surface(3)
    stacked = stack(s3, maxima_of(s3)[0])
    assert len(stacked.vertices) == 5
    assert stacked.names == ("v0", "s1", "s2", "s3", "v4")
    assert is_generic(stacked)
    assert len(cp_family(stacked)) == 19
    # oracle: the tetrahedron ball with facet {1,3,4} replaced by the
    # cone of the new label 5 over its boundary
    oracle = SimplicialBall(
        n=5,
        dim=3,
        facets=frozenset(
            frozenset(f)
            for f in [(1, 2, 3), (1, 2, 4), (2, 3, 4), (1, 3, 5), (1, 4, 5), (3, 4, 5)]
        ),
        outer=frozenset({2, 3, 4}),
    )
    assert matches_ball(stacked, oracle).holds


def test_stack_rejects_bad_input(weak_degeneracy):
    with pytest.raises(GeometryError, match="generic"):
        stack(weak_degeneracy, (2, 2, 2, 2))
    with pytest.raises(GeometryError, match="not a maximum"):
        stack(simplex_surface(3), (1, 1, 1))


def test_pyramid_over_the_square():
    square = make_suspended([(1, 2), (2, 1)])
    assert len(cp_family(square)) == 7
    py = pyramid(square)
    assert py.vertices == ((1, 2, 1), (2, 1, 1), (3, 0, 0), (0, 3, 0), (0, 0, 2))
    assert py.names == ("v0", "v1", "s1", "s2", "s3")
    assert sorted(py.suspension_ids) == [2, 3, 4]
    assert len(cp_family(py)) == 17
    assert maxima_of(py) == ((1, 3, 2), (2, 2, 2), (3, 1, 2), (3, 3, 1))


def test_pyramid_needs_a_suspended_base(syzygy_counterexample):
    with pytest.raises(GeometryError, match="suspended"):
        pyramid(syzygy_counterexample)


def test_prism_verification_fails_with_exact_face_difference():
    s3 = simplex_surface(3)
    with pytest.raises(ConstructionVerificationError) as exc:
        prism(s3, maxima_of(s3)[0])
    # the base restriction verified fine; the doubled stage lacks the
    # side quads and grew triangles instead
    assert str(exc.value).startswith("prism: ")
    assert _sets(exc.value.missing) == [[0, 1, 3, 4], [0, 2, 3, 5], [3, 4], [3, 5]]
    assert _sets(exc.value.extra) == [[0, 1, 3], [0, 2, 3], [1, 3], [2, 3]]


def test_prism_over_pyramid_facet_fails_the_same_way():
    py = pyramid(make_suspended([(1, 2), (2, 1)]))
    with pytest.raises(ConstructionVerificationError) as exc:
        prism(py, (3, 3, 1))
    assert _sets(exc.value.missing) == [[0, 3, 4, 7], [1, 2, 5, 6], [4, 7], [5, 6]]
    assert _sets(exc.value.extra) == [[0, 3, 4], [1, 2, 5], [2, 5], [3, 4]]


def test_prism_rejects_bad_input():
    with pytest.raises(GeometryError, match="not a maximum"):
        prism(simplex_surface(3), (1, 1, 1))
    # a maximum may sit above a vertex that is tight in two coordinates
    s = surface_from_points([(3, 1, 2), (1, 3, 2), (1, 1, 3), (3, 3, 1)])
    with pytest.raises(GeometryError, match="contributes 2 coordinates"):
        prism(s, (3, 3, 3))


def test_path_product_verification_reports_missing_facets():
    with pytest.raises(ConstructionVerificationError) as exc:
        path_product(simplex_surface(2), 3)
    assert str(exc.value).startswith(
        "product: the characteristic-point family must miss exactly one facet"
    )
    assert not exc.value.extra
    assert _sets(exc.value.missing) == [
        [0, 1, 2],
        [1, 2],
        [1, 2, 4, 5],
        [4, 5],
        [4, 5, 7, 8],
        [6, 7, 8],
        [7, 8],
    ]


def test_path_product_rejects_bad_input(syzygy_counterexample):
    with pytest.raises(GeometryError, match="at least 2"):
        path_product(simplex_surface(2), 1)
    with pytest.raises(GeometryError, match="suspended"):
        path_product(syzygy_counterexample, 2)


def test_ball_from_family_and_verification():
    s3 = simplex_surface(3)
    ball = ball_from_family(cp_family(s3), frozenset(s3.suspension_ids), 3)
    assert (ball.n, ball.dim) == (4, 3)
    assert ball.outer == frozenset({2, 3, 4})
    assert _sets(ball.facets) == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    verify_against_ball(s3, ball)
    stacked = stack(s3, maxima_of(s3)[0])
    with pytest.raises(ConstructionVerificationError, match="does not match"):
        verify_against_ball(stacked, ball)
