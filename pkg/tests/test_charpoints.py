"""Characteristic points, degeneracy witnesses, and local complexes."""

import random
from itertools import combinations

import pytest

from orthosurf import (
    GeometryError,
    characteristic_points,
    detect_degeneracy,
    generated_points,
    is_characteristic,
    is_maximum,
    is_syzygy,
    is_witness,
    minimal_generating_sets,
    on_surface,
    reduced_betti_numbers,
    scarf_complex,
    surface_from_points,
    syzygy_complex,
    tight_set,
)
from orthosurf.constructions import simplex_surface

from conftest import random_generic_suspended


def test_generated_points_are_joins_of_vertex_subsets():
    s = surface_from_points([(2, 1), (1, 2)])
    assert set(generated_points(s)) == {(2, 1), (1, 2), (2, 2)}


def test_simplex_characteristic_points_form_punctured_tetrahedron():
    cps = characteristic_points(simplex_surface(3))
    assert len(cps) == 13
    downsets = {c.downset for c in cps}
    # every subset of the four vertices except the empty set, the set of
    # the three corner vertices, and the full set
    expected = {
        tuple(sorted(sub))
        for k in (1, 2, 3, 4)
        for sub in combinations(range(4), k)
    } - {(1, 2, 3), (0, 1, 2, 3)}
    assert downsets == expected
    assert sorted(c.point for c in cps if is_maximum(simplex_surface(3), c.point)) == [
        (1, 2, 2),
        (2, 1, 2),
        (2, 2, 1),
    ]


def test_simplex_ranks_follow_downset_structure():
    cps = characteristic_points(simplex_surface(3))
    by_point = {c.point: c for c in cps}
    assert by_point[(1, 1, 1)].rank == 0
    assert by_point[(1, 2, 2)].rank == 2
    assert not any(c.rank_ambiguous for c in cps)


def test_tight_sets_and_maps():
    s = surface_from_points([(2, 2, 1, 1), (1, 1, 2, 2), (2, 1, 2, 1), (1, 2, 1, 2)])
    assert tight_set(s, (2, 2, 2, 2), 0) == frozenset({1, 2})
    cp = next(c for c in characteristic_points(s) if c.point == (2, 2, 2, 2))
    assert cp.tight_of(0) == frozenset({1, 2})
    assert cp.tight_map[1] == frozenset({3, 4})


def test_on_surface_tight_join_need_not_be_characteristic():
    # the join of the two outer vertices lies in the interior of the
    # bottom wall: every coordinate is attained, yet color 1 and 2
    # witnesses are blocked by the middle vertex
    s = surface_from_points([(5, 1, 1), (1, 5, 1), (3, 3, 1)])
    p = (5, 5, 1)
    assert p in generated_points(s)
    assert on_surface(s, p)
    assert not is_witness(s, p, 0, 1)
    assert not is_characteristic(s, p)
    assert sorted(c.point for c in characteristic_points(s)) == [
        (1, 5, 1),
        (3, 3, 1),
        (3, 5, 1),
        (5, 1, 1),
        (5, 3, 1),
    ]


def test_points_that_are_no_downset_join_are_not_characteristic():
    # (2, 1, 0) is on the surface but its second coordinate is attained
    # by no vertex below it
    assert not is_characteristic(simplex_surface(3), (2, 1, 0))


def test_minimal_generating_sets_of_ambiguous_point(no_lattice):
    got = [sorted(g) for g in minimal_generating_sets(no_lattice, (4, 5, 4, 3))]
    assert got == [[0, 2, 3, 5], [1, 2, 3, 5]]


def test_detect_degeneracy_finds_interleaving_witness(weak_degeneracy, no_lattice):
    w = detect_degeneracy(weak_degeneracy)
    assert w is not None
    assert w.point == (2, 2, 2, 2)
    assert (w.x, w.u, w.v) == (0, 3, 2)
    assert (w.i, w.j) == (1, 2)
    assert detect_degeneracy(no_lattice) is None


def test_scarf_complex_is_downset_family_of_characteristic_points():
    s3 = simplex_surface(3)
    assert scarf_complex(s3) == frozenset(
        c.downset_key for c in characteristic_points(s3)
    )
    rng = random.Random(5)
    s = random_generic_suspended(rng, 3, 4)
    assert scarf_complex(s) == frozenset(
        c.downset_key for c in characteristic_points(s)
    )


def test_scarf_complex_requires_generic_surface(weak_degeneracy):
    with pytest.raises(GeometryError, match="generic"):
        scarf_complex(weak_degeneracy)


def test_reduced_betti_numbers_of_hand_built_complexes():
    f = frozenset
    assert reduced_betti_numbers(f({f()})) == {-1: 1}
    assert reduced_betti_numbers(f({f(), f({1}), f({2})})) == {-1: 0, 0: 1}
    path = f({f(), f({1}), f({2}), f({3}), f({1, 2}), f({2, 3})})
    assert reduced_betti_numbers(path) == {-1: 0, 0: 0, 1: 0}
    hollow = f({f(), f({1}), f({2}), f({3}), f({1, 2}), f({1, 3}), f({2, 3})})
    assert reduced_betti_numbers(hollow) == {-1: 0, 0: 0, 1: 1}
    full = f(
        f(c) for k in range(4) for c in combinations((1, 2, 3), k)
    )
    assert reduced_betti_numbers(full) == {-1: 0, 0: 0, 1: 0, 2: 0}


def test_characteristic_point_that_is_no_syzygy(syzygy_counterexample):
    p = (2, 2, 2, 2)
    assert is_characteristic(syzygy_counterexample, p)
    assert not is_syzygy(syzygy_counterexample, p)
    comp = syzygy_complex(syzygy_counterexample, p)
    edges = sorted(sorted(face) for face in comp.faces if len(face) == 2)
    assert edges == [[1, 4], [2, 3], [3, 4]]
    betti = reduced_betti_numbers(comp.faces)
    assert all(b == 0 for b in betti.values())


def test_other_characteristic_points_of_counterexample_are_syzygies(
    syzygy_counterexample,
):
    for cp in characteristic_points(syzygy_counterexample):
        if cp.point == (2, 2, 2, 2):
            continue
        assert is_syzygy(syzygy_counterexample, cp.point)


def test_syzygy_points_are_characteristic_on_random_surfaces():
    rng = random.Random(17)
    for _ in range(3):
        s = random_generic_suspended(rng, 3, rng.randint(2, 5))
        for p in generated_points(s):
            if on_surface(s, p) and is_syzygy(s, p):
                assert is_characteristic(s, p)
