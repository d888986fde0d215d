"""End-to-end command-line interface tests."""

import json
import xml.etree.ElementTree as ET

import pytest

from orthosurf import cli
from orthosurf.constructions import simplex_surface
from orthosurf.cporder import SimplicialBall
from orthosurf.documents import emit_ball, emit_surface, parse_surface
from orthosurf.surface import make_suspended

from conftest import fixture_path


@pytest.fixture
def simplex_file(tmp_path):
    path = tmp_path / "simplex.json"
    path.write_text(emit_surface(simplex_surface(3)), encoding="utf-8")
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(emit_surface(make_suspended([(1, 2), (2, 1)])), encoding="utf-8")
    return str(path)


def _open_ball_file(tmp_path):
    facets = [
        (1, 2, 3, 4), (1, 2, 3, 7), (1, 2, 4, 5), (1, 2, 5, 6), (1, 2, 6, 7),
        (1, 3, 4, 7), (1, 4, 5, 7), (1, 5, 6, 7), (2, 3, 4, 5), (2, 3, 5, 6),
        (2, 3, 6, 7), (3, 4, 5, 6), (3, 4, 6, 7), (4, 5, 6, 7),
    ]
    ball = SimplicialBall(
        n=7,
        dim=4,
        facets=frozenset(frozenset(f) for f in facets),
        outer=frozenset({1, 2, 4, 5}),
    )
    path = tmp_path / "open-ball.json"
    path.write_text(emit_ball(ball), encoding="utf-8")
    return str(path)


def test_check_summary_line(capsys, simplex_file):
    assert cli.main(["check", simplex_file]) == 0
    out = capsys.readouterr().out
    assert "dim 3, 4 vertices, suspended, generic" in out


def test_check_property_verdicts(capsys):
    nl = fixture_path("no-lattice.json")
    assert cli.main(["check", nl, "--generic"]) == 1
    assert "generic: no" in capsys.readouterr().out
    assert cli.main(["check", nl, "--suspended"]) == 0
    assert "suspended: yes" in capsys.readouterr().out
    assert cli.main(["check", nl, "--rigid"]) == 0
    assert "rigid: yes (mode rank-antichain)" in capsys.readouterr().out
    assert cli.main(["check", nl, "--degenerate"]) == 1
    assert "degenerate: no" in capsys.readouterr().out


def test_check_degeneracy_witnesses(capsys):
    wd = fixture_path("weak-degeneracy.json")
    assert cli.main(["check", wd, "--degenerate"]) == 0
    out = capsys.readouterr().out
    assert "degenerate: yes (at (2,2,2,2) via vertices 0,3,2 colors 1,2)" in out
    sd = fixture_path("strong-degeneracy.json")
    assert cli.main(["check", sd, "--strong-degeneracy"]) == 0
    out = capsys.readouterr().out
    assert "strong degeneracy: yes (color 1 value 3 at (3,3,3))" in out
    assert cli.main(["check", wd, "--strong-degeneracy"]) == 1


def test_check_antichain(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {"format": "surface/1", "dim": 2, "vertices": [[1, 1], [2, 2]]}
        ),
        encoding="utf-8",
    )
    assert cli.main(["check", str(bad), "--antichain"]) == 1
    assert "antichain: no" in capsys.readouterr().out
    assert cli.main(["check", fixture_path("no-lattice.json"), "--antichain"]) == 0
    # without --antichain a dominated pair is an input error
    assert cli.main(["check", str(bad)]) == 2


def test_cpoints_listing_and_json(capsys, simplex_file, tmp_path):
    out_json = tmp_path / "points.json"
    assert cli.main(["cpoints", simplex_file, "--json", str(out_json)]) == 0
    out = capsys.readouterr().out
    assert "total: 13 characteristic points" in out
    data = json.loads(out_json.read_text(encoding="utf-8"))
    assert len(data["points"]) == 13
    assert {"point", "rank", "rank_ambiguous", "downset"} <= set(data["points"][0])


def test_cpoints_syzygy_column(capsys):
    path = fixture_path("syzygy-counterexample.json")
    assert cli.main(["cpoints", path, "--syzygies"]) == 0
    out = capsys.readouterr().out
    assert "(2,2,2,2) rank 1? D={0,1,2} syzygy=no complex-faces=8" in out
    assert out.count("syzygy=yes") == 5


def test_cporder_lattice_and_diamond_failures(capsys, tmp_path, simplex_file):
    assert cli.main(["cporder", fixture_path("no-lattice.json"), "--lattice"]) == 1
    out = capsys.readouterr().out
    assert (
        "lattice: no (join fails for {0,1}@(3, 3, 2, 3) and {0,2}@(4, 2, 3, 3): "
        "bounds {0,1,2,3}@(4, 4, 4, 3), {0,1,2,5}@(4, 5, 3, 3))" in out
    )
    assert cli.main(["cporder", fixture_path("no-diamond.json"), "--diamond"]) == 1
    out = capsys.readouterr().out
    assert (
        "diamond property: no (interval {0}@(3, 3, 3, 3) .. "
        "{0,1,2,3,4,5}@(5, 5, 5, 3) has 3 middle elements)" in out
    )
    dot = tmp_path / "order.dot"
    assert cli.main(["cporder", simplex_file, "--lattice", "--diamond", "--dot", str(dot)]) == 0
    out = capsys.readouterr().out
    assert "cp-order: 15 elements (with bounds)" in out
    assert "lattice: yes" in out and "diamond property: yes" in out
    assert dot.read_text(encoding="utf-8").startswith("digraph cporder {")


def test_schnyder_extract_arcs(capsys, simplex_file):
    assert cli.main(["schnyder", "extract", simplex_file]) == 0
    out = capsys.readouterr().out
    assert "suspensions: (1, 2, 3)" in out
    assert "arc 0 -(1)-> 1" in out
    assert out.count("arc ") == 9


def test_schnyder_embed_produces_the_simplex(capsys):
    path = fixture_path("triangulation-k4.json")
    assert cli.main(["schnyder", "embed", path]) == 0
    surface = parse_surface(capsys.readouterr().out)
    assert surface.vertices == ((1, 1, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2))


def test_schnyder_dual(capsys, simplex_file):
    assert cli.main(["schnyder", "dual", simplex_file]) == 0
    surface = parse_surface(capsys.readouterr().out)
    assert surface.vertices == (
        (1, 1, 2),
        (1, 2, 1),
        (2, 1, 1),
        (3, 0, 0),
        (0, 3, 0),
        (0, 0, 3),
    )


def test_realize_check_refuted_and_open(capsys, tmp_path):
    assert cli.main(["realize", "check", fixture_path("cyclic-4-7.json")]) == 1
    out = capsys.readouterr().out
    assert "refuted by the suspension criterion: witness ((5, 7), 3)" in out
    open_ball = _open_ball_file(tmp_path)
    assert cli.main(["realize", "check", open_ball]) == 0
    assert "open: no refutation criterion applies" in capsys.readouterr().out


def test_realize_search_finds_and_emits(capsys, tmp_path):
    open_ball = _open_ball_file(tmp_path)
    assert cli.main(["realize", "search", open_ball, "--budget", "10000"]) == 0
    out = capsys.readouterr().out
    assert "found after 60 candidates" in out
    surface = parse_surface(out[out.index("{") :])
    assert surface.dim == 4 and len(surface.vertices) == 7


def test_realize_search_budget_is_inconclusive(capsys, tmp_path):
    open_ball = _open_ball_file(tmp_path)
    assert cli.main(["realize", "search", open_ball, "--budget", "10"]) == 1
    assert "inconclusive: budget of 10 candidates" in capsys.readouterr().out


def test_construct_simplex_and_stack(capsys, simplex_file):
    assert cli.main(["construct", "simplex", "3"]) == 0
    assert parse_surface(capsys.readouterr().out).vertices == (
        (1, 1, 1),
        (2, 0, 0),
        (0, 2, 0),
        (0, 0, 2),
    )
    assert cli.main(["construct", "stack", simplex_file, "--max", "0"]) == 0
    stacked = parse_surface(capsys.readouterr().out)
    assert len(stacked.vertices) == 5
    assert cli.main(["construct", "stack", simplex_file, "--max", "9"]) == 2
    assert "out of range" in capsys.readouterr().err


def test_construct_pyramid(capsys, square_file):
    assert cli.main(["construct", "pyramid", square_file]) == 0
    surface = parse_surface(capsys.readouterr().out)
    assert surface.vertices == ((1, 2, 1), (2, 1, 1), (3, 0, 0), (0, 3, 0), (0, 0, 2))


def test_construct_prism_fails_verification(capsys, simplex_file):
    assert cli.main(["construct", "prism", simplex_file, "--max", "0"]) == 1
    err = capsys.readouterr().err
    assert "construction failed verification: prism:" in err
    assert "missing faces" in err


def test_construct_product_fails_verification(capsys, tmp_path):
    path = tmp_path / "s2.json"
    path.write_text(emit_surface(simplex_surface(2)), encoding="utf-8")
    assert cli.main(["construct", "product", str(path), "-k", "3"]) == 1
    err = capsys.readouterr().err
    assert "must miss exactly one facet" in err


def test_render3d_writes_svg(capsys, simplex_file, tmp_path):
    out_svg = tmp_path / "surface.svg"
    assert cli.main(["render3d", simplex_file, "--svg", str(out_svg)]) == 0
    assert f"wrote {out_svg}" in capsys.readouterr().out
    ET.fromstring(out_svg.read_text(encoding="utf-8"))
    assert cli.main(["render3d", fixture_path("no-lattice.json"), "--svg", str(out_svg)]) == 2


def test_missing_and_malformed_inputs(capsys, tmp_path):
    assert cli.main(["check", str(tmp_path / "nope.json")]) == 2
    assert "input error" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "surface/1"}', encoding="utf-8")
    assert cli.main(["cpoints", str(bad)]) == 2
    assert "input error" in capsys.readouterr().err
