"""Tests for the ``surface`` command line."""

import json
import math

import numpy as np
import pytest

from src.graph import FlipPattern, genus, graph_from_json, graph_to_json, named_graph
from src.main import build_parser, main


@pytest.fixture
def graph_file(tmp_path):
    """Write a named graph to a temporary JSON file."""

    def write(base: str, *flips: int):
        path = tmp_path / f"{base}-{'-'.join(map(str, flips)) or 'plain'}.json"
        graph = named_graph(FlipPattern(base=base, flipped_vertices=frozenset(flips)))
        path.write_text(json.dumps(graph_to_json(graph)))
        return path

    return write


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parser_defaults():
    """Test subcommand parsing and defaults."""
    args = build_parser().parse_args(["--log-level", "debug", "metric", "extend"])
    assert args.log_level == "DEBUG"
    assert args.r0 == 0.5
    args = build_parser().parse_args(["curves", "slit"])
    assert args.R2 == 0.8
    assert args.R1 is None
    args = build_parser().parse_args(["analyze", "g.json", "--render", "out.svg"])
    assert args.svg == "out.svg"
    assert args.report_format == "json"
    assert build_parser().parse_args(["analyze", "g.json", "--summary"]).report_format == "summary"
    args = build_parser().parse_args(["gen", "cube", "--flips", "0,6"])
    assert args.flips == [[0, 6]]
    args = build_parser().parse_args(["gen", "cube", "--flip", "0", "6"])
    assert args.flips == [[0], [6]]
    assert build_parser().parse_args(["render", "g.json", "-o", "out.svg"]).svg == "out.svg"
    args = build_parser().parse_args(
        ["metric", "extend", "--r0", "0.5", "--report", "out.json", "--plot", "out.svg"]
    )
    assert (args.output, args.svg) == ("out.json", "out.svg")


def test_gen_then_analyze(tmp_path, capsys):
    """Test generating the flipped theta graph and analyzing it as the one-cusp torus."""
    graph_path = tmp_path / "theta.json"
    code, out, _ = run(capsys, "gen", "theta", "--flip", "0", "-o", str(graph_path))
    assert code == 0
    assert out == ""

    code, out, _ = run(capsys, "analyze", str(graph_path), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["genus"] == 1
    assert report["euler_characteristic"] == 0
    assert report["cusps"]["lengths"] == [6]
    assert report["symmetry"]["preserving_order"] == 6
    assert report["angles"]["status"] == "unique"
    assert set(report["angles"]["exact"].values()) == {"1/3"}
    assert report["flat_angles"]["status"] == "unique"
    assert report["parabolicity"]["parabolic"]
    assert report["large_cusps"] is False


def test_analyze_summary_and_render(graph_file, tmp_path, capsys):
    """Test the plain-text summary and the polygon drawing."""
    svg = tmp_path / "cube.svg"
    code, out, _ = run(
        capsys, "analyze", str(graph_file("cube", 0, 6)), "--summary", "--svg", str(svg)
    )
    assert code == 0
    assert "genus: 2" in out
    assert "large_cusps: true" in out
    assert svg.exists()


def test_analyze_with_shifts(graph_file, tmp_path, capsys):
    """Test that non-zero shear sums break parabolicity."""
    shifts = tmp_path / "shifts.json"
    shifts.write_text(json.dumps({"0": 0.3}))
    code, out, _ = run(
        capsys, "analyze", str(graph_file("tetrahedron")), "--shifts", str(shifts), "--json"
    )
    assert code == 0
    parabolicity = json.loads(out)["parabolicity"]
    assert not parabolicity["parabolic"]
    assert max(parabolicity["shift_sums"]) == pytest.approx(0.3)


def test_gen_congruence_graph(capsys):
    """Test that the level-7 congruence graph is the genus-3 surface with 24 cusps."""
    code, out, _ = run(capsys, "gen", "gamma-k", "7")
    assert code == 0
    graph = graph_from_json(json.loads(out))
    assert graph.vertex_count == 56
    assert genus(graph) == 3


def test_gen_random_is_reproducible(capsys):
    """Test seeded random graphs."""
    _, first, _ = run(capsys, "gen", "random", "--vertices", "6", "--seed", "3")
    _, second, _ = run(capsys, "gen", "random", "--vertices", "6", "--seed", "3")
    assert first == second
    assert graph_from_json(json.loads(first)).vertex_count == 6


def test_gen_rejects_unknown_vertex(capsys):
    """Test that flipping a missing vertex is a domain error."""
    code, out, err = run(capsys, "gen", "cube", "--flip", "9")
    assert code == 1
    assert out == ""
    assert "cannot flip [9]" in err


def test_malformed_json_exit_code(tmp_path, capsys):
    """Test that unreadable input exits with code 2."""
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2
    assert "malformed JSON at line 1" in err


def test_invalid_graph_reports_violations(tmp_path, capsys):
    """Test that validation failures exit with code 1 and print the report."""
    path = tmp_path / "invalid.json"
    path.write_text(
        json.dumps(
            {
                "vertex_count": 2,
                "twin": [3, 5, 4, 1, 2, 0],
                "rotation": [1, 2, 0, 4, 5, 3],
                "dart_vertex": [0, 0, 0, 1, 1, 1],
            }
        )
    )
    code, out, err = run(capsys, "analyze", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False
    assert "twin-involution" in {v["rule"] for v in report["violations"]}
    assert "twin-involution" in err


def test_metric_commands(tmp_path, capsys):
    """Test the metric extension, its precondition and the SVG plot."""
    svg = tmp_path / "extend.svg"
    code, out, _ = run(capsys, "metric", "extend", "--r0", "0.6", "--json", "--svg", str(svg))
    assert code == 0
    report = json.loads(out)
    assert report["negative_curvature"] is True
    assert report["matches_dstar"] is True
    assert svg.exists()

    code, _, err = run(capsys, "metric", "extend", "--r0", "0.3")
    assert code == 1
    assert "1/e" in err


def test_curves_commands(tmp_path, capsys):
    """Test the three curve constructions."""
    svg = tmp_path / "convex.svg"
    code, out, _ = run(capsys, "curves", "convex", "--json", "--svg", str(svg))
    assert code == 0
    report = json.loads(out)
    assert report["certificate"]["certified"] is True
    assert report["gauss_bonnet_total"] > 2 * math.pi
    assert svg.exists()

    code, out, _ = run(capsys, "curves", "slit", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["enclosed_area"] == pytest.approx(2 * math.pi + 0.5)
    assert [piece["kind"] for piece in report["pieces"]] == [
        "horocycle",
        "vertical",
        "horocycle",
        "vertical",
        "horocycle",
    ]

    code, out, _ = run(capsys, "curves", "noextend", "--json")
    assert code == 0
    assert json.loads(out)["certificate"]["shortcut_exists"] is True

    code, _, err = run(capsys, "curves", "slit", "--R1", "0.5")
    assert code == 1
    assert "below 1/e" in err


def test_gen_accepts_comma_separated_flips(capsys):
    """Test that --flips 0,6 flips two opposite cube vertices."""
    code, out, _ = run(capsys, "gen", "cube", "--flips", "0,6")
    assert code == 0
    graph = graph_from_json(json.loads(out))
    assert graph == named_graph(FlipPattern(base="cube", flipped_vertices=frozenset({0, 6})))
    assert genus(graph) == 2


def test_analyze_defaults_to_json_with_side_pairings(graph_file, capsys):
    """Test the default JSON report and its determinant-1 side-pairing matrices."""
    code, out, _ = run(capsys, "analyze", str(graph_file("theta", 0)))
    assert code == 0
    report = json.loads(out)
    pairings = {entry["dart"]: entry for entry in report["side_pairings"]}
    assert len(pairings) == 4
    for dart, entry in pairings.items():
        matrix = np.array(entry["matrix"])
        assert np.linalg.det(matrix) == pytest.approx(1.0)
        assert matrix[1, 0] > 0 or (matrix[1, 0] == 0 and matrix[1, 1] > 0)
        inverse = np.array(pairings[entry["partner"]]["matrix"])
        assert np.allclose(np.abs(matrix @ inverse), np.eye(2), atol=1e-9)


def test_render_writes_svg_to_output(graph_file, tmp_path, capsys):
    """Test that render -o names the SVG and stdout carries the pairings."""
    svg = tmp_path / "theta.svg"
    code, out, _ = run(capsys, "render", str(graph_file("theta")), "-o", str(svg))
    assert code == 0
    assert "<svg" in svg.read_text()
    report = json.loads(out)
    assert report["svg"] == str(svg)
    assert report["triangles"] == 2
    assert len(report["side_pairings"]) == 4


def test_metric_extend_defaults_to_json(capsys):
    """Test the certification JSON of the default fill-in and of a steep boundary."""
    code, out, _ = run(capsys, "metric", "extend", "--r0", "0.5")
    assert code == 0
    report = json.loads(out)
    assert report["negative_curvature"] is True
    assert report["c1_jump"] <= 1e-8

    code, out, _ = run(capsys, "metric", "extend", "--r0", "0.99")
    assert code == 0
    assert json.loads(out)["negative_curvature"] is True


def test_analyze_rejects_oversized_vertex_count(tmp_path, capsys):
    """Test that a vertex count unrelated to the darts is a validation failure."""
    path = tmp_path / "huge.json"
    path.write_text(
        json.dumps(
            {
                "vertex_count": 4_000_000_000,
                "twin": [3, 5, 4, 0, 2, 1],
                "rotation": [1, 2, 0, 4, 5, 3],
                "dart_vertex": [0, 0, 0, 1, 1, 1],
            }
        )
    )
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 1
    assert {v["rule"] for v in json.loads(out)["violations"]} == {"dart-count"}
