"""Tests for rotation-graph validation, path tracing and genus."""

import json

import pytest

from src.errors import GraphValidationError, InputError
from src.graph import (
    Dart,
    FlipPattern,
    RotationGraph,
    cusp_count,
    euler_characteristic,
    genus,
    graph_from_json,
    graph_to_json,
    mirror,
    named_graph,
    read_graph,
    trace_lht_paths,
    validate,
    write_graph,
)
from src.graph.core import edge_count, successor


def build(base: str, *flips: int) -> RotationGraph:
    return named_graph(FlipPattern(base=base, flipped_vertices=frozenset(flips)))


GOLDEN = [
    # base, flips, path lengths, genus
    ("theta", (), [2, 2, 2], 0),
    ("theta", (0,), [6], 1),
    ("tetrahedron", (), [3, 3, 3, 3], 0),
    ("tetrahedron", (3,), [3, 9], 1),
    ("tetrahedron", (2, 3), [4, 8], 1),
    ("cube", (), [4] * 6, 0),
    ("cube", (0,), [4, 4, 4, 12], 1),
    ("cube", (0, 6), [12, 12], 2),
]


@pytest.mark.parametrize("base,flips,lengths,expected_genus", GOLDEN)
def test_golden_examples(base, flips, lengths, expected_genus):
    """Test path lengths, cusp count, Euler characteristic and genus of the worked examples."""
    g = build(base, *flips)
    paths = trace_lht_paths(g)
    assert sorted(p.length for p in paths) == lengths
    assert cusp_count(g) == len(lengths)
    assert euler_characteristic(g) == len(lengths) - g.vertex_count // 2
    assert genus(g) == expected_genus


def test_theta_paths(theta):
    """Test the exact dart sequences of the oriented theta graph."""
    assert [p.darts for p in trace_lht_paths(theta)] == [(0, 4), (1, 3), (2, 5)]


def test_paths_partition_darts(cube_one_flip):
    """Test that every dart lies on exactly one path, which follows the successor law."""
    paths = trace_lht_paths(cube_one_flip)
    darts = [d for p in paths for d in p.darts]
    assert sorted(darts) == list(range(cube_one_flip.dart_count))
    for path in paths:
        assert path.darts[0] == min(path.darts)
        for k, dart in enumerate(path.darts):
            assert successor(cube_one_flip, dart) == path.darts[(k + 1) % path.length]


def test_counts(cube):
    """Test the edge and dart counts."""
    assert edge_count(cube) == 12
    assert cube.dart_count == 24
    assert cube.vertex_darts(0) == (0, 1, 2)
    assert cube.local_index(2) == 2
    assert cube.darts[5] == Dart(id=5, vertex=1)


def test_mirror_keeps_lengths_and_genus(tetrahedron_one_flip):
    """Test that reversing every rotation keeps the cusp multiset and genus."""
    mirrored = mirror(tetrahedron_one_flip)
    assert mirrored.rotation != tetrahedron_one_flip.rotation
    assert sorted(p.length for p in trace_lht_paths(mirrored)) == [3, 9]
    assert genus(mirrored) == 1


def test_validate_accepts_examples(theta, cube_two_flips):
    """Test that the named graphs are valid."""
    assert validate(theta).ok
    assert validate(cube_two_flips).ok


def test_validate_reports_all_violations():
    """Test that broken graphs are reported as data with every failed rule."""
    # twin is not an involution
    g = RotationGraph(
        vertex_count=2,
        twin=(3, 5, 4, 1, 2, 0),
        rotation=(1, 2, 0, 4, 5, 3),
        dart_vertex=(0, 0, 0, 1, 1, 1),
    )
    report = validate(g)
    assert not report.ok
    assert "twin-involution" in report.rules()

    # rotation mixes vertices and has the wrong cycle type
    g = RotationGraph(
        vertex_count=2,
        twin=(3, 4, 5, 0, 1, 2),
        rotation=(1, 0, 3, 4, 5, 2),
        dart_vertex=(0, 0, 0, 1, 1, 1),
    )
    rules = validate(g).rules()
    assert "rotation-3-cycles" in rules
    assert "rotation-vertex" in rules

    # lengths disagree
    g = RotationGraph(vertex_count=2, twin=(1, 0), rotation=(0, 1, 2), dart_vertex=(0,))
    assert validate(g).rules() == {"array-lengths"}

    # not a permutation
    g = RotationGraph(
        vertex_count=2,
        twin=(3, 4, 5, 0, 1, 2),
        rotation=(1, 1, 0, 4, 5, 3),
        dart_vertex=(0, 0, 0, 1, 1, 1),
    )
    assert "permutation" in validate(g).rules()


def test_validate_huge_vertex_count():
    """Test that a vertex count far beyond the darts is reported without per-vertex work."""
    g = RotationGraph(
        vertex_count=4_000_000_000,
        twin=(3, 5, 4, 0, 2, 1),
        rotation=(1, 2, 0, 4, 5, 3),
        dart_vertex=(0, 0, 0, 1, 1, 1),
    )
    report = validate(g)
    assert report.rules() == {"dart-count"}
    assert report.violations[0].ids == [6]


def test_validate_disconnected():
    """Test that two separate theta graphs fail the connectivity rule."""
    g = RotationGraph(
        vertex_count=4,
        twin=(3, 5, 4, 0, 2, 1, 9, 11, 10, 6, 8, 7),
        rotation=(1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9),
        dart_vertex=(0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3),
    )
    report = validate(g)
    assert report.rules() == {"connected"}
    assert report.violations[0].ids == [2, 3]


def test_trace_rejects_invalid_graph():
    """Test that tracing raises for an invalid graph and carries the report."""
    g = RotationGraph(
        vertex_count=2,
        twin=(0, 5, 4, 3, 2, 1),
        rotation=(1, 2, 0, 4, 5, 3),
        dart_vertex=(0, 0, 0, 1, 1, 1),
    )
    with pytest.raises(GraphValidationError) as exc_info:
        trace_lht_paths(g)
    assert "twin-involution" in exc_info.value.report.rules()
    assert exc_info.value.exit_code == 1


def test_json_round_trip(tmp_path, cube_two_flips):
    """Test writing and reading a graph file."""
    path = tmp_path / "cube.json"
    write_graph(cube_two_flips, path)
    assert read_graph(path) == cube_two_flips
    assert json.loads(path.read_text()) == graph_to_json(cube_two_flips)


def test_read_graph_reports_malformed_json(tmp_path):
    """Test that JSON syntax errors carry line and column."""
    path = tmp_path / "bad.json"
    path.write_text('{\n  "vertex_count": 2,\n  "twin": [1, 0\n}')
    with pytest.raises(InputError, match="line 4") as exc_info:
        read_graph(path)
    assert exc_info.value.exit_code == 2


def test_graph_from_json_reports_field():
    """Test that schema errors name the offending field."""
    with pytest.raises(InputError, match="'twin'"):
        graph_from_json({"vertex_count": 2, "twin": "x", "rotation": [], "dart_vertex": []})
    with pytest.raises(InputError, match="object"):
        graph_from_json([1, 2, 3])


def test_read_graph_missing_file(tmp_path):
    """Test that an unreadable path is an input error."""
    with pytest.raises(InputError, match="Cannot read"):
        read_graph(tmp_path / "missing.json")
