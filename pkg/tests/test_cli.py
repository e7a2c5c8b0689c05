"""Command line interface contract."""

from __future__ import annotations

import json

import pytest

from metricdim.cli import main
from metricdim.corpus import corona, fixtures, to_edge_list


@pytest.fixture
def corona6_path(tmp_path):
    path = tmp_path / "corona6.txt"
    path.write_text(to_edge_list(corona(6)))
    return str(path)


@pytest.fixture
def twinleaf_path(tmp_path):
    path = tmp_path / "twinleaf.txt"
    path.write_text(to_edge_list(fixtures()["TWINLEAF6"]))
    return str(path)


def test_analyze_json_fields(corona6_path, capsys):
    assert main(["analyze", corona6_path, "--json", "--no-timing"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {
        "n", "m", "g", "L", "b", "branch_active", "dim", "edim", "difference",
    }
    assert (data["n"], data["m"], data["g"]) == (12, 12, 6)
    assert (data["L"], data["b"]) == (0, 0)
    assert data["branch_active"] == []
    assert data["dim"]["value"] == 3
    assert data["dim"]["delta"] == 1
    assert data["dim"]["status"] == "positive"
    assert data["edim"]["value"] == 2
    assert data["edim"]["status"] == "negative"
    assert data["edim"]["witness"] is None
    assert data["difference"] == 1


def test_analyze_json_includes_timing_by_default(corona6_path, capsys):
    assert main(["analyze", corona6_path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert "timing" in data
    assert isinstance(data["timing"], float)


def test_analyze_output_is_stable(corona6_path, capsys):
    main(["analyze", corona6_path, "--json", "--no-timing"])
    first = capsys.readouterr().out
    main(["analyze", corona6_path, "--json", "--no-timing"])
    assert capsys.readouterr().out == first


def test_analyze_text_mentions_configurations(twinleaf_path, capsys):
    assert main(["analyze", twinleaf_path, "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "vertex metric dimension: 3" in out
    assert "edge metric dimension: 3" in out
    assert "A" in out
    assert "witness pair" in out


def test_analyze_rejects_tree(tmp_path, capsys):
    path = tmp_path / "tree.txt"
    path.write_text("0 1\n1 2\n")
    assert main(["analyze", str(path)]) == 2
    assert "not unicyclic" in capsys.readouterr().err


def test_analyze_rejects_missing_file(capsys):
    assert main(["analyze", "/nonexistent/graph.txt"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_generator(twinleaf_path, capsys):
    assert main(["verify", twinleaf_path, "--set", "1,6,8", "--mode", "vertex"]) == 0
    assert "generator" in capsys.readouterr().out


def test_verify_non_generator_names_configuration(corona6_path, capsys):
    assert main(["verify", corona6_path, "--set", "6,8", "--mode", "vertex"]) == 1
    out = capsys.readouterr().out.strip()
    assert out == "not a generator; pair (7, 4); configuration C"


def test_verify_edge_mode_on_vertex_blocked_set(corona6_path, capsys):
    """The same set resolves edges even though it fails for vertices."""
    assert main(["verify", corona6_path, "--set", "6,8", "--mode", "edge"]) == 0
    assert capsys.readouterr().out.strip() == "generator"


def test_verify_non_generator_edge_mode(twinleaf_path, capsys):
    assert main(["verify", twinleaf_path, "--set", "6,8", "--mode", "edge"]) == 1
    out = capsys.readouterr().out
    assert "not a generator" in out
    assert "A" in out


def test_verify_rejects_bad_set(corona6_path, capsys):
    assert main(["verify", corona6_path, "--set", "6,x", "--mode", "vertex"]) == 2
    assert main(["verify", corona6_path, "--set", "99", "--mode", "vertex"]) == 2
    capsys.readouterr()


def test_analyze_plain_cycle(tmp_path, capsys):
    path = tmp_path / "c5.txt"
    main(["gen", "cycle", "5", "--out", str(path)])
    capsys.readouterr()
    assert main(["analyze", str(path), "--json", "--no-timing"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"]["value"] == 2
    assert data["edim"]["value"] == 2
    assert data["difference"] == 0


def test_compare_small_corpus(capsys):
    assert main(["compare", "--max-n", "6"]) == 0
    out = capsys.readouterr().out
    assert "total: 21 graphs, 0 mismatches" in out
    assert "parity violations: 0" in out


def test_compare_rejects_out_of_range(capsys):
    assert main(["compare", "--max-n", "20"]) == 2
    capsys.readouterr()


def test_gen_cycle_stdout(capsys):
    assert main(["gen", "cycle", "4"]) == 0
    out = capsys.readouterr().out
    assert "0 1" in out and "0 3" in out


def test_gen_random_round_trip(tmp_path, capsys):
    out_path = tmp_path / "r.txt"
    assert main(["gen", "random", "n=9", "g=5", "seed=7", "--out", str(out_path)]) == 0
    assert main(["analyze", str(out_path), "--json", "--no-timing"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 9
    assert data["g"] == 5


def test_gen_fixture_and_unknown(tmp_path, capsys):
    assert main(["gen", "fixture", "PENT3"]) == 0
    capsys.readouterr()
    assert main(["gen", "fixture", "NOPE"]) == 2
    assert "available" in capsys.readouterr().err


def test_gen_validates_parameters(capsys):
    assert main(["gen", "random", "n=9", "g=5"]) == 2
    assert "seed" in capsys.readouterr().err
    assert main(["gen", "corona"]) == 2
    capsys.readouterr()
