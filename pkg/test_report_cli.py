#!/usr/bin/env python3
"""
Test script for the dyadbound command-line interface
"""

import csv
import io
import json

import pytest

from dyadbound.config import get_settings
from dyadbound.main import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def error_payload(err: str) -> dict:
    lines = [line for line in err.splitlines() if line.startswith('{"error"')]
    assert lines, err
    return json.loads(lines[-1])


@pytest.fixture
def triangle_files(tmp_path):
    edges = tmp_path / "triangle.txt"
    edges.write_text("# triangle\na b\nb c\nc a\n", encoding="utf-8")
    labels = tmp_path / "labels.txt"
    labels.write_text("1\n1\n0\n", encoding="utf-8")
    return edges, labels


def test_bounds_on_generated_graph(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "er", "--n", "25", "--m", "32", "--seed", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 26
    for row in rows:
        assert int(row["ub_m11"]) <= int(row["ub_m11_old"])
        assert int(row["ub_m10"]) <= int(row["ub_m10_old"])


def test_bounds_single_n1_as_json(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "er", "--n", "25", "--m", "32", "--seed", "3",
                       "--n1", "10", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["n1"] == 10


def test_expected_curve_row(capsys):
    code, out, _ = run(capsys, "expected", "--n", "25", "--m", "32")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 26
    row = rows[10]
    assert row["n1"] == "10"
    assert float(row["expected_m11"]) == pytest.approx(4.8, abs=1e-12)
    assert float(row["expected_m10"]) == pytest.approx(16.0, abs=1e-12)


def test_expected_curves_for_several_densities(capsys):
    code, out, _ = run(capsys, "expected", "--n", "10", "--density", "0.1", "--density", "0.5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 22
    assert {row["density"] for row in rows} == {"0.1", "0.5"}


def test_metrics_on_triangle(capsys, triangle_files):
    edges, labels = triangle_files
    code, out, _ = run(capsys, "metrics", "--input", str(edges), "--labels", str(labels))
    assert code == 0
    payload = json.loads(out)
    assert (payload["m11"], payload["m10"], payload["m00"]) == (1, 2, 0)
    assert payload["D"] == 1
    assert payload["H"] == 1
    assert payload["classification"]["dyadicity"] == "neutral"


def test_metrics_with_label_set(capsys, triangle_files, tmp_path):
    edges, _ = triangle_files
    members = tmp_path / "members.txt"
    members.write_text("c\n", encoding="utf-8")
    code, out, _ = run(capsys, "metrics", "--input", str(edges), "--labels", str(members),
                       "--labels-format", "set")
    assert code == 0
    payload = json.loads(out)
    assert payload["n1"] == 1
    assert payload["D"] == "undefined"


def test_phase_outputs_are_byte_identical(capsys, tmp_path):
    outputs = []
    for attempt in range(2):
        csv_path = tmp_path / f"phase_{attempt}.csv"
        svg_path = tmp_path / f"phase_{attempt}.svg"
        code, _, _ = run(capsys, "phase", "--gen", "er", "--n", "10", "--m", "15", "--seed", "4",
                         "--n1", "5", "--output", str(csv_path), "--svg", str(svg_path))
        assert code == 0
        outputs.append((csv_path.read_bytes(), svg_path.read_bytes()))
    assert outputs[0] == outputs[1]
    assert outputs[0][0].decode().splitlines()[0] == "m10,m11,count"
    assert b"<svg" in outputs[0][1]


def test_phase_for_every_n1(capsys, tmp_path):
    target = tmp_path / "diagrams" / "path.csv"
    edges = tmp_path / "path.txt"
    edges.write_text("1 2\n2 3\n3 4\n", encoding="utf-8")
    code, _, _ = run(capsys, "phase", "--input", str(edges), "--n1", "all", "--output", str(target))
    assert code == 0
    written = sorted(p.name for p in target.parent.iterdir())
    assert written == [f"path_n1_{k}.csv" for k in range(5)]
    assert (target.parent / "path_n1_2.csv").read_text().splitlines() == [
        "m10,m11,count", "1,1,2", "2,0,1", "2,1,1", "3,0,2",
    ]


def test_gains_and_bench(capsys):
    code, out, _ = run(capsys, "gains", "--gen", "regular", "--n", "12", "--mean-degree", "4", "--seed", "2")
    assert code == 0
    assert out.splitlines()[0] == "n1,area_old,area_new,gain_ub_m11,gain_ub_m10,gain_lb_m11,gain_lb_m10,gain_total"
    assert len(out.splitlines()) == 14

    code, out, _ = run(capsys, "bench", "--gen", "ba", "--n", "30", "--mean-degree", "4", "--runs", "3",
                       "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 31


def test_gen_round_trip(capsys, tmp_path):
    graph_file = tmp_path / "er.txt"
    code, _, _ = run(capsys, "gen", "--gen", "er", "--n", "20", "--m", "40", "--seed", "11",
                     "--connected", "--output", str(graph_file))
    assert code == 0
    _, from_file, _ = run(capsys, "bounds", "--input", str(graph_file))
    _, from_gen, _ = run(capsys, "bounds", "--gen", "er", "--n", "20", "--m", "40", "--seed", "11", "--connected")
    assert from_file == from_gen


def test_generator_config_file(capsys, tmp_path):
    config = tmp_path / "gen.env"
    config.write_text("family=er\nn=25\nm=32\nseed=3\n", encoding="utf-8")
    _, from_config, _ = run(capsys, "bounds", "--gen-config", str(config))
    _, from_flags, _ = run(capsys, "bounds", "--gen", "er", "--n", "25", "--m", "32", "--seed", "3")
    assert from_config == from_flags


def test_missing_file_is_an_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "bounds", "--input", str(tmp_path / "missing.txt"))
    assert code == 74
    assert error_payload(err)["error"] == "io_error"


def test_missing_generator_config_is_an_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "bounds", "--gen-config", str(tmp_path / "missing.env"))
    assert code == 74
    assert error_payload(err)["error"] == "io_error"


def test_non_utf8_input_is_a_parse_error(capsys, tmp_path, triangle_files):
    bad = tmp_path / "binary.txt"
    bad.write_bytes(b"\xff\xfe 1\n")
    code, _, err = run(capsys, "bounds", "--input", str(bad))
    assert code == 65
    assert error_payload(err)["error"] == "parse_error"

    edges, _ = triangle_files
    code, _, err = run(capsys, "metrics", "--input", str(edges), "--labels", str(bad))
    assert code == 65
    assert error_payload(err)["error"] == "parse_error"


def test_malformed_edge_list(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1\n", encoding="utf-8")
    code, _, err = run(capsys, "bounds", "--input", str(bad))
    assert code == 65
    payload = error_payload(err)
    assert payload["error"] == "parse_error"
    assert "line 2" in payload["message"]


def test_budget_refusal_exit_status(capsys, monkeypatch):
    monkeypatch.setenv("DYADBOUND_ENUMERATION_BUDGET", "10")
    get_settings.cache_clear()
    try:
        code, _, err = run(capsys, "phase", "--gen", "er", "--n", "10", "--m", "15", "--n1", "5")
    finally:
        monkeypatch.delenv("DYADBOUND_ENUMERATION_BUDGET")
        get_settings.cache_clear()
    assert code == 75
    assert error_payload(err)["error"] == "budget_exceeded"


def test_unsatisfiable_generator_exit_status(capsys):
    code, _, err = run(capsys, "gen", "--gen", "regular", "--n", "5", "--mean-degree", "3")
    assert code == 78
    assert error_payload(err)["error"] == "config_error"


def test_usage_errors(capsys, triangle_files):
    edges, _ = triangle_files
    code, _, err = run(capsys, "bounds")
    assert code == 2
    assert error_payload(err)["error"] == "usage_error"

    code, _, _ = run(capsys, "bounds", "--input", str(edges), "--gen", "er", "--n", "5", "--m", "4")
    assert code == 2

    code, _, _ = run(capsys, "phase", "--input", str(edges))
    assert code == 2

    with pytest.raises(SystemExit) as info:
        main(["bounds", "--format", "xml"])
    assert info.value.code == 2


def test_help_documents_formats():
    text = build_parser().format_help()
    for name in ("edge list", "phase CSV", "gain CSV", "exit status"):
        assert name in text
