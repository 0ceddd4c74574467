import json

import pytest

from agc.cli import main
from agc.groupfile import load_group, save_group
from agc.constructions import symmetric


@pytest.fixture()
def s3_file(tmp_path):
    path = tmp_path / "s3.json"
    save_group(symmetric(3), path)
    return str(path)


def test_analyze_exit_zero_and_report(s3_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["analyze", s3_file, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["fingerprint"]["order"] == 6
    statuses = {c["id"]: c["status"] for c in report["checks"]}
    assert statuses["derived-center-intersection"] == "pass"


def test_analyze_malformed_file_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["analyze", str(bad)]) == 1
    assert main(["analyze", str(tmp_path / "missing.json")]) == 1


def test_max_order_flag_and_env(s3_file, tmp_path, monkeypatch, capsys):
    s4 = tmp_path / "s4.json"
    save_group(symmetric(4), s4)
    assert main(["--max-order", "10", "analyze", str(s4)]) == 1
    monkeypatch.setenv("AGC_MAX_ORDER", "10")
    assert main(["analyze", str(s4)]) == 1
    # the flag wins over the environment
    assert main(["--max-order", "100", "analyze", str(s4)]) == 0


def test_witness_emit_and_reanalyze(tmp_path, capsys):
    emitted = tmp_path / "w60.json"
    assert main(["witness", "diameter-4", "--emit", str(emitted)]) == 0
    G = load_group(emitted)
    assert G.order == 60
    report_path = tmp_path / "report.json"
    assert main(["analyze", str(emitted), "--out", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    statuses = {c["id"]: c for c in report["checks"]}
    assert statuses["connected-diameter-le-6"]["witness"]["diameter"] == 4
    assert statuses["metabelian-diameter-le-4"]["status"] == "pass"


def test_witness_unknown_name(capsys):
    assert main(["witness", "nosuch"]) == 1


def test_graph_formats(s3_file, tmp_path, capsys):
    dot = tmp_path / "g.dot"
    assert main(["graph", s3_file, "--format", "dot", "--out", str(dot)]) == 0
    assert dot.read_text().startswith("graph")
    js = tmp_path / "g.json"
    assert main(["graph", s3_file, "--format", "json", "--out", str(js)]) == 0
    payload = json.loads(js.read_text())
    assert payload["order"] == 6


def test_corpus_command(tmp_path, capsys):
    src = tmp_path / "groups"
    src.mkdir()
    save_group(symmetric(3), src / "s3.json")
    save_group(symmetric(4), src / "s4.json")
    out = tmp_path / "out"
    assert main(["corpus", str(src), "--out", str(out)]) == 0
    reports = json.loads((out / "reports.json").read_text())
    assert len(reports["reports"]) == 2
    csv_lines = (out / "summary.csv").read_text().splitlines()
    assert csv_lines[0].startswith("name,order,derived_length")
    assert len(csv_lines) == 3


def test_corpus_skips_corrupt_files_unless_strict(tmp_path, capsys):
    src = tmp_path / "groups"
    src.mkdir()
    save_group(symmetric(3), src / "s3.json")
    (src / "broken.json").write_text("{nope")
    out1 = tmp_path / "out1"
    assert main(["corpus", str(src), "--out", str(out1)]) == 0
    reports = json.loads((out1 / "reports.json").read_text())
    assert len(reports["skipped"]) == 1
    assert main(["corpus", str(src), "--strict", "--out",
                 str(tmp_path / "out2")]) == 1


def test_corpus_missing_directory(tmp_path, capsys):
    assert main(["corpus", str(tmp_path / "nope")]) == 1
