import json

import pytest

from circlehold import cli


def run(argv):
    return cli.main([str(a) for a in argv])


def construct(tmp_path, *argv):
    code = run(["construct", *argv, "--out-dir", tmp_path])
    assert code == 0
    return tmp_path


def test_construct_octahedron(tmp_path, capsys):
    construct(tmp_path, "octahedron-iceberg", "--a", "1.38", "--h", "5")
    body = json.loads((tmp_path / "body.json").read_text())
    assert len(body["vertices"]) == 6
    preds = json.loads((tmp_path / "predictions.json").read_text())
    assert preds["predictions"]["diameter"]["value"] == pytest.approx(
        2.695881606531, abs=1e-9)
    assert (tmp_path / "scene.obj").exists()
    out = capsys.readouterr().out
    assert "octahedron-iceberg" in out


def test_construct_is_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    a.mkdir(); b.mkdir()
    construct(a, "skew-tetra", "--eps", "0.05")
    construct(b, "skew-tetra", "--eps", "0.05")
    for name in ("body.json", "circle.json", "predictions.json", "scene.obj"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_construct_unknown_family():
    with pytest.raises(SystemExit) as exc:
        run(["construct", "pentagon-thing"])
    assert exc.value.code == 1


def test_construct_missing_parameter(tmp_path, capsys):
    code = run(["construct", "octahedron-iceberg", "--a", "1.38",
                "--out-dir", tmp_path])
    assert code == 1
    assert "h" in capsys.readouterr().err


def test_analyze_finds_holding_circle(tmp_path, capsys):
    construct(tmp_path, "flat-tetra", "--eps", "0.2")
    code = run(["analyze", tmp_path / "body.json", "--budget", "800",
                "--out-dir", tmp_path])
    assert code == 0
    doc = json.loads((tmp_path / "analysis.json").read_text())
    assert doc["holding"]["verdict"] == "CertifiedHoldingEvidence"
    assert doc["holding"]["circle"]["diameter"] == pytest.approx(
        0.392232270276, abs=1e-6)
    assert "CertifiedHoldingEvidence" in capsys.readouterr().out


def test_analyze_given_circle_escapes(tmp_path):
    # loose ring around a cube: the search slides it off the top
    pts = [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    (tmp_path / "body.json").write_text(json.dumps({"vertices": pts}))
    (tmp_path / "circle.json").write_text(json.dumps(
        {"center": [0.5, 0.5, 0.5], "diameter": 1.8, "normal": [0, 0, 1]}))
    code = run(["analyze", tmp_path / "body.json",
                "--circle", tmp_path / "circle.json", "--budget", "20000"])
    assert code == 2


def test_analyze_profile_outputs(tmp_path):
    construct(tmp_path, "octahedron-iceberg", "--a", "1.2", "--h", "10")
    code = run(["analyze", tmp_path / "body.json",
                "--circle", tmp_path / "circle.json",
                "--budget", "2000", "--theta-samples", "90",
                "--csv", "--svg", "--out-dir", tmp_path])
    assert code == 0
    assert (tmp_path / "profile.csv").exists()
    assert (tmp_path / "profile.svg").exists()


def test_escape_exit_codes(tmp_path):
    pts = [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    (tmp_path / "body.json").write_text(json.dumps({"vertices": pts}))
    (tmp_path / "ring.json").write_text(json.dumps(
        {"center": [0.5, 0.5, 0.5], "diameter": 1.8, "normal": [0, 0, 1]}))
    assert run(["escape", tmp_path / "body.json", tmp_path / "ring.json",
                "--budget", "20000"]) == 2

    held = tmp_path / "held"
    held.mkdir()
    construct(held, "skew-tetra", "--eps", "0.05")
    assert run(["escape", held / "body.json", held / "circle.json",
                "--budget", "5000"]) == 0


def test_chain_certificate(tmp_path, capsys):
    construct(tmp_path, "octahedron-iceberg", "--a", "1.2", "--h", "10")
    code = run(["chain", tmp_path / "body.json", tmp_path / "circle.json",
                "--theta-samples", "180"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ok" in out


def test_verify_suite_exit_codes(tmp_path):
    assert run(["verify-paper", "--suite", "tetra-width"]) == 0
    # the diameter limit of the spindle family misses its target tolerance,
    # and the suite reports that honestly
    assert run(["verify-paper", "--suite", "limits"]) == 1


def test_render_writes_figures(tmp_path):
    construct(tmp_path, "octahedron-iceberg", "--a", "1.2", "--h", "10")
    out = tmp_path / "fig"
    out.mkdir()
    code = run(["render", tmp_path / "body.json",
                "--circle", tmp_path / "circle.json",
                "--theta-samples", "90", "--out-dir", out])
    assert code == 0
    assert (out / "scene.obj").exists()
    assert (out / "profile.svg").exists()
    assert (out / "region.svg").exists()


def test_missing_file_is_usage_error(tmp_path, capsys):
    assert run(["analyze", tmp_path / "nope.json"]) == 1
    assert capsys.readouterr().err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    assert "circlehold" in capsys.readouterr().out
