import json

import pytest

from netelast import load_edge_list
from netelast.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_elasticity_star_flow_ratio(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "elasticity", "--generate", "star:5", "--attack", "degree",
        "--steps", "4", "--mode", "flow-ratio", "--outdir", str(tmp_path),
    )
    assert code == 0
    assert "area=10" in out and "E=0.125" in out
    curve = (tmp_path / "star-5_curve.csv").read_text()
    lines = curve.strip().splitlines()
    assert lines[0] == "percent_remaining,throughput"
    assert lines[1] == "100.000000,1.000000"
    assert lines[-1] == "20.000000,0.000000"
    payload = json.loads((tmp_path / "star-5_result.json").read_text())
    assert payload["elasticity"] == pytest.approx(0.125, rel=1e-12)
    assert payload["config"]["attack"] == "degree"
    assert payload["trials"] == 1


def test_elasticity_deterministic_outputs(tmp_path, capsys):
    dirs = [tmp_path / "a", tmp_path / "b"]
    for d in dirs:
        code, _, _ = run(
            capsys,
            "elasticity", "--generate", "ba:60:3:3", "--attack", "random-node",
            "--trials", "3", "--seed", "42", "--steps", "10",
            "--mode", "flow-ratio", "--outdir", str(d),
        )
        assert code == 0
    name_c, name_j = "ba-60-3-3_curve.csv", "ba-60-3-3_result.json"
    assert (dirs[0] / name_c).read_bytes() == (dirs[1] / name_c).read_bytes()
    assert (dirs[0] / name_j).read_bytes() == (dirs[1] / name_j).read_bytes()


def test_elasticity_missing_input(tmp_path, capsys):
    code, _, err = run(capsys, "elasticity", "--input", str(tmp_path / "missing.txt"))
    assert code != 0
    assert "error:" in err


def test_elasticity_from_file(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("0 1\n1 2\n")
    code, out, _ = run(
        capsys,
        "elasticity", "--input", str(path), "--attack", "degree",
        "--steps", "2", "--max-removal", "0.67", "--mode", "flow-ratio",
        "--outdir", str(tmp_path),
    )
    assert code == 0
    assert (tmp_path / "p3_result.json").exists()


def test_requires_exactly_one_source(capsys):
    with pytest.raises(SystemExit):
        main(["elasticity", "--generate", "star:5", "--input", "x.txt"])
    with pytest.raises(SystemExit):
        main(["elasticity"])


def test_spectral_wheel_json(capsys):
    code, out, _ = run(capsys, "spectral", "--generate", "wheel:6")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 6 and payload["m"] == 10
    assert payload["lambda2"] == pytest.approx(2.381966, abs=1e-4)
    assert "spectrum" not in payload


def test_spectral_full_spectrum_to_file(tmp_path, capsys):
    out_path = tmp_path / "spectrum.json"
    code, out, _ = run(
        capsys, "spectral", "--generate", "complete:5",
        "--full-spectrum", "--json-out", str(out_path),
    )
    assert code == 0
    assert "lambda2=5" in out
    payload = json.loads(out_path.read_text())
    assert payload["spectrum"] == pytest.approx([0, 5, 5, 5, 5], abs=1e-8)


def test_metrics_complete4(capsys):
    code, out, _ = run(capsys, "metrics", "--generate", "complete:4")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 4, "m": 6, "max_degree": 3, "avg_degree": 3.0, "r": "undefined"}


def test_metrics_star_r(capsys):
    code, out, _ = run(capsys, "metrics", "--generate", "star:6")
    payload = json.loads(out)
    assert payload["r"] == pytest.approx(-1.0, abs=1e-9)


def test_ndd_csv(capsys):
    code, out, _ = run(capsys, "ndd", "--generate", "star:5")
    assert code == 0
    assert out.splitlines() == [
        "degree,count,fraction",
        "1,4,0.800000",
        "4,1,0.200000",
    ]


def test_generate_round_trip(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "generate", "ba:200:3:3", "--seed", "7", "-o", str(path))
    assert code == 0
    from netelast import generate

    g = generate("scale_free_ba", (200, 3, 3), seed=7)
    again = load_edge_list(path.read_text())
    assert again.n == g.n and again.edges == g.edges


def test_generate_stdout(capsys):
    code, out, _ = run(capsys, "generate", "path:3")
    assert code == 0
    assert out == "0 1\n1 2\n"


def test_scatter_csv(tmp_path, capsys):
    out_path = tmp_path / "scatter.csv"
    code, _, _ = run(
        capsys,
        "scatter", "--generate", "star:12", "--generate", "grid:4:4",
        "--attack", "degree", "--steps", "10", "--mode", "flow-ratio",
        "--csv-out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "graph_label,r,E"
    assert len(lines) == 3
    assert lines[1].startswith("star-12_-1.000,-1.000000,")
    grid_label = lines[2].split(",")[0]
    assert grid_label.startswith("grid-4-4_")


def test_scatter_needs_a_graph(capsys):
    code, _, err = run(capsys, "scatter", "--attack", "degree")
    assert code == 1
    assert "error:" in err


def test_bad_generator_spec(capsys):
    code, _, err = run(capsys, "metrics", "--generate", "moebius:5")
    assert code == 1
    assert "error:" in err
