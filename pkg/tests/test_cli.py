import json

import numpy as np
import pytest

from boundent import csvio
from boundent.cli import main
from boundent.classify import Label
from boundent.sampling import VolumeConfig, volume_experiment
from boundent.scan import ScanConfig, grid_values, run_scan
from boundent.state import save_matrix_file


def _last_json(capsys):
    out = capsys.readouterr().out.strip().splitlines()
    return json.loads(out[-1])


def test_classify_reference_line(capsys):
    code = main(["classify", "--family", "line", "--alpha", "-0.092", "--beta", "0.04", "--gamma", "0.2148"])
    assert code == 0
    res = _last_json(capsys)
    assert res["label"] == "BoundEntangled"
    assert set(res) == {"label", "cqp", "negativity", "purity"}


def test_classify_matrix_file(tmp_path, capsys):
    path = tmp_path / "maxmixed.json"
    save_matrix_file(path, np.eye(9) / 9, 3, 3)
    assert main(["classify", "--matrix", str(path)]) == 0
    res = _last_json(capsys)
    assert res["label"] == "Undetected"
    assert res["purity"] == pytest.approx(1 / 9)


def test_classify_unphysical_exits_zero(capsys):
    assert main(["classify", "--family", "line", "--alpha", "2", "--beta", "0", "--gamma", "0"]) == 0
    assert _last_json(capsys)["label"] == "Unphysical"


def test_classify_unphysical_matrix(tmp_path, capsys):
    path = tmp_path / "neg.json"
    save_matrix_file(path, np.diag([0.6, -0.1, 0.5, 0]), 2, 2)
    assert main(["classify", "--matrix", str(path)]) == 0
    assert _last_json(capsys)["label"] == "Unphysical"


def test_classify_fraction_gamma(capsys):
    assert main(["classify", "--family", "beyond-line", "--gamma=-1/12"]) == 0
    assert _last_json(capsys)["label"] in {"Undetected", "BoundEntangled", "NptEntangled"}


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim_a": 1, "dim_b": 1, "entries": [[[1, "x"]]]}')
    assert main(["classify", "--matrix", str(bad)]) == 3
    assert "row 0, column 0" in capsys.readouterr().err
    assert main(["classify", "--matrix", str(tmp_path / "missing.json")]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["volume", "--output", str(tmp_path / "v.csv")])  # seed is mandatory
    assert exc.value.code == 1
    code = main(["scan", "--gamma", "0", "--alpha", "0", "0.1", "-1", "--beta", "0", "0", "1",
                 "--output", str(tmp_path / "s.csv")])
    assert code == 1
    code = main(["scan", "--gamma", "0", "--alpha", "0", "0", "1", "--beta", "0", "0", "1",
                 "--output", str(tmp_path / "no" / "dir" / "s.csv")])
    assert code == 3
    code = main(["volume", "--seed", "1", "--eps", "0", "--samples", "1", "--base", "0", "0", "0",
                 "--output", str(tmp_path / "v.csv")])
    assert code == 1


def test_scan_single_cell(tmp_path):
    out = tmp_path / "one.csv"
    assert main(["scan", "--gamma", "0", "--alpha", "0", "0", "0.1", "--beta", "0", "0", "0.1",
                 "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "alpha,beta,gamma,family,label,cqp,negativity,purity"
    assert len(lines) == 2
    assert lines[1].split(",")[4] == "Undetected"


def test_grid_includes_stop():
    assert len(grid_values(0.0, 0.3, 0.002)) == 151
    assert len(grid_values(-0.5, 1.1, 0.01)) == 161
    assert len(grid_values(0.0, 0.25, 0.1)) == 3
    assert grid_values(0.0, 0.3, 0.002)[-1] == pytest.approx(0.3)


def test_scan_cell_count_and_order(tmp_path):
    out = tmp_path / "grid.csv"
    main(["scan", "--gamma", "0", "--alpha", "0", "0.3", "0.05", "--beta", "-0.2", "0.4", "0.1",
          "--output", str(out), "--overlay-curves"])
    cells = csvio.read_scan(out)
    assert len(cells) == 7 * 7
    assert [(c.alpha, c.beta) for c in cells] == sorted((c.alpha, c.beta) for c in cells)
    curves = csvio.read_curves(tmp_path / "grid.curves.csv")
    assert len(curves) == 7
    assert curves[0][1:] == pytest.approx((0.25, 1.0, -0.5, 0.25))
    assert curves[-1][1] is None  # alpha = 0.3 misses the ellipse


def test_curves_command(tmp_path):
    out = tmp_path / "c.csv"
    assert main(["curves", "--gamma=-1/12", "--alpha", "0", "0.3", "0.01", "--output", str(out)]) == 0
    text = out.read_text().splitlines()
    assert text[0] == "alpha,beta_ent_lo,beta_ent_hi,beta_ppt_lo,beta_ppt_hi"
    assert len(text) == 32
    assert text[1].split(",")[1] == ""  # no ellipse root at alpha = 0 for this gamma


def test_scan_csv_round_trip(tmp_path):
    cfg = ScanConfig("Line", 0.0, (-0.3, 0.5, 0.1), (-0.3, 0.5, 0.1))
    cells = run_scan(cfg)
    path = tmp_path / "rt.csv"
    csvio.write_scan(path, cells)
    back = csvio.read_scan(path)
    assert len(back) == len(cells)
    for a, b in zip(cells, back):
        assert (a.alpha, a.beta, a.gamma, a.family, a.result.tag) == (b.alpha, b.beta, b.gamma, b.family, b.result.tag)
        for x, y in ((a.result.cqp_value, b.result.cqp_value), (a.result.negativity, b.result.negativity)):
            assert x == y or (np.isnan(x) and np.isnan(y))
    assert any(c.result.tag is Label.UNPHYSICAL for c in back)


def test_volume_csv_round_trip(tmp_path):
    recs = volume_experiment(VolumeConfig(seed=4, eps_values=(0.0, 0.3, 1.0), samples_per_eps=10))
    path = tmp_path / "v.csv"
    csvio.write_volume(path, recs)
    assert csvio.read_volume(path) == recs


def test_volume_command(tmp_path, capsys):
    out = tmp_path / "vol.csv"
    assert main(["volume", "--seed", "1", "--eps", "0", "--eps", "0.005,1", "--samples", "20",
                 "--bins", "5", "--output", str(out)]) == 0
    stdout = capsys.readouterr().out.splitlines()
    assert stdout[0] == "eps,n,frac_ppt,frac_bound"
    summary = (tmp_path / "vol.summary.csv").read_text().splitlines()
    first = summary[1].split(",")
    assert float(first[0]) == 0.0 and float(first[3]) == 1.0
    assert len(out.read_text().splitlines()) == 1 + 60
    assert len((tmp_path / "vol.hist.csv").read_text().splitlines()) == 1 + 2 * 3 * 5


def test_scan_threads_byte_identical(tmp_path):
    args = ["scan", "--family", "beyond-line", "--gamma=-1/12", "--alpha", "-0.2", "0.4", "0.02",
            "--beta", "-0.2", "0.4", "0.02"]
    main(args + ["--output", str(tmp_path / "a.csv"), "--threads", "1"])
    main(args + ["--output", str(tmp_path / "b.csv"), "--threads", "4"])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
