import json
from pathlib import Path

import numpy as np
import pytest

from wellsep.cli import main
from wellsep.mmio import read_csv_table, read_matrix_market, write_matrix_market

FIX = Path(__file__).parent / "fixtures"


def _rows(path):
    return read_csv_table(str(path))


def test_discs_diag(tmp_path, capsys):
    assert main(["discs", str(FIX / "diag2.mtx")]) == 0
    meta, header, rows = read_csv_table(capsys.readouterr().out)
    assert header[:3] == ["index", "center_re", "center_im"]
    assert [r[3] for r in rows] == [0, 0]
    assert meta["radius_mode"] == "row" and meta["config"]["command"] == "discs"


def test_parse_error_exit(tmp_path, capsys):
    assert main(["discs", str(FIX / "bad_value.mtx")]) == 2
    assert "line 4" in capsys.readouterr().err


def test_missing_file_exit():
    assert main(["discs", "/nonexistent/file.mtx"]) == 2


def _generated(tmp_path, *extra):
    path = tmp_path / "a.mtx"
    assert main(["generate", "--family", "sep-sym", "--n", "30", "--out", str(path), *extra]) == 0
    return path


@pytest.mark.parametrize("c", ["0", "1", "0.5"])
def test_bounds(tmp_path, c):
    path = _generated(tmp_path)
    out = tmp_path / "b.csv"
    assert main(["bounds", str(path), "--truncate", c, "--out", str(out)]) == 0
    meta, header, rows = _rows(out)
    assert header == ["eig_index", "lambda_re", "lambda_im", "rel_error", "bound",
                      "approx_center_shifted"]
    assert len(rows) == 30
    assert all(r[3] <= r[4] for r in rows)
    if c == "1":
        assert all(r[3] == 0 for r in rows)
    if c == "0":
        a = read_matrix_market(path).entries
        diag = np.sort(np.diag(a))
        lam = np.array([r[1] for r in rows])
        np.testing.assert_allclose([r[3] for r in rows], np.abs(lam - diag) / np.abs(lam),
                                   rtol=1e-12)


def test_bounds_eigvec_trend(tmp_path):
    path = _generated(tmp_path)
    trend = tmp_path / "t.json"
    assert main(["bounds", str(path), "--eigvec-trend", str(trend), "--format", "json",
                 "--out", str(tmp_path / "b.json")]) == 0
    doc = json.loads(trend.read_text())
    assert [c["name"] for c in doc["columns"]] == ["entry_index", "abs_entry", "trend_value"]
    assert len(doc["rows"]) == 30


def test_interlace(tmp_path, capsys):
    assert main(["interlace", "--n", "20", "--t", "0", "--trials", "3"]) == 0
    meta, _, rows = read_csv_table(capsys.readouterr().out)
    assert meta["all_interlaced"] and all(r[3] == "true" for r in rows)


def test_interlace_rejects_negative_t():
    with pytest.raises(SystemExit) as info:
        main(["interlace", "--t", "-1"])
    assert info.value.code == 2


def test_condition_generated(tmp_path):
    out = tmp_path / "c.csv"
    assert main(["condition", "--n", "20", "--trials", "3", "--family", "hessenberg",
                 "--out", str(out)]) == 0
    _, header, rows = _rows(out)
    k = header.index("kappa_computed")
    b = header.index("kappa_bound")
    assert all(r[-1] == "ok" and r[k] <= r[b] for r in rows)


def test_condition_diagonal(tmp_path, capsys):
    path = tmp_path / "d.mtx"
    write_matrix_market(np.diag([10.0, 20.0, 30.0]), path)
    assert main(["condition", "--matrix", str(path)]) == 0
    _, header, rows = read_csv_table(capsys.readouterr().out)
    assert rows[0][header.index("k_est")] == 0
    assert rows[0][header.index("kappa_computed")] == pytest.approx(1, abs=1e-12)


def test_condition_invalid_regime(tmp_path, capsys):
    path = tmp_path / "m.mtx"
    rng = np.random.default_rng(0)
    write_matrix_market(rng.standard_normal((4, 4)), path)
    assert main(["condition", "--matrix", str(path)]) == 0
    _, header, rows = read_csv_table(capsys.readouterr().out)
    assert rows[0][-1] == "InvalidRegime"


def test_perron(tmp_path, capsys):
    out = tmp_path / "p.csv"
    assert main(["perron", "--n", "20", "--trials", "2", "--out", str(out)]) == 0
    meta, header, rows = _rows(out)
    assert header == ["trial", "start_kind", "iteration", "residual"]
    assert {r[1] for r in rows} == {"random", "diagonal_seeded"}
    assert "mean_saving" in meta["summary"]
    assert "saving" in capsys.readouterr().err


def test_perron_shift_collision(capsys):
    assert main(["perron", "--n", "5", "--trials", "1", "--K", "3"]) == 4


@pytest.mark.parametrize("family", ["sep-sym", "hessenberg", "perron", "S"])
def test_generate(tmp_path, family):
    path = tmp_path / "g.mtx"
    assert main(["generate", "--family", family, "--n", "6", "--out", str(path)]) == 0
    assert read_matrix_market(path).n == 6


def test_deterministic_output(tmp_path):
    path = _generated(tmp_path)
    outs = []
    for _ in range(2):
        main(["bounds", str(path), "--out", str(tmp_path / "same.csv")])
        outs.append((tmp_path / "same.csv").read_bytes())
    assert outs[0] == outs[1]
