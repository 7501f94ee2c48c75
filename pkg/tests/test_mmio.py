from pathlib import Path

import numpy as np
import pytest

from wellsep.errors import DimensionMismatch, ParseError, TableIOError, UnsupportedField
from wellsep.mmio import (
    ResultTable, format_matrix_market, parse_matrix_market, read_csv_table, read_matrix_market,
    write_matrix_market, write_table,
)
from wellsep.perturb import gen_hessenberg_positive, gen_separated_symmetric

FIX = Path(__file__).parent / "fixtures"


class TestRead:
    def test_coordinate_diagonal(self):
        m = read_matrix_market(FIX / "diag2.mtx")
        np.testing.assert_array_equal(m.entries, np.diag([5.0, 7.0]))

    def test_symmetric_mirrored(self):
        m = read_matrix_market(FIX / "sym_coord.mtx")
        assert m.entries[0, 1] == 3 and m.entries[1, 0] == 3
        assert m.symmetry == "symmetric"

    def test_array_column_major(self):
        m = read_matrix_market(FIX / "array_general.mtx")
        np.testing.assert_array_equal(m.entries, [[1, 2], [3, 4]])

    def test_skew(self):
        a = read_matrix_market(FIX / "skew_coord.mtx").entries
        np.testing.assert_array_equal(a, [[0, -2, 0], [2, 0, 5], [0, -5, 0]])

    def test_hermitian(self):
        a = read_matrix_market(FIX / "herm_coord.mtx").entries
        assert a[1, 0] == 1 + 1j and a[0, 1] == 1 - 1j

    def test_duplicates_summed(self):
        assert read_matrix_market(FIX / "dup_coord.mtx").entries[0, 0] == 4.0

    def test_count_mismatch(self):
        with pytest.raises(DimensionMismatch):
            read_matrix_market(FIX / "bad_count.mtx")

    def test_bad_value_line_number(self):
        with pytest.raises(ParseError) as info:
            read_matrix_market(FIX / "bad_value.mtx")
        assert info.value.line == 4

    def test_pattern_rejected(self):
        with pytest.raises(UnsupportedField):
            read_matrix_market(FIX / "pattern.mtx")

    @pytest.mark.parametrize("text", [
        "", "%%MatrixMarket matrix coordinate real\n1 1 0\n",
        "%%MatrixMarket vector coordinate real general\n1 1 0\n",
        "%%MatrixMarket matrix coordinate real general\n2 3 0\n",
        "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n",
        "%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n1 2 1.0\n",
        "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
        "not a banner\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_matrix_market(text)

    def test_symmetric_array_lower_triangle(self):
        text = "%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n"
        _, a = parse_matrix_market(text)
        np.testing.assert_array_equal(a, [[1, 2], [2, 3]])

    def test_missing_file(self, tmp_path):
        with pytest.raises(TableIOError):
            read_matrix_market(tmp_path / "nope.mtx")


class TestRoundTrip:
    @pytest.mark.parametrize("fmt", ["array", "coordinate"])
    def test_generated_bit_identical(self, tmp_path, fmt):
        a = gen_hessenberg_positive(9, 4)
        path = tmp_path / "h.mtx"
        write_matrix_market(a, path, fmt)
        assert read_matrix_market(path).entries.tobytes() == a.entries.tobytes()

    def test_symmetric_fidelity(self, tmp_path):
        a = gen_separated_symmetric(7, "linear", 2)
        path = tmp_path / "s.mtx"
        write_matrix_market(a, path)
        back = read_matrix_market(path)
        assert np.array_equal(back.entries, back.entries.T)

    def test_complex(self):
        a = np.array([[1 + 2j, 0.1], [3, -1j]])
        _, b = parse_matrix_market(format_matrix_market(a))
        np.testing.assert_array_equal(a, b)


def _table(rows=()):
    return ResultTable("demo", [("i", "index"), ("x", "real"), ("z", "complex"), ("s", "string")],
                       list(rows), {"seed": 1, "radius_mode": "row"})


class TestTables:
    def test_header_only(self):
        text = write_table(_table())
        lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
        assert lines == ["i,x,z_re,z_im,s"]
        assert "# seed: 1" in text

    def test_round_trip_17_digits(self, tmp_path):
        rng = np.random.default_rng(0)
        xs = rng.standard_normal(20) * 10.0 ** rng.integers(-20, 20, 20)
        t = _table((i, float(x), complex(x, -x / 3), "a,b") for i, x in enumerate(xs))
        path = tmp_path / "t.csv"
        write_table(t, "csv", path)
        meta, header, rows = read_csv_table(path)
        assert meta["schema"] == "demo" and header == ["i", "x", "z_re", "z_im", "s"]
        assert [r[1] for r in rows] == list(xs)
        assert [r[3] for r in rows] == list(-xs / 3)
        assert rows[0][4] == "a,b"

    def test_json(self, tmp_path):
        import json
        path = tmp_path / "t.json"
        write_table(_table([(0, 1.5, 2j, "x")]), "json", path)
        doc = json.loads(path.read_text())
        assert set(doc) == {"metadata", "columns", "rows"}
        assert doc["rows"] == [[0, 1.5, 0.0, 2.0, "x"]]

    def test_type_checked(self):
        with pytest.raises(TypeError):
            _table([(0.5, 1.0, 0j, "s")])
        with pytest.raises(ValueError):
            _table([(0, 1.0)])
        with pytest.raises(ValueError):
            ResultTable("bad", [("x", "quaternion")])

    def test_io_error(self, tmp_path):
        with pytest.raises(TableIOError):
            write_table(_table(), "csv", tmp_path / "missing" / "t.csv")
