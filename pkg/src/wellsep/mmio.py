"""Matrix Market reading/writing and CSV/JSON result tables."""

from dataclasses import dataclass, field
import csv
import hashlib
import io
import json
import math

import numpy as np

from .errors import DimensionMismatch, ParseError, TableIOError, UnsupportedField
from .matrix import DenseMatrix, as_array

FORMATS = ("coordinate", "array")
FIELDS = ("real", "complex", "integer", "pattern")
SYMMETRIES = ("general", "symmetric", "skew-symmetric", "hermitian")


@dataclass(frozen=True)
class MatrixMarketHeader:
    object: str
    format: str
    field: str
    symmetry: str


def parse_header(line, lineno=1):
    tokens = line.strip().split()
    if not tokens or tokens[0] != "%%MatrixMarket":
        raise ParseError("missing '%%MatrixMarket' banner", lineno)
    if len(tokens) != 5:
        raise ParseError("banner needs: %%MatrixMarket object format field symmetry", lineno)
    obj, fmt, fld, sym = (t.lower() for t in tokens[1:])
    if obj != "matrix":
        raise ParseError(f"unsupported object {obj!r}", lineno)
    if fmt not in FORMATS:
        raise ParseError(f"unknown format {fmt!r}", lineno)
    if fld not in FIELDS:
        raise ParseError(f"unknown field {fld!r}", lineno)
    if fld == "pattern":
        raise UnsupportedField("pattern matrices carry no values", lineno)
    if sym not in SYMMETRIES:
        raise ParseError(f"unknown symmetry {sym!r}", lineno)
    if fmt == "array" and sym == "hermitian" and fld != "complex":
        raise ParseError("hermitian symmetry requires a complex field", lineno)
    return MatrixMarketHeader(obj, fmt, fld, sym)


def _value(tokens, fld, lineno):
    try:
        if fld == "complex":
            if len(tokens) != 2:
                raise ParseError("complex entry needs two numbers", lineno)
            return complex(float(tokens[0]), float(tokens[1]))
        if len(tokens) != 1:
            raise ParseError("expected exactly one value", lineno)
        return int(tokens[0]) if fld == "integer" else float(tokens[0])
    except ValueError as exc:
        raise ParseError(f"bad number: {exc}", lineno) from None


def _mirror(sym, v):
    if sym == "symmetric":
        return v
    if sym == "skew-symmetric":
        return -v
    return np.conj(v)


def parse_matrix_market(text):
    """Parse Matrix Market text into a dense ``(header, ndarray)``."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    header = parse_header(lines[0], 1)
    body = [(i + 1, ln) for i, ln in enumerate(lines[1:], start=1)
            if ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise ParseError("missing size line", len(lines))
    size_no, size_line = body[0]
    try:
        dims = [int(t) for t in size_line.split()]
    except ValueError:
        raise ParseError("size line must contain integers", size_no) from None
    expect = 3 if header.format == "coordinate" else 2
    if len(dims) != expect:
        raise ParseError(f"size line needs {expect} integers", size_no)
    nrows, ncols = dims[:2]
    if nrows <= 0 or ncols <= 0:
        raise DimensionMismatch("dimensions must be positive", size_no)
    if nrows != ncols:
        raise DimensionMismatch(f"matrix is {nrows}x{ncols}, not square", size_no)

    dtype = complex if header.field == "complex" else float
    a = np.zeros((nrows, ncols), dtype=dtype)
    entries = body[1:]
    sym = header.symmetry

    if header.format == "coordinate":
        nnz = dims[2]
        if len(entries) != nnz:
            last = entries[-1][0] if entries else size_no
            raise DimensionMismatch(f"declared {nnz} entries, found {len(entries)}", last)
        for lineno, ln in entries:
            tokens = ln.split()
            if len(tokens) < 3:
                raise ParseError("entry needs row, column and value", lineno)
            try:
                i, j = int(tokens[0]) - 1, int(tokens[1]) - 1
            except ValueError:
                raise ParseError("indices must be integers", lineno) from None
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionMismatch(f"index ({i + 1}, {j + 1}) out of range", lineno)
            v = _value(tokens[2:], header.field, lineno)
            if sym != "general" and j > i:
                raise ParseError("symmetric storage expects lower-triangle entries", lineno)
            if sym == "skew-symmetric" and i == j:
                raise ParseError("skew-symmetric storage has no diagonal entries", lineno)
            a[i, j] += v
            if sym != "general" and i != j:
                a[j, i] += _mirror(sym, v)
    else:
        # column-major; symmetric variants store the lower triangle only
        if sym == "general":
            positions = [(i, j) for j in range(ncols) for i in range(nrows)]
        elif sym == "skew-symmetric":
            positions = [(i, j) for j in range(ncols) for i in range(j + 1, nrows)]
        else:
            positions = [(i, j) for j in range(ncols) for i in range(j, nrows)]
        if len(entries) != len(positions):
            last = entries[-1][0] if entries else size_no
            raise DimensionMismatch(
                f"array body has {len(entries)} values, expected {len(positions)}", last)
        for (i, j), (lineno, ln) in zip(positions, entries):
            v = _value(ln.split(), header.field, lineno)
            a[i, j] = v
            if sym != "general" and i != j:
                a[j, i] = _mirror(sym, v)

    if not np.iscomplexobj(a) or not np.any(a.imag):
        a = a.real.astype(float) if np.iscomplexobj(a) else a
    return header, a


def read_matrix_market(path):
    """Read a Matrix Market file into a :class:`DenseMatrix`."""
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            text = fh.read()
    except OSError as exc:
        raise TableIOError(str(exc)) from exc
    header, a = parse_matrix_market(text)
    exact = np.array_equal(a, a.T)
    tag = "symmetric" if header.symmetry in ("symmetric", "hermitian") and exact else "general"
    return DenseMatrix(a, tag)


def _fmt_real(x):
    return repr(float(x)) if math.isfinite(x) else str(float(x))


def format_matrix_market(A, fmt="array"):
    """Matrix Market text for ``A`` (general symmetry, full precision)."""
    a = as_array(A)
    n = a.shape[0]
    fld = "complex" if np.iscomplexobj(a) else "real"

    def val(v):
        if fld == "complex":
            return f"{_fmt_real(v.real)} {_fmt_real(v.imag)}"
        return _fmt_real(v)

    out = [f"%%MatrixMarket matrix {fmt} {fld} general"]
    if fmt == "array":
        out.append(f"{n} {n}")
        out.extend(val(a[i, j]) for j in range(n) for i in range(n))
    elif fmt == "coordinate":
        nz = [(i, j) for j in range(n) for i in range(n) if a[i, j] != 0]
        out.append(f"{n} {n} {len(nz)}")
        out.extend(f"{i + 1} {j + 1} {val(a[i, j])}" for i, j in nz)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(out) + "\n"


def write_matrix_market(A, path, fmt="array"):
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(format_matrix_market(A, fmt))
    except OSError as exc:
        raise TableIOError(str(exc)) from exc


def content_hash(data):
    """sha256 hex digest of bytes or of an array's raw buffer."""
    if isinstance(data, (bytes, bytearray)):
        return hashlib.sha256(data).hexdigest()
    arr = np.ascontiguousarray(as_array(data))
    return hashlib.sha256(arr.dtype.str.encode() + arr.tobytes()).hexdigest()


COLUMN_TYPES = ("index", "real", "complex", "string")


@dataclass
class ResultTable:
    """Homogeneous records plus run metadata.

    ``columns`` is a list of ``(name, type)`` with type one of
    ``index``, ``real``, ``complex`` or ``string``; ``rows`` are tuples in
    column order. Complex columns are written as ``<name>_re``/``<name>_im``.
    """

    schema_name: str
    columns: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for name, kind in self.columns:
            if kind not in COLUMN_TYPES:
                raise ValueError(f"column {name!r} has unknown type {kind!r}")
        for row in self.rows:
            self.validate_row(row)

    def validate_row(self, row):
        if len(row) != len(self.columns):
            raise ValueError(f"row {row!r} has {len(row)} values, expected {len(self.columns)}")
        for (name, kind), v in zip(self.columns, row):
            ok = {
                "index": lambda x: isinstance(x, (int, np.integer)) and not isinstance(x, bool),
                "real": lambda x: isinstance(x, (int, float, np.integer, np.floating))
                and not isinstance(x, bool),
                "complex": lambda x: isinstance(x, (int, float, complex, np.number)),
                "string": lambda x: isinstance(x, str),
            }[kind](v)
            if not ok:
                raise TypeError(f"column {name!r} expects {kind}, got {v!r}")

    def append(self, *row):
        self.validate_row(row)
        self.rows.append(tuple(row))

    @property
    def flat_columns(self):
        names = []
        for name, kind in self.columns:
            if kind == "complex":
                names += [f"{name}_re", f"{name}_im"]
            else:
                names.append(name)
        return names

    def flat_rows(self):
        for row in self.rows:
            flat = []
            for (_, kind), v in zip(self.columns, row):
                if kind == "complex":
                    v = complex(v)
                    flat += [float(v.real), float(v.imag)]
                elif kind == "index":
                    flat.append(int(v))
                elif kind == "real":
                    flat.append(float(v))
                else:
                    flat.append(v)
            yield flat


def _csv_cell(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def table_to_csv(table):
    buf = io.StringIO()
    meta = dict(table.metadata, schema=table.schema_name)
    for key in sorted(meta):
        buf.write(f"# {key}: {json.dumps(meta[key], sort_keys=True, default=str)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.flat_columns)
    for row in table.flat_rows():
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def table_to_json(table):
    doc = {
        "metadata": dict(table.metadata, schema=table.schema_name),
        "columns": [{"name": n, "type": t} for n, t in table.columns],
        "rows": [[_json_safe(v) for v in row] for row in table.flat_rows()],
    }
    return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"


def write_table(table, fmt="csv", path=None):
    """Write ``table`` as CSV or JSON to ``path`` (or return the text when
    ``path`` is None)."""
    if fmt == "csv":
        text = table_to_csv(table)
    elif fmt == "json":
        text = table_to_json(table)
    else:
        raise ValueError(f"unknown table format {fmt!r}")
    if path is None:
        return text
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise TableIOError(str(exc)) from exc
    return None


def read_csv_table(source):
    """Parse CSV written by :func:`write_table` into ``(metadata, header, rows)``.

    Numeric-looking cells become floats; everything else stays a string.
    ``source`` is a path or the CSV text itself.
    """
    if isinstance(source, str) and "\n" in source:
        text = source
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    meta = {}
    body = []
    for line in text.splitlines(keepends=True):
        if line.startswith("# ") and not body:
            key, _, val = line[2:].rstrip("\n").partition(": ")
            meta[key] = json.loads(val)
        else:
            body.append(line)
    reader = csv.reader(io.StringIO("".join(body)))
    header = next(reader)
    rows = []
    for rec in reader:
        parsed = []
        for cell in rec:
            try:
                parsed.append(float(cell))
            except ValueError:
                parsed.append(cell)
        rows.append(parsed)
    return meta, header, rows
