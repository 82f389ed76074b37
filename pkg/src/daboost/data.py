"""Dataset ingestion, the majority-vote toy generator, and splitting."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .core import Dataset, InvalidInputError


class SchemaError(InvalidInputError):
    pass


class ParseError(InvalidInputError):
    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        where = []
        if row is not None:
            where.append(f"line {row}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.row = row
        self.column = column


@dataclass(frozen=True)
class CsvSchema:
    positive_label: str
    label_column: Union[int, str] = "last"
    delimiter: str = ","
    has_header: bool = False

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise SchemaError("delimiter must be a single character")
        if not (self.label_column == "last" or isinstance(self.label_column, int)):
            raise SchemaError(f"label_column must be an int or 'last', got {self.label_column!r}")


def _to_float(token: str) -> Optional[float]:
    try:
        v = float(token)
    except ValueError:
        return None
    return v if math.isfinite(v) else None


def load_csv(path, schema: CsvSchema) -> Dataset:
    """Read a delimited file into a Dataset.

    A feature column whose first value is non-numeric is treated as
    categorical and integer-coded in order of first appearance; any later
    non-numeric value in a numeric column is a parse error.
    """
    with open(path, newline="") as fh:
        rows = [(i, r) for i, r in enumerate(csv.reader(fh, delimiter=schema.delimiter), 1)]
    rows = [(i, [t.strip() for t in r]) for i, r in rows if any(t.strip() for t in r)]
    if schema.has_header and rows:
        rows = rows[1:]
    if not rows:
        raise InvalidInputError(f"{path}: no data rows")

    width = len(rows[0][1])
    if width < 2:
        raise SchemaError("need at least one feature column and a label column")
    label_col = width - 1 if schema.label_column == "last" else schema.label_column
    if label_col < 0:
        label_col += width
    if not 0 <= label_col < width:
        raise SchemaError(f"label column {schema.label_column!r} out of range for {width} columns")
    feature_cols = [c for c in range(width) if c != label_col]

    first = rows[0][1]
    codes = {c: {} for c in feature_cols if _to_float(first[c]) is None}
    X = np.empty((len(rows), len(feature_cols)))
    raw_labels = []
    for r, (lineno, row) in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"expected {width} fields, found {len(row)}", lineno)
        for j, c in enumerate(feature_cols):
            tok = row[c]
            if c in codes:
                X[r, j] = codes[c].setdefault(tok, len(codes[c]))
            else:
                v = _to_float(tok)
                if v is None:
                    raise ParseError(f"non-numeric value {tok!r}", lineno, c + 1)
                X[r, j] = v
        raw_labels.append(row[label_col])

    tokens = list(dict.fromkeys(raw_labels))
    if len(tokens) > 2:
        raise SchemaError(f"expected two label values, found {len(tokens)}: {tokens[:5]}")
    if schema.positive_label not in tokens and len(tokens) == 2:
        raise SchemaError(f"positive label {schema.positive_label!r} not among {tokens}")
    y = np.array([1 if t == schema.positive_label else -1 for t in raw_labels])
    return Dataset(X, y)


def save_csv(data: Dataset, path, delimiter: str = ",") -> None:
    """Write features then a +1/-1 label column; reload with positive_label='1'."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        for x, label in zip(data.features, data.labels):
            w.writerow([repr(float(v)) for v in x] + [str(int(label))])


_LIBSVM_LABELS = {"+1": 1, "1": 1, "-1": -1, "0": -1}


def _libsvm_label(token: str, lineno: int) -> int:
    if token in _LIBSVM_LABELS:
        return _LIBSVM_LABELS[token]
    v = _to_float(token)
    if v in (1.0, -1.0, 0.0):
        return 1 if v == 1.0 else -1
    raise ParseError(f"label {token!r} not in {{+1, -1, 1, 0}}", lineno)


def load_libsvm(path, n_features: Optional[int] = None) -> Dataset:
    """Read "<label> <idx>:<val> ..." lines (1-based indices) into a dense Dataset.

    ``n_features`` pads the result to a fixed width, e.g. to align a test
    file with its training file.
    """
    labels, entries = [], []
    max_idx = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            labels.append(_libsvm_label(parts[0], lineno))
            row = {}
            for item in parts[1:]:
                idx_s, sep, val_s = item.partition(":")
                if not sep:
                    raise ParseError(f"expected index:value, got {item!r}", lineno)
                try:
                    idx = int(idx_s)
                except ValueError:
                    raise ParseError(f"bad feature index {idx_s!r}", lineno) from None
                val = _to_float(val_s)
                if idx < 1 or val is None:
                    raise ParseError(f"bad entry {item!r}", lineno)
                row[idx] = val
                max_idx = max(max_idx, idx)
            entries.append(row)
    if not labels:
        raise InvalidInputError(f"{path}: no data rows")
    dim = max_idx if n_features is None else n_features
    if dim < max_idx:
        raise InvalidInputError(f"file uses feature {max_idx} but n_features={n_features}")
    if dim == 0:
        raise InvalidInputError(f"{path}: no features")
    X = np.zeros((len(labels), dim))
    for r, row in enumerate(entries):
        for idx, val in row.items():
            X[r, idx - 1] = val
    return Dataset(X, np.array(labels))


def save_libsvm(data: Dataset, path) -> None:
    """Write sparse lines; the last feature is always emitted so dim survives reload."""
    with open(path, "w") as fh:
        for x, label in zip(data.features, data.labels):
            items = [f"{j + 1}:{float(v)!r}" for j, v in enumerate(x) if v != 0]
            if x[-1] == 0:
                items.append(f"{data.dim}:0.0")
            fh.write(" ".join(["+1" if label == 1 else "-1"] + items) + "\n")


def generate_majority_toy(n: int = 1000, dim: int = 100, seed: int = 0) -> Dataset:
    """x ~ U[-1, 1]^dim, y = majority sign of the first three coordinates."""
    if dim < 3:
        raise InvalidInputError(f"dim must be >= 3, got {dim}")
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    X = rng.uniform(-1.0, 1.0, size=(n, dim))
    votes = np.where(X[:, :3] >= 0, 1, -1).sum(axis=1)
    return Dataset(X, np.where(votes >= 0, 1, -1))


def train_test_split(data: Dataset, test_fraction: float, seed: int = 0) -> tuple[Dataset, Dataset]:
    if not 0 < test_fraction < 1:
        raise InvalidInputError(f"test_fraction must be in (0, 1), got {test_fraction}")
    n_test = int(math.floor(data.n * test_fraction + 0.5))
    if n_test == 0 or n_test == data.n:
        raise InvalidInputError(
            f"test_fraction {test_fraction} leaves an empty side for n={data.n}"
        )
    perm = np.random.default_rng(seed).permutation(data.n)
    return data.subset(perm[n_test:]), data.subset(perm[:n_test])


def load_dataset(path, fmt: str = "csv", schema: Optional[CsvSchema] = None) -> Dataset:
    if fmt == "csv":
        if schema is None:
            raise InvalidInputError("csv format needs a CsvSchema")
        return load_csv(path, schema)
    if fmt == "libsvm":
        return load_libsvm(path)
    raise InvalidInputError(f"unknown format {fmt!r}")
