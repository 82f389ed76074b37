"""Error metrics, the product-of-normalizers training bound, and curve tables."""

from __future__ import annotations

import csv
import io
from typing import Optional, Sequence

import numpy as np

from .core import Dataset, Ensemble, RoundRecord, sign_label

COLUMNS = ("round", "epsilon", "step", "z", "train_error", "test_error", "exp_loss", "bound")


def zero_one_error(ensemble: Ensemble, data: Dataset) -> float:
    return float(np.mean(sign_label(ensemble.scores(data.features)) != data.labels))


def running_bound(records: Sequence[RoundRecord]) -> list[Optional[float]]:
    """Cumulative product of Z_t; None from the first round without a normalizer."""
    out, prod = [], 1.0
    for rec in records:
        if rec.z is None or prod is None:
            prod = None
        else:
            prod *= rec.z
        out.append(prod)
    return out


def loss_bound(records: Sequence[RoundRecord]) -> float:
    """prod_t Z_t, an upper bound on the training zero-one error after the last round."""
    if any(r.z is None for r in records):
        raise ValueError("loss_bound needs records with a normalizer (AdaBoost-style runs)")
    return float(np.prod([r.z for r in records])) if records else 1.0


def curve_table(records: Sequence[RoundRecord]) -> list[dict]:
    if not records:
        raise ValueError("no records")
    rows = []
    for rec, bound in zip(records, running_bound(records)):
        rows.append(
            {
                "round": rec.round,
                "epsilon": rec.epsilon,
                "step": rec.step,
                "z": rec.z,
                "train_error": rec.train_error,
                "test_error": rec.test_error,
                "exp_loss": rec.exp_loss,
                "bound": bound,
            }
        )
    return rows


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_table(rows: Sequence[dict], fh, columns: Sequence[str] = COLUMNS) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_cell(row.get(c)) for c in columns])


def table_to_csv(rows: Sequence[dict], columns: Sequence[str] = COLUMNS) -> str:
    buf = io.StringIO()
    write_table(rows, buf, columns)
    return buf.getvalue()
