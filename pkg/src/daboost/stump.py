"""Weighted decision stumps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Dataset, Distribution, InvalidInputError, _check_sizes, weighted_error

# candidates whose error is within this of the minimum count as tied, so
# summation-order noise never decides between them
TIE_TOL = 1e-12

SENTINEL = -np.inf


@dataclass(frozen=True)
class Stump:
    """Predicts ``polarity`` when x[feature_index] <= threshold, else -polarity."""

    feature_index: int
    threshold: float
    polarity: int

    def predict(self, features) -> int:
        x = np.asarray(features, dtype=float)
        if not 0 <= self.feature_index < x.size:
            raise InvalidInputError(
                f"stump reads feature {self.feature_index} of a {x.size}-vector"
            )
        return self.polarity if x[self.feature_index] <= self.threshold else -self.polarity

    def predict_many(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if not 0 <= self.feature_index < X.shape[1]:
            raise InvalidInputError(
                f"stump reads feature {self.feature_index} of {X.shape[1]} columns"
            )
        side = np.where(X[:, self.feature_index] <= self.threshold, 1, -1)
        return (self.polarity * side).astype(np.int8)

    def flipped(self) -> "Stump":
        return Stump(self.feature_index, self.threshold, -self.polarity)


def select_candidate(features, thresholds, polarities, errors, tol=TIE_TOL) -> int:
    """Index of the best candidate under the deterministic tie-break.

    Among candidates within ``tol`` of the smallest error, prefer the lowest
    feature index, then the smallest threshold, then polarity +1.
    """
    errors = np.asarray(errors)
    tied = np.flatnonzero(errors <= errors.min() + tol)
    keys = np.lexsort(
        (-np.asarray(polarities)[tied], np.asarray(thresholds)[tied], np.asarray(features)[tied])
    )
    return int(tied[keys[0]])


def train_stump(data: Dataset, d: Distribution) -> tuple[Stump, float]:
    """Exhaustive weighted stump search in O(dim * n log n).

    Thresholds are midpoints between consecutive distinct values of each
    feature, plus a -inf sentinel (constant prediction). The returned error
    is recomputed directly from the chosen stump's predictions.
    """
    _check_sizes(data, d)
    n, dim = data.features.shape
    w = d.weights
    y = data.labels
    pos = np.where(y == 1, w, 0.0)
    neg = np.where(y == -1, w, 0.0)
    total_pos = pos.sum()
    total_neg = neg.sum()

    order = data.sort_order
    xs = np.take_along_axis(data.features, order, axis=0)
    left_pos = np.cumsum(pos[order], axis=0)[:-1]
    left_neg = np.cumsum(neg[order], axis=0)[:-1]
    # polarity +1 predicts +1 on the left of the threshold
    err_plus = left_neg + (total_pos - left_pos)
    err_minus = left_pos + (total_neg - left_neg)
    valid = xs[:-1] < xs[1:]
    mids = 0.5 * (xs[:-1] + xs[1:])

    rows, cols = np.nonzero(valid)
    feats = np.concatenate([np.arange(dim), np.arange(dim), cols, cols])
    thresholds = np.concatenate(
        [np.full(dim, SENTINEL), np.full(dim, SENTINEL), mids[rows, cols], mids[rows, cols]]
    )
    polarities = np.concatenate(
        [np.ones(dim), -np.ones(dim), np.ones(cols.size), -np.ones(cols.size)]
    )
    errors = np.concatenate(
        [
            np.full(dim, total_pos),
            np.full(dim, total_neg),
            err_plus[rows, cols],
            err_minus[rows, cols],
        ]
    )
    best = select_candidate(feats, thresholds, polarities, errors)
    stump = Stump(int(feats[best]), float(thresholds[best]), int(polarities[best]))
    return stump, weighted_error(stump, data, d)
