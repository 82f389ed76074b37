"""Domain types shared by the boosting engines, plus weighted metrics.

Labels are always stored as -1/+1 integers. A raw score of exactly zero is
mapped to +1 everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Protocol, Sequence

import numpy as np

NORMALIZATION_TOL = 1e-12


class InvalidInputError(ValueError):
    """Raised when arguments violate a documented precondition."""


def sign_label(scores):
    """Map real scores to -1/+1 with sign(0) = +1."""
    return np.where(np.asarray(scores) >= 0, 1, -1).astype(np.int8)


def _check_label(value) -> int:
    if value not in (-1, 1):
        raise InvalidInputError(f"label must be -1 or +1, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class Sample:
    features: np.ndarray
    label: int


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable (n, dim) feature matrix with -1/+1 labels."""

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        X = np.array(self.features, dtype=float, copy=True)
        y = np.array(self.labels, copy=True)
        if X.ndim != 2:
            raise InvalidInputError("features must be a 2-D array")
        n, dim = X.shape
        if n == 0 or dim == 0:
            raise InvalidInputError("dataset must have at least one sample and one feature")
        if y.shape != (n,):
            raise InvalidInputError(f"expected {n} labels, got shape {y.shape}")
        if not np.all(np.isfinite(X)):
            raise InvalidInputError("all feature values must be finite")
        if not np.all((y == 1) | (y == -1)):
            raise InvalidInputError("labels must be -1 or +1")
        y = y.astype(np.int8)
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)

    @classmethod
    def from_samples(cls, samples: Sequence[Sample]) -> "Dataset":
        if not samples:
            raise InvalidInputError("dataset must be non-empty")
        dims = {len(s.features) for s in samples}
        if len(dims) != 1:
            raise InvalidInputError(f"inconsistent feature lengths: {sorted(dims)}")
        X = np.vstack([np.asarray(s.features, dtype=float) for s in samples])
        y = np.array([_check_label(s.label) for s in samples])
        return cls(X, y)

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Sample:
        return Sample(self.features[i], int(self.labels[i]))

    @property
    def samples(self) -> list[Sample]:
        return [self[i] for i in range(self.n)]

    def subset(self, indices) -> "Dataset":
        idx = np.asarray(indices, dtype=np.intp)
        return Dataset(self.features[idx], self.labels[idx])

    @cached_property
    def sort_order(self) -> np.ndarray:
        # per-feature ascending order; weights never change it, so stump
        # training reuses it every round
        order = np.argsort(self.features, axis=0, kind="stable")
        order.setflags(write=False)
        return order


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability weights over the samples of a dataset."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float, copy=True)
        if w.ndim != 1 or w.size == 0:
            raise InvalidInputError("weights must be a non-empty vector")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InvalidInputError("weights must be finite and non-negative")
        total = w.sum()
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise InvalidInputError(f"weights sum to {total!r}, not 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def from_unnormalized(cls, values) -> "Distribution":
        v = np.asarray(values, dtype=float)
        w = v / v.sum()
        # a second pass brings the sum within a few ulps of 1
        return cls(w / w.sum())

    @classmethod
    def from_log_weights(cls, log_values) -> "Distribution":
        a = np.asarray(log_values, dtype=float)
        return cls.from_unnormalized(np.exp(a - a.max()))

    def __len__(self) -> int:
        return self.weights.size


class Hypothesis(Protocol):
    """Binary classifier over feature vectors."""

    def predict(self, features) -> int: ...

    def predict_many(self, X: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class Ensemble:
    """Weighted vote f = sum_s coef_s * h_s.

    ``dim`` is the feature dimensionality the hypotheses were trained on;
    when set, inputs of another length are rejected.
    """

    terms: tuple = ()
    dim: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for coef, _ in self.terms:
            if not np.isfinite(coef):
                raise InvalidInputError(f"non-finite ensemble coefficient {coef!r}")

    def append(self, coef: float, h: Hypothesis) -> "Ensemble":
        return Ensemble(self.terms + ((float(coef), h),), self.dim)

    def __len__(self) -> int:
        return len(self.terms)

    def _check_dim(self, d: int):
        if self.dim is not None and d != self.dim:
            raise InvalidInputError(f"expected {self.dim} features, got {d}")

    def scores(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim != 2:
            raise InvalidInputError("expected a 2-D feature matrix")
        self._check_dim(X.shape[1])
        out = np.zeros(X.shape[0])
        for coef, h in self.terms:
            out += coef * h.predict_many(X)
        return out


@dataclass(frozen=True)
class RoundRecord:
    """Telemetry for one boosting round."""

    round: int
    epsilon: float
    step: float
    z: Optional[float]
    train_error: float
    test_error: Optional[float]
    exp_loss: float


def ensemble_score(ensemble: Ensemble, features) -> float:
    x = np.asarray(features, dtype=float)
    if x.ndim != 1:
        raise InvalidInputError("features must be a vector")
    ensemble._check_dim(x.size)
    return float(sum(coef * h.predict(x) for coef, h in ensemble.terms))


def ensemble_predict(ensemble: Ensemble, features) -> int:
    return 1 if ensemble_score(ensemble, features) >= 0 else -1


def _check_sizes(data: Dataset, d: Distribution):
    if len(d) != data.n:
        raise InvalidInputError(
            f"distribution has {len(d)} weights but dataset has {data.n} samples"
        )


def weighted_error(h: Hypothesis, data: Dataset, d: Distribution) -> float:
    _check_sizes(data, d)
    wrong = h.predict_many(data.features) != data.labels
    return float(d.weights[wrong].sum())


def edge(h: Hypothesis, data: Dataset, d: Distribution) -> float:
    return 1.0 - 2.0 * weighted_error(h, data, d)


def empirical_inner_product(f_vals, g_vals) -> float:
    f = np.asarray(f_vals, dtype=float)
    g = np.asarray(g_vals, dtype=float)
    if f.ndim != 1 or f.shape != g.shape or f.size == 0:
        raise InvalidInputError(f"incompatible vectors {f.shape} and {g.shape}")
    return float(np.dot(f, g) / f.size)


def exponential_loss(ensemble: Ensemble, data: Dataset) -> float:
    """Mean exponential loss (1/n) sum_i exp(-y_i f(x_i))."""
    margins = data.labels * ensemble.scores(data.features)
    return float(np.mean(np.exp(-margins)))
