import numpy as np
import pytest

from daboost import Dataset


class TableHypothesis:
    """Predicts a fixed label per sample; samples are identified by feature 0 = index."""

    def __init__(self, predictions):
        self.predictions = np.asarray(predictions, dtype=np.int8)

    def predict(self, features):
        return int(self.predictions[int(features[0])])

    def predict_many(self, X):
        return self.predictions[np.asarray(X)[:, 0].astype(int)]


class ConstantHypothesis:
    def __init__(self, value):
        self.value = value

    def predict(self, features):
        return self.value

    def predict_many(self, X):
        return np.full(len(X), self.value, dtype=np.int8)


def indexed_dataset(labels):
    labels = np.asarray(labels)
    return Dataset(np.arange(len(labels), dtype=float)[:, None], labels)


def random_dataset(rng, n, dim, noise=0.0, discrete=False):
    """Linear-ish labels with optional flip noise; discrete features create value ties."""
    if discrete:
        X = rng.integers(0, 4, size=(n, dim)).astype(float)
    else:
        X = rng.normal(size=(n, dim))
    w = rng.normal(size=dim)
    y = np.where(X @ w + 0.1 * rng.normal(size=n) >= 0, 1, -1)
    flip = rng.random(n) < noise
    y[flip] *= -1
    return Dataset(X, y)


def random_distribution(rng, n):
    w = rng.exponential(size=n)
    return w / w.sum()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
