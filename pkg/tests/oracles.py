"""Slow reference implementations used only to check the package."""

import numpy as np

TIE_TOL = 1e-12


def brute_force_stump(X, y, w):
    """Enumerate every (feature, threshold, polarity) and score it by a direct masked sum.

    Returns ((feature, threshold, polarity), error) under the documented
    tie-break: lowest feature, smallest threshold, polarity +1 first.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    w = np.asarray(w, dtype=float)
    candidates = []
    for j in range(X.shape[1]):
        values = np.unique(X[:, j])
        thresholds = [-np.inf] + [(a + b) / 2 for a, b in zip(values[:-1], values[1:])]
        for theta in thresholds:
            for polarity in (1, -1):
                pred = np.where(X[:, j] <= theta, polarity, -polarity)
                candidates.append((w[pred != y].sum(), j, theta, polarity))
    best = min(c[0] for c in candidates)
    tied = [c for c in candidates if c[0] <= best + TIE_TOL]
    err, j, theta, polarity = min(tied, key=lambda c: (c[1], c[2], -c[3]))
    return (j, theta, polarity), err


def daboost_distribution_direct(margin_history, lam=1.0):
    """D(i) = sum_k lam exp(-m_k(i)) / sum_i sum_k lam exp(-m_k(i)), evaluated naively."""
    m = np.asarray(margin_history, dtype=float)
    s = (lam * np.exp(-m)).sum(axis=0)
    return s / s.sum()


def adaboost_reference(X, y, rounds, weak_learner):
    """Textbook AdaBoost loop with plain Python floats; returns per-round (eps, eta, D_t)."""
    n = len(y)
    D = [1.0 / n] * n
    out = []
    for _ in range(rounds):
        h = weak_learner(X, y, np.array(D))
        pred = h(X)
        eps = sum(D[i] for i in range(n) if pred[i] != y[i])
        eta = 0.5 * np.log((1 - eps) / eps)
        out.append((eps, eta, list(D)))
        D = [D[i] * np.exp(-eta * y[i] * pred[i]) for i in range(n)]
        z = sum(D)
        D = [v / z for v in D]
    return out
