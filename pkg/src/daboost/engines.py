"""AdaBoost, functional gradient projection, and DABoost on the exponential loss.

Each engine is a sequential state machine over :class:`BoostState`. One call
to a ``*_round`` function performs one boosting iteration, mutates the state
and returns the new ensemble term together with its :class:`RoundRecord`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .core import (
    Dataset,
    Distribution,
    Ensemble,
    Hypothesis,
    InvalidInputError,
    RoundRecord,
    sign_label,
    weighted_error,
)
from .stump import train_stump

ALGORITHMS = ("adaboost", "gradient_projection", "daboost")
WEIGHTING_MODES = ("reweight", "resample")
STEP_RULES = ("log", "sqrt")

WeakLearner = Callable[[Dataset, Distribution], tuple]


class WeakLearnerExhausted(RuntimeError):
    """The weak learner could not beat random guessing under the true weights."""


@dataclass(frozen=True)
class BoostConfig:
    rounds: int = 100
    algorithm: str = "adaboost"
    weighting_mode: str = "reweight"
    seed: int = 0
    lam: float = 1.0
    step_rule: str = "log"
    epsilon_clamp: float = 1e-10
    stop_on_zero_error: bool = True

    def __post_init__(self):
        if self.rounds < 1:
            raise InvalidInputError("rounds must be >= 1")
        if self.algorithm not in ALGORITHMS:
            raise InvalidInputError(f"unknown algorithm {self.algorithm!r}")
        if self.weighting_mode not in WEIGHTING_MODES:
            raise InvalidInputError(f"unknown weighting mode {self.weighting_mode!r}")
        if self.step_rule not in STEP_RULES:
            raise InvalidInputError(f"unknown step rule {self.step_rule!r}")
        if not 0 < self.epsilon_clamp < 0.5:
            raise InvalidInputError("epsilon_clamp must lie in (0, 0.5)")
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise InvalidInputError("lam must be a positive finite real")
        if not 0 <= self.seed < 2**64:
            raise InvalidInputError("seed must be a 64-bit unsigned integer")
        if self.algorithm == "gradient_projection":
            # the line search is the closed form; resampling has no place
            # in the deterministic derivation
            if self.weighting_mode != "reweight":
                raise InvalidInputError("gradient_projection supports reweight mode only")
            if self.step_rule != "log":
                raise InvalidInputError("gradient_projection uses the log step rule")


@dataclass(frozen=True)
class DualState:
    """log S(i) where S(i) = sum_k lambda_k exp(-y_i f_k(x_i)) over past rounds."""

    log_accum: np.ndarray
    rounds: int = 0

    @classmethod
    def empty(cls, n: int) -> "DualState":
        return cls(np.full(n, -np.inf), 0)


@dataclass
class BoostState:
    data: Dataset
    distribution: Distribution
    ensemble: Ensemble
    scores: np.ndarray
    rng: np.random.Generator
    dual: Optional[DualState] = None
    round: int = 0
    stop_reason: Optional[str] = None

    @classmethod
    def initial(cls, data: Dataset, seed: int = 0, with_dual: bool = False) -> "BoostState":
        return cls(
            data=data,
            distribution=Distribution.uniform(data.n),
            ensemble=Ensemble(dim=data.dim),
            scores=np.zeros(data.n),
            rng=np.random.default_rng(seed),
            dual=DualState.empty(data.n) if with_dual else None,
        )

    @property
    def margins(self) -> np.ndarray:
        return self.data.labels * self.scores


def clamp_epsilon(epsilon: float, clamp: float = 1e-10) -> float:
    return min(max(epsilon, clamp), 1.0 - clamp)


def step_size(epsilon: float, rule: str = "log", clamp: float = 1e-10) -> float:
    e = clamp_epsilon(epsilon, clamp)
    ratio = (1.0 - e) / e
    if rule == "log":
        return 0.5 * math.log(ratio)
    if rule == "sqrt":
        return 0.5 * math.sqrt(ratio)
    raise InvalidInputError(f"unknown step rule {rule!r}")


def adaboost_update(
    d: Distribution, eta: float, h: Hypothesis, data: Dataset
) -> tuple[Distribution, float]:
    """Multiplicative reweighting; returns (D_next, Z) with Z the empirical normalizer."""
    unnorm = d.weights * np.exp(-eta * data.labels * h.predict_many(data.features))
    z = float(unnorm.sum())
    return Distribution.from_unnormalized(unnorm / z), z


def resample(data: Dataset, d: Distribution, rng: np.random.Generator) -> Dataset:
    """n draws with replacement, sample i with probability d.weights[i]."""
    idx = rng.choice(data.n, size=data.n, replace=True, p=d.weights)
    return data.subset(idx)


def _fit_weak(state: BoostState, weak_learner: WeakLearner, config: BoostConfig):
    d = state.distribution
    if config.weighting_mode == "resample":
        h, _ = weak_learner(resample(state.data, d, state.rng), Distribution.uniform(state.data.n))
    else:
        h, _ = weak_learner(state.data, d)
    # the step and the theory both refer to the error under the true D_t
    eps = weighted_error(h, state.data, d)
    if eps >= 0.5:
        state.stop_reason = "weak_learner_exhausted"
        raise WeakLearnerExhausted(f"round {state.round + 1}: weighted error {eps!r} >= 0.5")
    return h, eps


def _append(state: BoostState, eta: float, h: Hypothesis, eps: float, config: BoostConfig):
    state.ensemble = state.ensemble.append(eta, h)
    state.scores = state.scores + eta * h.predict_many(state.data.features)
    state.round += 1
    if eps <= 0.0 and config.stop_on_zero_error:
        state.stop_reason = "zero_error"


def _record(state: BoostState, eps: float, eta: float, z: Optional[float]) -> RoundRecord:
    y = state.data.labels
    margins = y * state.scores
    return RoundRecord(
        round=state.round,
        epsilon=eps,
        step=eta,
        z=z,
        train_error=float(np.mean(sign_label(state.scores) != y)),
        test_error=None,
        exp_loss=float(np.mean(np.exp(-margins))),
    )


def adaboost_round(state: BoostState, weak_learner: WeakLearner, config: BoostConfig):
    h, eps = _fit_weak(state, weak_learner, config)
    eta = step_size(eps, config.step_rule, config.epsilon_clamp)
    state.distribution, z = adaboost_update(state.distribution, eta, h, state.data)
    _append(state, eta, h, eps, config)
    return (eta, h), _record(state, eps, eta, z)


def gradient_weights(scores: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Negative functional gradient of the summed exponential risk, per sample."""
    return labels * np.exp(-labels * scores)


def gradient_projection_round(state: BoostState, weak_learner: WeakLearner, config: BoostConfig):
    """Project the negative gradient onto the stumps, then line-search the step.

    The projection argmax_h <-grad, h> equals the minimum weighted-error
    hypothesis under D(i) proportional to |grad_i|; the exact line search
    for the exponential risk is 1/2 log((1 - eps) / eps).
    """
    y = state.data.labels
    # |y_i exp(-m_i)| normalized, computed in log space
    state.distribution = Distribution.from_log_weights(-y * state.scores)
    h, eps = _fit_weak(state, weak_learner, config)
    eta = step_size(eps, "log", config.epsilon_clamp)
    old_risk_log = _logsumexp(-y * state.scores)
    _append(state, eta, h, eps, config)
    new_risk_log = _logsumexp(-y * state.scores)
    z = math.exp(new_risk_log - old_risk_log)
    # D for the next round, so state.distribution always means "current D_t"
    state.distribution = Distribution.from_log_weights(-y * state.scores)
    return (eta, h), _record(state, eps, eta, z)


def _logsumexp(a: np.ndarray) -> float:
    m = a.max()
    return float(m + np.log(np.sum(np.exp(a - m))))


def daboost_update_dual(dual: DualState, lambda_t: float, margins) -> DualState:
    if not lambda_t > 0:
        raise InvalidInputError(f"lambda_t must be positive, got {lambda_t!r}")
    m = np.asarray(margins, dtype=float)
    if m.shape != dual.log_accum.shape:
        raise InvalidInputError("margins do not match the accumulator size")
    return DualState(np.logaddexp(dual.log_accum, math.log(lambda_t) - m), dual.rounds + 1)


def daboost_distribution(dual: DualState) -> Distribution:
    if dual.rounds == 0:
        raise InvalidInputError("dual state has no accumulated rounds")
    return Distribution.from_log_weights(dual.log_accum)


def daboost_round(state: BoostState, weak_learner: WeakLearner, config: BoostConfig):
    if state.dual is None:
        state.dual = DualState.empty(state.data.n)
    h, eps = _fit_weak(state, weak_learner, config)
    eta = step_size(eps, config.step_rule, config.epsilon_clamp)
    _append(state, eta, h, eps, config)
    state.dual = daboost_update_dual(state.dual, config.lam, state.margins)
    state.distribution = daboost_distribution(state.dual)
    return (eta, h), _record(state, eps, eta, None)


ROUND_FUNCTIONS = {
    "adaboost": adaboost_round,
    "gradient_projection": gradient_projection_round,
    "daboost": daboost_round,
}


@dataclass
class BoostRun:
    ensemble: Ensemble
    records: list = field(default_factory=list)
    stop_reason: str = "max_rounds"

    def __iter__(self):
        # allows ``ensemble, records = run_boosting(...)``
        return iter((self.ensemble, self.records))


def run_boosting(
    config: BoostConfig,
    train: Dataset,
    test: Optional[Dataset] = None,
    weak_learner: WeakLearner = train_stump,
) -> BoostRun:
    if test is not None and test.dim != train.dim:
        raise InvalidInputError(f"train has {train.dim} features but test has {test.dim}")
    state = BoostState.initial(train, config.seed, with_dual=config.algorithm == "daboost")
    round_fn = ROUND_FUNCTIONS[config.algorithm]
    test_scores = None if test is None else np.zeros(test.n)
    records = []
    for _ in range(config.rounds):
        try:
            (eta, h), rec = round_fn(state, weak_learner, config)
        except WeakLearnerExhausted:
            break
        if test is not None:
            test_scores = test_scores + eta * h.predict_many(test.features)
            rec = replace(
                rec, test_error=float(np.mean(sign_label(test_scores) != test.labels))
            )
        records.append(rec)
        if state.stop_reason is not None:
            break
    return BoostRun(state.ensemble, records, state.stop_reason or "max_rounds")
