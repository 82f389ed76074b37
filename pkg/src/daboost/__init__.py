"""AdaBoost, its gradient-projection form, and dual-averaging boosting (DABoost)."""

from .core import (
    Dataset,
    Distribution,
    Ensemble,
    InvalidInputError,
    RoundRecord,
    Sample,
    edge,
    empirical_inner_product,
    ensemble_predict,
    ensemble_score,
    exponential_loss,
    weighted_error,
)
from .data import (
    CsvSchema,
    ParseError,
    SchemaError,
    generate_majority_toy,
    load_csv,
    load_libsvm,
    train_test_split,
)
from .engines import BoostConfig, BoostRun, run_boosting, step_size
from .metrics import curve_table, loss_bound, zero_one_error
from .stump import Stump, train_stump

__all__ = [
    "BoostConfig",
    "BoostRun",
    "CsvSchema",
    "Dataset",
    "Distribution",
    "Ensemble",
    "InvalidInputError",
    "ParseError",
    "RoundRecord",
    "Sample",
    "SchemaError",
    "Stump",
    "curve_table",
    "edge",
    "empirical_inner_product",
    "ensemble_predict",
    "ensemble_score",
    "exponential_loss",
    "generate_majority_toy",
    "load_csv",
    "load_libsvm",
    "loss_bound",
    "run_boosting",
    "step_size",
    "train_stump",
    "train_test_split",
    "weighted_error",
    "zero_one_error",
]
