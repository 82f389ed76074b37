"""Final training / best test error of AdaBoost vs DABoost under label noise.

    python scripts/noise_direction.py --noise 0 0.05 0.15 0.3
"""

import argparse

import numpy as np

from daboost import BoostConfig, Dataset, run_boosting, train_test_split


def noisy_linear(n, dim, noise, seed):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, dim))
    w = rng.normal(size=dim)
    y = np.where(X @ w >= 0, 1, -1)
    y[rng.random(n) < noise] *= -1
    return Dataset(X, y)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--noise", type=float, nargs="+", default=[0.0, 0.05, 0.15, 0.3])
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--dim", type=int, default=5)
    p.add_argument("--rounds", type=int, default=200)
    p.add_argument("--seed", type=int, default=8)
    args = p.parse_args()

    print("noise  engine    final_train  best_test  best_round")
    for noise in args.noise:
        train, test = train_test_split(noisy_linear(args.n, args.dim, noise, args.seed), 0.3, args.seed)
        for engine in ("adaboost", "daboost"):
            recs = run_boosting(BoostConfig(args.rounds, engine, seed=args.seed), train, test).records
            best = min(recs, key=lambda r: (r.test_error, r.round))
            print(f"{noise:5.2f}  {engine:8s}  {recs[-1].train_error:11.3f}  "
                  f"{best.test_error:9.3f}  {best.round:10d}")


if __name__ == "__main__":
    main()
