"""Rounds-to-zero-training-error on the majority-vote toy over many seeds.

    python scripts/toy_experiment.py --seeds 100
"""

import argparse
import collections

from daboost import BoostConfig, generate_majority_toy, run_boosting
from daboost.cli import rounds_to_zero


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--dim", type=int, default=100)
    p.add_argument("--rounds", type=int, default=30)
    args = p.parse_args()

    hist = {"adaboost": collections.Counter(), "daboost": collections.Counter()}
    for seed in range(args.seeds):
        data = generate_majority_toy(args.n, args.dim, seed)
        row = []
        for engine, counter in hist.items():
            hit = rounds_to_zero(run_boosting(BoostConfig(args.rounds, engine, seed=seed), data).records)
            counter[hit] += 1
            row.append(f"{engine}={hit}")
        print(f"seed {seed:3d}: " + " ".join(row))

    for engine, counter in hist.items():
        within3 = sum(v for k, v in counter.items() if k is not None and k <= 3)
        print(f"{engine}: zero error within 3 rounds on {within3}/{args.seeds} seeds; "
              f"histogram {dict(sorted(counter.items(), key=lambda kv: (kv[0] is None, kv[0] or 0)))}")


if __name__ == "__main__":
    main()
