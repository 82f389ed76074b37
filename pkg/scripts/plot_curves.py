"""Plot a merged table written by ``daboost compare`` (needs matplotlib).

    daboost compare --data heart.csv --positive-label 2 --test-fraction 0.3 --out cmp.csv
    python scripts/plot_curves.py cmp.csv --out cmp.png
"""

import argparse
import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def column(rows, name):
    return [float(r[name]) if r.get(name) else float("nan") for r in rows]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("table")
    p.add_argument("--out", default="curves.png")
    args = p.parse_args()

    with open(args.table, newline="") as fh:
        rows = list(csv.DictReader(fh))
    rounds = column(rows, "round")
    fig, ax = plt.subplots(figsize=(6, 4))
    for engine, color in (("adaboost", "tab:blue"), ("daboost", "tab:green")):
        ax.plot(rounds, column(rows, f"{engine}_train_error"), "--", color=color, label=f"{engine} train")
        if any(r.get(f"{engine}_test_error") for r in rows):
            ax.plot(rounds, column(rows, f"{engine}_test_error"), "-", color=color, label=f"{engine} test")
    ax.set_xlabel("round")
    ax.set_ylabel("error")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=120)


if __name__ == "__main__":
    main()
