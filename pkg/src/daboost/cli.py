"""Command-line harness: ``daboost run | toy | compare``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .core import InvalidInputError
from .data import CsvSchema, generate_majority_toy, load_csv, load_libsvm, train_test_split
from .engines import BoostConfig, run_boosting
from .metrics import COLUMNS, curve_table, write_table

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_RUNTIME = 0, 1, 2, 3

ALGO_NAMES = {"adaboost": "adaboost", "gradproj": "gradient_projection", "daboost": "daboost"}
COMPARE_ENGINES = ("adaboost", "daboost")


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _label_col(text: str):
    if text == "last":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'last', got {text!r}")


def _add_data_args(p: argparse.ArgumentParser, default_rounds: int):
    p.add_argument("--data", help="input file (csv or libsvm)")
    p.add_argument("--format", choices=("csv", "libsvm", "toy"), default="csv")
    p.add_argument("--label-col", type=_label_col, default="last")
    p.add_argument("--positive-label", help="csv label token mapped to +1")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--header", action="store_true", help="csv file has a header row")
    p.add_argument("--n", type=int, default=1000, help="toy format: sample count")
    p.add_argument("--dim", type=int, default=100, help="toy format: dimensionality")
    p.add_argument("--test-fraction", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=default_rounds)
    p.add_argument("--mode", choices=("reweight", "resample"), default="reweight")
    p.add_argument("--step-rule", choices=("log", "sqrt"), default="log")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--no-early-stop", action="store_true",
                   help="keep boosting after a round with zero weighted error")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="daboost", description="AdaBoost / DABoost experiment harness")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="run one engine and write its curve table")
    run.add_argument("--algo", choices=tuple(ALGO_NAMES), default="adaboost")
    _add_data_args(run, default_rounds=100)
    run.add_argument("--out", required=True, help="curve table CSV path ('-' for stdout)")
    run.add_argument("--model-out", help="write (coef, feature, threshold, polarity) per term")

    toy = sub.add_parser("toy", help="majority-vote toy: rounds to zero training error")
    toy.add_argument("--n", type=int, default=1000)
    toy.add_argument("--dim", type=int, default=100)
    toy.add_argument("--seed", type=int, default=0)
    toy.add_argument("--rounds", type=int, default=10)
    toy.add_argument("--mode", choices=("reweight", "resample"), default="reweight")
    toy.add_argument("--step-rule", choices=("log", "sqrt"), default="log")
    toy.add_argument("--out", help="optional merged curve table CSV path")

    cmp_ = sub.add_parser("compare", help="AdaBoost vs DABoost on identical data and seed")
    _add_data_args(cmp_, default_rounds=100)
    cmp_.add_argument("--out", required=True, help="merged curve table CSV path ('-' for stdout)")
    return parser


def _config(args, algorithm: str) -> BoostConfig:
    try:
        return BoostConfig(
            rounds=args.rounds,
            algorithm=algorithm,
            weighting_mode=args.mode,
            seed=args.seed,
            lam=getattr(args, "lam", 1.0),
            step_rule=args.step_rule,
            stop_on_zero_error=not getattr(args, "no_early_stop", False),
        )
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from exc


def _load(args):
    try:
        if args.format == "toy":
            data = generate_majority_toy(args.n, args.dim, args.seed)
        else:
            if not args.data:
                raise UsageError(f"--data is required for --format {args.format}")
            if args.format == "csv":
                if args.positive_label is None:
                    raise UsageError("--positive-label is required for --format csv")
                schema = CsvSchema(args.positive_label, args.label_col, args.delimiter, args.header)
                data = load_csv(args.data, schema)
            else:
                data = load_libsvm(args.data)
        if args.test_fraction is None:
            return data, None
        return train_test_split(data, args.test_fraction, args.seed)
    except (InvalidInputError, OSError) as exc:
        raise DataError(str(exc)) from exc


def _open_out(path: str):
    return sys.stdout if path == "-" else open(path, "w", newline="")


def _write(path: str, rows, columns):
    fh = _open_out(path)
    try:
        write_table(rows, fh, columns)
    finally:
        if fh is not sys.stdout:
            fh.close()


def _fmt(v) -> str:
    return "n/a" if v is None else f"{v:.4f}"


def cmd_run(args) -> int:
    config = _config(args, ALGO_NAMES[args.algo])
    train, test = _load(args)
    result = run_boosting(config, train, test)
    _write(args.out, curve_table(result.records), COLUMNS)
    if args.model_out:
        with open(args.model_out, "w") as fh:
            fh.write("coef\tfeature\tthreshold\tpolarity\n")
            for coef, h in result.ensemble.terms:
                fh.write(f"{coef!r}\t{h.feature_index}\t{h.threshold!r}\t{h.polarity}\n")
    last = result.records[-1]
    log = sys.stderr if args.out == "-" else sys.stdout
    print(
        f"algo={args.algo} rounds={len(result.records)} stop={result.stop_reason} "
        f"train_error={_fmt(last.train_error)} test_error={_fmt(last.test_error)}",
        file=log,
    )
    return EXIT_OK


def rounds_to_zero(records) -> Optional[int]:
    return next((r.round for r in records if r.train_error == 0.0), None)


def merge_tables(runs: dict) -> tuple[list[str], list[dict]]:
    """One row per round; ``<engine>_<column>`` cells, empty past an engine's last round."""
    columns = ["round"] + [f"{name}_{c}" for name in runs for c in COLUMNS if c != "round"]
    tables = {name: curve_table(run.records) for name, run in runs.items()}
    n_rows = max(len(t) for t in tables.values())
    rows = []
    for i in range(n_rows):
        row = {"round": i + 1}
        for name, table in tables.items():
            if i < len(table):
                row.update({f"{name}_{c}": v for c, v in table[i].items() if c != "round"})
        rows.append(row)
    return columns, rows


def cmd_toy(args) -> int:
    try:
        data = generate_majority_toy(args.n, args.dim, args.seed)
    except InvalidInputError as exc:
        raise DataError(str(exc)) from exc
    args.no_early_stop = False
    runs = {name: run_boosting(_config(args, name), data) for name in COMPARE_ENGINES}
    for name, run in runs.items():
        hit = rounds_to_zero(run.records)
        where = f"round {hit}" if hit is not None else f"not reached in {len(run.records)} rounds"
        print(f"{name}: zero training error at {where}")
    if args.out:
        columns, rows = merge_tables(runs)
        _write(args.out, rows, columns)
    return EXIT_OK


def cmd_compare(args) -> int:
    train, test = _load(args)
    runs = {name: run_boosting(_config(args, name), train, test) for name in COMPARE_ENGINES}
    columns, rows = merge_tables(runs)
    _write(args.out, rows, columns)
    log = sys.stderr if args.out == "-" else sys.stdout
    for name, run in runs.items():
        last = run.records[-1]
        line = f"{name}: rounds={len(run.records)} final_train_error={_fmt(last.train_error)}"
        if test is not None:
            best = min(run.records, key=lambda r: (r.test_error, r.round))
            line += f" best_test_error={_fmt(best.test_error)} best_round={best.round}"
        print(line, file=log)
    return EXIT_OK


COMMANDS = {"run": cmd_run, "toy": cmd_toy, "compare": cmd_compare}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"daboost: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"daboost: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001
        print(f"daboost: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
