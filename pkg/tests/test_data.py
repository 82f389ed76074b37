import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daboost import (
    CsvSchema,
    Dataset,
    Distribution,
    InvalidInputError,
    ParseError,
    SchemaError,
    Stump,
    generate_majority_toy,
    load_csv,
    load_libsvm,
    train_test_split,
    weighted_error,
)
from daboost.data import save_csv, save_libsvm


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_csv_label_mapping(tmp_path):
    p = write(tmp_path, "a.csv", "1,0,yes\n0,1,no\n")
    data = load_csv(p, CsvSchema(positive_label="yes"))
    np.testing.assert_array_equal(data.labels, [1, -1])
    np.testing.assert_array_equal(data.features, [[1, 0], [0, 1]])


def test_csv_three_labels_is_schema_error(tmp_path):
    p = write(tmp_path, "a.csv", "1,a\n2,b\n3,c\n")
    with pytest.raises(SchemaError):
        load_csv(p, CsvSchema(positive_label="a"))


def test_csv_bad_numeric_field_reports_position(tmp_path):
    p = write(tmp_path, "a.csv", "1,2,yes\n3,oops,no\n")
    with pytest.raises(ParseError) as exc:
        load_csv(p, CsvSchema(positive_label="yes"))
    assert exc.value.row == 2 and exc.value.column == 2


def test_csv_empty_file(tmp_path):
    p = write(tmp_path, "a.csv", "")
    with pytest.raises(InvalidInputError):
        load_csv(p, CsvSchema(positive_label="1"))


def test_csv_categorical_columns_and_header(tmp_path):
    text = "color;size;label\nred;1.5;pos\nblue;2;neg\nred;0;neg\ngreen;1;pos\n"
    p = write(tmp_path, "a.csv", text)
    data = load_csv(p, CsvSchema("pos", label_column=2, delimiter=";", has_header=True))
    np.testing.assert_array_equal(data.features[:, 0], [0, 1, 0, 2])
    np.testing.assert_array_equal(data.labels, [1, -1, -1, 1])


def test_csv_label_column_first(tmp_path):
    p = write(tmp_path, "a.csv", "b,1,2\ng,3,4\n")
    data = load_csv(p, CsvSchema("g", label_column=0))
    np.testing.assert_array_equal(data.labels, [-1, 1])
    np.testing.assert_array_equal(data.features, [[1, 2], [3, 4]])


def test_heart_shaped_csv(tmp_path):
    # 13 attributes plus a presence/absence label, as in the UCI heart file
    rng = np.random.default_rng(0)
    rows = []
    for _ in range(30):
        feats = [f"{v:.1f}" for v in rng.normal(size=13)]
        rows.append(",".join(feats + [str(rng.integers(1, 3))]))
    p = write(tmp_path, "heart.csv", "\n".join(rows) + "\n")
    data = load_csv(p, CsvSchema(positive_label="2"))
    assert data.dim == 13 and data.n == 30


def test_libsvm_parsing(tmp_path):
    p = write(tmp_path, "a.svm", "+1 1:0.5 3:1.0\n0 2:1  # comment\n\n# full comment\n")
    data = load_libsvm(p)
    np.testing.assert_array_equal(data.features, [[0.5, 0.0, 1.0], [0.0, 1.0, 0.0]])
    np.testing.assert_array_equal(data.labels, [1, -1])


def test_libsvm_malformed_line_number(tmp_path):
    p = write(tmp_path, "a.svm", "+1 1:0.5\n-1 2-1\n")
    with pytest.raises(ParseError) as exc:
        load_libsvm(p)
    assert exc.value.row == 2


def test_libsvm_bad_label(tmp_path):
    with pytest.raises(ParseError):
        load_libsvm(write(tmp_path, "a.svm", "2 1:1\n"))


def test_libsvm_preserves_unit_norm_rows(tmp_path):
    rng = np.random.default_rng(1)
    X = rng.random((10, 6))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    lines = [" ".join(["+1"] + [f"{j + 1}:{float(v)!r}" for j, v in enumerate(x)]) for x in X]
    data = load_libsvm(write(tmp_path, "a.svm", "\n".join(lines)))
    np.testing.assert_allclose(np.linalg.norm(data.features, axis=1), 1.0, atol=1e-15)
    np.testing.assert_array_equal(data.features, X)


def test_libsvm_padding(tmp_path):
    data = load_libsvm(write(tmp_path, "a.svm", "+1 1:1\n"), n_features=4)
    assert data.dim == 4


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trips(tmp_path_factory, seed):
    rng = np.random.default_rng(seed)
    n, dim = int(rng.integers(1, 20)), int(rng.integers(1, 6))
    X = rng.normal(size=(n, dim)) * (rng.random((n, dim)) < 0.5)
    y = rng.choice([-1, 1], size=n)
    y[0] = 1
    data = Dataset(X, y)
    tmp = tmp_path_factory.mktemp("rt")
    save_libsvm(data, tmp / "d.svm")
    back = load_libsvm(tmp / "d.svm")
    np.testing.assert_array_equal(back.features, data.features)
    np.testing.assert_array_equal(back.labels, data.labels)
    save_csv(data, tmp / "d.csv")
    back = load_csv(tmp / "d.csv", CsvSchema(positive_label="1"))
    np.testing.assert_array_equal(back.features, data.features)
    np.testing.assert_array_equal(back.labels, data.labels)


# toy generator


def test_toy_shape_and_determinism():
    a = generate_majority_toy(seed=4)
    b = generate_majority_toy(seed=4)
    assert a.n == 1000 and a.dim == 100
    np.testing.assert_array_equal(a.features, b.features)
    assert np.all(np.abs(a.features) <= 1)


def test_toy_labels_are_majority_of_first_three():
    data = generate_majority_toy(n=500, dim=5, seed=1)
    s = np.sign(data.features[:, :3])
    np.testing.assert_array_equal(data.labels, np.sign(s.sum(axis=1)))
    # (0.5, -0.2, 0.3): two of three positive
    x = data.features
    rows = np.flatnonzero((x[:, 0] > 0) & (x[:, 1] < 0) & (x[:, 2] > 0))
    assert np.all(data.labels[rows] == 1)
    rows = np.flatnonzero(np.all(x[:, :3] < 0, axis=1))
    assert np.all(data.labels[rows] == -1)


def test_toy_rejects_small_dim():
    with pytest.raises(InvalidInputError):
        generate_majority_toy(n=10, dim=2)


def test_toy_label_balance():
    data = generate_majority_toy(n=10_000, dim=3, seed=2)
    assert abs(np.mean(data.labels == 1) - 0.5) <= 0.02


def test_toy_single_coordinate_stump_error_is_quarter():
    data = generate_majority_toy(n=100_000, dim=3, seed=3)
    stump = Stump(0, 0.0, -1)
    err = weighted_error(stump, data, Distribution.uniform(data.n))
    assert abs(err - 0.25) <= 0.01


# splitting


def test_split_sizes_and_partition():
    data = Dataset(np.arange(10, dtype=float)[:, None], [1, -1] * 5)
    train, test = train_test_split(data, 0.3, seed=1)
    assert (train.n, test.n) == (7, 3)
    merged = np.sort(np.concatenate([train.features[:, 0], test.features[:, 0]]))
    np.testing.assert_array_equal(merged, np.arange(10))
    train2, test2 = train_test_split(data, 0.3, seed=1)
    np.testing.assert_array_equal(train.features, train2.features)
    np.testing.assert_array_equal(test.features, test2.features)


def test_split_empty_side():
    data = Dataset(np.arange(3, dtype=float)[:, None], [1, -1, 1])
    with pytest.raises(InvalidInputError):
        train_test_split(data, 0.05)
    with pytest.raises(InvalidInputError):
        train_test_split(data, 0.99)
