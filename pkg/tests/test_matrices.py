import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_family, family_count
from srimat.errors import (
    AsymmetricMatrixError,
    BoundExceededError,
    EmptyMatrixError,
    MatrixFormatError,
    NegativeEntryError,
    RaggedRowsError,
)
from srimat.matrices import (
    MatrixFamilyKey,
    SymMatrix,
    _fills,
    count_family,
    count_table,
    enumerate_all,
    enumerate_family,
    parse_matrix,
    render_matrix,
    validate_membership,
)

SMALL_CASES = [
    (n, k)
    for n in range(1, 8)
    for k in range(1, n + 1)
    if (n + 1) ** (k * (k + 1) // 2) <= 50_000
]


def upper(X):
    return tuple(X.entries[i][j] for i in range(X.dim) for j in range(i, X.dim))


@st.composite
def sym_matrices(draw, max_dim=5, max_entry=4):
    k = draw(st.integers(1, max_dim))
    grid = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            grid[i][j] = grid[j][i] = draw(st.integers(0, max_entry))
    return SymMatrix(grid)


def test_membership_examples():
    assert validate_membership(SymMatrix([[2]]), MatrixFamilyKey(2, 1))
    assert not validate_membership(SymMatrix([[2, 0], [0, 0]]), MatrixFamilyKey(2, 2))
    assert validate_membership(SymMatrix([[0, 1], [1, 0]]), MatrixFamilyKey(2, 2, zero_diagonal=True))
    assert not validate_membership(SymMatrix([[1, 0], [0, 1]]), MatrixFamilyKey(2, 2, zero_diagonal=True))
    assert not validate_membership(SymMatrix([[1, 0], [0, 1]]), MatrixFamilyKey(3, 2))


def test_family_key_range():
    with pytest.raises(ValueError):
        MatrixFamilyKey(2, 3)
    with pytest.raises(ValueError):
        MatrixFamilyKey(0, 1)


def test_enumeration_examples():
    assert list(enumerate_family(MatrixFamilyKey(1, 1))) == [SymMatrix([[1]])]
    assert list(enumerate_family(MatrixFamilyKey(2, 2))) == [
        SymMatrix([[0, 1], [1, 0]]),
        SymMatrix([[1, 0], [0, 1]]),
    ]
    assert len(list(enumerate_family(MatrixFamilyKey(3, 3)))) == 4


def test_count_table_examples():
    assert count_table(2) == [1, 2]
    assert count_table(3) == [1, 4, 4]
    assert count_table(4, zero_diagonal=True) == [0, 1, 3, 3]


@pytest.mark.parametrize("n, k", SMALL_CASES)
@pytest.mark.parametrize("zero_diagonal", [False, True])
def test_enumeration_matches_brute_force_filter(n, k, zero_diagonal):
    got = [X.entries for X in enumerate_family(MatrixFamilyKey(n, k, zero_diagonal))]
    expected = brute_family(n, k, zero_diagonal)
    assert sorted(got) == sorted(expected)
    assert len(set(got)) == len(got)


@pytest.mark.parametrize("n", range(1, 10))
def test_counts_match_inclusion_exclusion(n):
    assert count_table(n) == [family_count(n, k) for k in range(1, n + 1)]
    assert count_table(n, zero_diagonal=True) == [family_count(n, k, True) for k in range(1, n + 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_generation_and_streaming_counter_agree(n):
    for k in range(1, n + 1):
        for zd in (False, True):
            key = MatrixFamilyKey(n, k, zd)
            members = list(enumerate_family(key))
            assert len(members) == count_family(key)
            assert all(validate_membership(X, key) for X in members)


@pytest.mark.parametrize("n", range(1, 7))
def test_order_is_lexicographic_and_deterministic(n):
    for k in range(1, n + 1):
        key = MatrixFamilyKey(n, k)
        first = [upper(X) for X in enumerate_family(key)]
        assert first == sorted(first)
        assert first == [upper(X) for X in enumerate_family(key)]
    dims = [X.dim for X in enumerate_all(n)]
    assert dims == sorted(dims)


@pytest.mark.parametrize("n", range(1, 10))
def test_single_row_family(n):
    assert list(enumerate_family(MatrixFamilyKey(n, 1))) == [SymMatrix([[n]])]


def test_oversized_dimension_is_empty():
    assert list(_fills(3, 4, False)) == []
    assert list(_fills(2, 5, True)) == []


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_zero_diagonal_odd_sum_is_empty(n):
    assert count_table(n, zero_diagonal=True) == [0] * n
    # the search agrees with the parity shortcut
    assert all(not list(_fills(n, k, True)) for k in range(1, n + 1))


def test_bound_checked_before_output():
    with pytest.raises(BoundExceededError):
        enumerate_family(MatrixFamilyKey(13, 2))
    with pytest.raises(BoundExceededError):
        enumerate_all(7, bound=6)
    with pytest.raises(BoundExceededError):
        count_table(13)


def test_parse_plain_examples():
    assert parse_matrix(b"0 1\n1 0\n") == SymMatrix([[0, 1], [1, 0]])
    assert parse_matrix("1\n") == SymMatrix([[1]])
    assert parse_matrix("# comment\n\n 2 \n") == SymMatrix([[2]])


def test_parse_json():
    X = parse_matrix('{"entries": [[0, 2], [2, 0]], "label": "ignored"}')
    assert X == SymMatrix([[0, 2], [2, 0]])
    with pytest.raises(MatrixFormatError):
        parse_matrix('{"rows": [[1]]}')
    with pytest.raises(MatrixFormatError):
        parse_matrix('{"entries": [[1.5]]}')
    with pytest.raises(MatrixFormatError):
        parse_matrix("{not json")


@pytest.mark.parametrize(
    "text, error",
    [
        ("1 2\n3 4\n", AsymmetricMatrixError),
        ("1 0\n0\n", RaggedRowsError),
        ("1 0 0\n0 1 0\n", RaggedRowsError),
        ("1 -1\n-1 1\n", NegativeEntryError),
        ("", EmptyMatrixError),
        ("\n# only a comment\n", EmptyMatrixError),
        ('{"entries": []}', EmptyMatrixError),
        ("1 x\nx 1\n", MatrixFormatError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_matrix(text)


def test_render_formats():
    X = SymMatrix([[0, 1], [1, 0]])
    assert render_matrix(X) == b"0 1\n1 0\n"
    assert json.loads(render_matrix(X, "json")) == {"entries": [[0, 1], [1, 0]]}


@given(sym_matrices(), st.sampled_from(["plain", "json"]))
def test_render_parse_round_trip(X, fmt):
    assert parse_matrix(render_matrix(X, fmt)) == X
    assert parse_matrix(render_matrix(X, fmt), fmt) == X
