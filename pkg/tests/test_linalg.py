import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverdeg.errors import NotInvariant
from quiverdeg.linalg import (
    RatMatrix,
    extend_to_basis,
    format_rational,
    invert,
    parse_rational,
    quotient_matrices,
)


def test_parse_rational_forms():
    assert parse_rational(3) == Fraction(3)
    assert parse_rational("2/6") == Fraction(1, 3)
    assert parse_rational("-7") == Fraction(-7)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational(True)


def test_format_rational_round_trip():
    assert format_rational(Fraction(4)) == 4
    assert format_rational(Fraction(-3, 7)) == "-3/7"
    assert parse_rational(format_rational(Fraction(22, 6))) == Fraction(11, 3)


def test_rank_identity():
    assert RatMatrix.identity(3).rank() == 3


def test_rank_zero_matrix():
    assert RatMatrix.zero(2, 5).rank() == 0


def test_rank_proportional_rows():
    m = RatMatrix.from_rows([[1, 2], [2, 4]])
    assert m.rank() == 1


def test_rank_empty_shapes():
    assert RatMatrix.zero(0, 4).rank() == 0
    assert RatMatrix.zero(4, 0).rank() == 0


def test_rank_rational_entries():
    m = RatMatrix.from_rows([["1/2", "1/3"], ["1/4", "1/6"]])
    assert m.rank() == 1
    m = RatMatrix.from_rows([["1/2", "1/3"], ["1/3", "1/2"]])
    assert m.rank() == 2


def test_kernel_identity_empty():
    assert RatMatrix.identity(2).kernel_basis() == []


def test_kernel_zero_matrix():
    basis = RatMatrix.zero(2, 3).kernel_basis()
    assert len(basis) == 3


def test_kernel_single_relation():
    (vec,) = RatMatrix.from_rows([[1, 1]]).kernel_basis()
    assert vec[0] * -1 == vec[1]
    assert vec[0] != 0


def _random_matrix(rng, rows, cols, scale=6):
    return RatMatrix(
        rows,
        cols,
        [
            Fraction(rng.randint(-scale, scale), rng.randint(1, 3))
            for _ in range(rows * cols)
        ],
    )


matrix_strategy = st.builds(
    lambda rows, cols, seed: _random_matrix(random.Random(seed), rows, cols),
    st.integers(0, 5),
    st.integers(0, 5),
    st.integers(0, 10_000),
)


@given(matrix_strategy)
@settings(max_examples=60, deadline=None)
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@given(matrix_strategy)
@settings(max_examples=60, deadline=None)
def test_rank_plus_nullity(m):
    assert m.cols == m.rank() + len(m.kernel_basis())


@given(matrix_strategy)
@settings(max_examples=60, deadline=None)
def test_kernel_vectors_annihilate(m):
    for vec in m.kernel_basis():
        assert all(x == 0 for x in m.apply(vec))


@given(matrix_strategy, st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_rank_invariant_under_permutation_and_scaling(m, seed):
    rng = random.Random(seed)
    rows = m.row_list()
    rng.shuffle(rows)
    scaled = []
    for row in rows:
        c = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2]))
        scaled.append([c * x for x in row])
    cols = list(range(m.cols))
    rng.shuffle(cols)
    permuted = [[row[j] for j in cols] for row in scaled]
    m2 = RatMatrix(m.rows, m.cols, [x for row in permuted for x in row])
    assert m2.rank() == m.rank()


def test_bareiss_stays_integral_on_integer_input():
    # on integer input the fraction-free elimination divides exactly
    rng = random.Random(5)
    for _ in range(20):
        m = RatMatrix(
            4, 4, [Fraction(rng.randint(-9, 9)) for _ in range(16)]
        )
        assert 0 <= m.rank() <= 4


def test_matmul_and_apply():
    a = RatMatrix.from_rows([[1, 2], [0, 1]])
    b = RatMatrix.from_rows([[1, 0], [3, 1]])
    assert (a @ b) == RatMatrix.from_rows([[7, 2], [3, 1]])
    assert a.apply((1, 1)) == (Fraction(3), Fraction(1))


def test_invert_round_trip():
    m = RatMatrix.from_rows([[2, 1], [1, 1]])
    assert invert(m) @ m == RatMatrix.identity(2)
    with pytest.raises(ValueError):
        invert(RatMatrix.from_rows([[1, 2], [2, 4]]))


def test_extend_to_basis_completes():
    p = extend_to_basis([(Fraction(1), Fraction(1))], 2)
    assert p.rank() == 2
    assert p.column(0) == (Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        extend_to_basis([(1, 0), (2, 0)], 2)


def test_quotient_whole_space_is_zero_dimensional():
    basis = [(1, 0), (0, 1)]
    maps = [RatMatrix.from_rows([[1, 2], [3, 4]])]
    (q,) = quotient_matrices(basis, 2, maps)
    assert (q.rows, q.cols) == (0, 0)


def test_quotient_trivial_subspace_keeps_maps():
    maps = [RatMatrix.from_rows([[1, 2], [3, 4]])]
    out = quotient_matrices([], 2, maps)
    assert out == maps
    assert out[0].rank() == maps[0].rank()


def test_quotient_jordan_block_by_image():
    jordan = RatMatrix.from_rows([[0, 1], [0, 0]])
    (q,) = quotient_matrices([(1, 0)], 2, [jordan])
    assert q == RatMatrix.from_rows([[0]])


def test_quotient_rejects_non_invariant_subspace():
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(NotInvariant):
        quotient_matrices([(1, 0)], 2, [swap])
