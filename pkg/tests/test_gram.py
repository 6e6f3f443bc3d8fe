import csv
import io
from fractions import Fraction

import pytest

from quonalg.exact_arith import Polynomial, RationalFunction
from quonalg.gram import (
    build_gram,
    gram_csv_text,
    gram_json_data,
    verify_representation,
)

from golden_block import GOLDEN_M3_N2_EXPONENTS

P = Polynomial
ONE = P.one()
Q = P.q()
RF = RationalFunction


def test_golden_block_operator_path():
    block = build_gram(3, (1, 2), path="operator")
    assert block.size == 18
    for i in range(18):
        for j in range(18):
            assert block.entries[i][j] == RF(Q ** GOLDEN_M3_N2_EXPONENTS[i][j]), (i, j)


def test_golden_block_combinatorial_path():
    block = build_gram(3, (1, 2), path="combinatorial")
    for i in range(18):
        for j in range(18):
            assert block.entries[i][j] == RF(Q ** GOLDEN_M3_N2_EXPONENTS[i][j])


def test_two_positions_one_color():
    block = build_gram(1, (1, 2))
    assert [[str(c) for c in row] for row in block.entries] == [["1", "q"], ["q", "1"]]


def test_symmetry_and_identity_at_q0():
    for m, multiset in [(1, (1, 2)), (2, (2, 2)), (2, (1, 2, 3)), (3, (1, 2)), (2, (2, 2, 5))]:
        block = build_gram(m, multiset)
        for i in range(block.size):
            for j in range(block.size):
                assert block.entries[i][j] == block.entries[j][i]
                assert block.entries[i][j].evaluate(Fraction(0)) == int(i == j)


def test_repeated_mode_diagonal_counts_the_stabilizer():
    # with repeated modes the diagonal is the q^cinv sum over the stabilizer
    block = build_gram(2, (2, 2))
    assert block.entries[0][0] == RF(ONE + Q)
    block = build_gram(2, (2, 2, 5))
    assert block.entries[0][0] == RF(ONE + Q)


def test_distinct_mode_diagonal_is_one():
    for m, multiset in [(2, (1, 2)), (3, (1, 2)), (2, (1, 2, 3))]:
        block = build_gram(m, multiset)
        for i in range(block.size):
            assert block.entries[i][i] == RF.one()


def test_unknown_path_rejected():
    with pytest.raises(ValueError):
        build_gram(2, (1, 2), path="magic")


@pytest.mark.parametrize(
    "m,multiset",
    [(3, (1, 2)), (2, (2, 2)), (1, (1, 2, 3)), (2, (2, 2, 5))],
)
def test_block_equals_representation_matrix(m, multiset):
    assert verify_representation(m, multiset)


def test_csv_and_json_carry_identical_content():
    block = build_gram(2, (1, 2))
    rows = list(csv.reader(io.StringIO(gram_csv_text(block))))
    data = gram_json_data(block)
    assert rows[0] == data["basis"]
    assert rows[1:] == data["entries"]
    # canonical strings reparse to the same entries
    from quonalg.exact_arith import parse_rational_function

    for i, row in enumerate(data["entries"]):
        for j, cell in enumerate(row):
            assert parse_rational_function(cell) == block.entries[i][j]
