import random
from fractions import Fraction

import pytest

from quonalg.exact_arith import Polynomial, RationalFunction
from quonalg.linalg import leading_minors, poly_det, rational_det

P = Polynomial
ONE = P.one()
Q = P.q()


def rand_poly(rng, max_deg=3, hi=4):
    return P([rng.randint(-hi, hi) for _ in range(rng.randint(0, max_deg + 1))])


def test_small_hand_determinants():
    assert poly_det([]) == ONE
    assert poly_det([[P.zero()]]) == P.zero()
    assert poly_det([[ONE, Q], [Q, ONE]]) == ONE - Q**2
    # 3x3 circulant: (1 + 2q)(1 - q)^2 expanded by hand
    circ = [[ONE, Q, Q], [Q, ONE, Q], [Q, Q, ONE]]
    assert poly_det(circ) == P((1, 0, -3, 2))


def test_packed_and_plain_agree():
    rng = random.Random(5)
    for trial in range(150):
        n = rng.randint(1, 6)
        rows = [[rand_poly(rng) for _ in range(n)] for _ in range(n)]
        if trial % 5 == 0 and n >= 2:
            rows[n - 1] = rows[0][:]  # singular case exercises pivoting
        packed = poly_det([r[:] for r in rows])
        plain = poly_det([r[:] for r in rows], method="plain")
        assert packed == plain


def test_det_is_multilinear_in_rows():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [
            [RationalFunction(rand_poly(rng), rand_poly(rng, 2, 3) + ONE * 7) for _ in range(n)]
            for _ in range(n)
        ]
        base = rational_det(rows)
        f = RationalFunction(rand_poly(rng, 2, 3) + ONE * 5, rand_poly(rng, 1, 2) + ONE * 3)
        scaled = [r[:] for r in rows]
        scaled[0] = [f * e for e in scaled[0]]
        assert rational_det(scaled) == f * base


def test_row_swap_changes_sign():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(2, 5)
        rows = [[rand_poly(rng) for _ in range(n)] for _ in range(n)]
        swapped = [r[:] for r in rows]
        swapped[0], swapped[1] = swapped[1], swapped[0]
        assert poly_det(swapped) == -poly_det([r[:] for r in rows])


def test_not_square_raises():
    with pytest.raises(ValueError):
        poly_det([[ONE, Q]])


def test_leading_minors_match_determinants():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n)]
            for _ in range(n)
        ]
        minors = leading_minors(rows)
        for k in range(1, n + 1):
            sub = [
                [RationalFunction(int(e.numerator), int(e.denominator)) for e in row[:k]]
                for row in rows[:k]
            ]
            assert rational_det(sub).evaluate(0) == minors[k - 1]


def test_leading_minors_identity():
    rows = [[Fraction(int(i == j)) for j in range(6)] for i in range(6)]
    assert leading_minors(rows) == [Fraction(1)] * 6
