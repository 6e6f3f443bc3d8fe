"""Fraction-free exact linear algebra over ZZ[q] and over the rationals.

Determinants are computed by Bareiss elimination, whose intermediate entries
are minors of the input matrix, so every division is exact in the base ring.
For polynomial matrices the elimination runs on the image of the matrix
under q -> 2**stride (balanced-digit Kronecker packing): all three Bareiss
operations (multiply, subtract, exact divide) commute with that ring map,
and the stride is chosen from an a-priori minor bound so the final integer
unpacks to the true determinant.  A plain Bareiss over Polynomial values is
kept for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact_arith import (
    Polynomial,
    RationalFunction,
    poly_lcm,
    _pack_coeffs,
    _unpack_int,
)


def _bareiss_int(rows):
    """Determinant of a square matrix of Python ints, destructively.

    Fraction-free elimination with row pivoting; every interior division is
    exact (checked).
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            row_i = rows[i]
            head = row_i[k]
            row_k = rows[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - head * row_k[j]
                quot, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in Bareiss step")
                row_i[j] = quot
            row_i[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _minor_coeff_bound(rows):
    """Certified bound on any coefficient of any minor of a polynomial matrix.

    On the unit circle each entry is bounded in modulus by its l1 coefficient
    norm h, so Hadamard bounds any k-minor value by (sqrt(k) h)**k, and every
    coefficient of the minor polynomial is at most that maximum modulus.
    """
    n = len(rows)
    h = 1
    for row in rows:
        for p in row:
            norm = sum(abs(c) for c in p.coeffs)
            if norm > h:
                h = norm
    return _isqrt_pow(n, n) * h**n


def _isqrt_pow(base, exponent):
    """Integer upper bound for base**(exponent/2)."""
    out = base**(exponent // 2)
    if exponent % 2:
        root = 1
        while root * root < base:
            root += 1
        out *= root
    return out


def poly_det(rows, method="packed"):
    """Exact determinant of a square matrix of Polynomial entries.

    ``method`` chooses between the packed-integer Bareiss (default) and the
    plain Bareiss over Polynomial values used for cross-checks.
    """
    n = len(rows)
    if n == 0:
        return Polynomial.one()
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if method == "plain":
        return _poly_det_plain([list(r) for r in rows])
    bound = _minor_coeff_bound(rows)
    # Stride must hold a difference of two products of minors.
    stride = (2 * bound * bound).bit_length() + 2
    packed = [[_pack_coeffs(p.coeffs, stride) for p in row] for row in rows]
    det = _bareiss_int(packed)
    result = Polynomial(_unpack_int(det, stride))
    max_degree = sum(
        max((p.degree for p in row if not p.is_zero), default=0) for row in rows
    )
    if not result.is_zero and result.degree > max_degree:
        raise ArithmeticError("packed determinant exceeded its degree bound")
    return result


def _poly_det_plain(rows):
    n = len(rows)
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if rows[k][k].is_zero:
            for i in range(k + 1, n):
                if not rows[i][k].is_zero:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero()
        pivot = rows[k][k]
        for i in range(k + 1, n):
            head = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = (pivot * rows[i][j] - head * rows[k][j]).divexact(prev)
            rows[i][k] = Polynomial.zero()
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def rational_det(rows, method="packed"):
    """Exact determinant of a square matrix of RationalFunction entries.

    Each row is cleared to ZZ[q] by its denominator lcm, the polynomial
    determinant is taken, and the row multipliers are divided back out.
    """
    n = len(rows)
    if n == 0:
        return RationalFunction.one()
    cleared = []
    scale = Polynomial.one()
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        lcm = Polynomial.one()
        for entry in row:
            lcm = poly_lcm(lcm, entry.den)
        cleared.append(
            [entry.num * lcm.divexact(entry.den) for entry in row]
        )
        scale = scale * lcm
    return RationalFunction(poly_det(cleared, method=method), scale)


def leading_minors(rows):
    """Exact leading principal minors of a square matrix of Fractions.

    Entry [k-1] of the result is the determinant of the top-left k-by-k
    submatrix.  Denominators are cleared by one common scale, each minor is
    computed by integer Bareiss, and the scale is divided back out, so the
    values are exact.
    """
    n = len(rows)
    scale = 1
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        for entry in row:
            d = Fraction(entry).denominator
            scale = scale * d // gcd(scale, d)
    ints = [[int(Fraction(e) * scale) for e in row] for row in rows]
    minors = []
    for k in range(1, n + 1):
        sub = [row[:k] for row in ints[:k]]
        minors.append(Fraction(_bareiss_int(sub), scale**k))
    return minors
