"""Closed forms for the determinant and inverse of the q-weighted group sum,
with brute-force oracles for both.

Determinant of the regular representation of the q-weighted sum over the
colored permutation group on n positions with m colors:

    ((1 + (m-1)q)(1 - q)**(m-1))**E_c  *  prod_{i=1}^{n-1} (1 - q**(i*i+i))**E_i

with E_c = n * m**(n-1) * n! and E_i = (n-i) * m**n * n! / (i*i + i).  The
color exponent E_c follows from the coset argument applied to each of the n
single-position factors (index m**(n-1) * n! each); the flat exponent
m**n * n! sometimes quoted for the color part fails the n = 1 oracle, where
the block is an m-by-m circulant with determinant (1+(m-1)q)(1-q)**(m-1)
to the first power.  ``det_bruteforce`` (fraction-free elimination) is the
arbiter and is checked against the closed form in the test suite.

The closed-form inverse is assembled from three families of sparse factors:
per-position inverses of the color sums, and two families of cycle products
inverting the insertion decomposition of the permutation part.  All product
orders below are fixed by the two-sided inverse check in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exact_arith import Polynomial, RationalFunction
from .colored_perm import (
    ColoredPermutation,
    cinv,
    compose,
    enumerate_group,
    insertion_cycle,
)
from .group_algebra import (
    GroupAlgebraElement,
    all_shifts_inverse,
    cinv_sum,
    embed_single_position,
    ga_mul,
    product_chain,
    rep_matrix,
)
from . import linalg


@dataclass(frozen=True)
class DetFactorization:
    """Factored determinant of the regular block: color part and cycle parts."""

    m: int
    n: int
    color_base: Polynomial
    color_exponent: int
    perm_factors: tuple  # ((1 - q**(i*i+i), exponent) for i in 1..n-1)

    def expand(self):
        out = self.color_base ** self.color_exponent
        for base, exponent in self.perm_factors:
            out = out * base**exponent
        return out

    def factored_str(self):
        bits = []
        if self.m > 1:
            q = Polynomial.q()
            one = Polynomial.one()
            head = f"({one + (self.m - 1) * q})({one - q})"
            if self.m > 2:
                head += f"^{self.m - 1}"
            bits.append(f"({head})^{self.color_exponent}")
        for base, exponent in self.perm_factors:
            bits.append(f"({base})^{exponent}")
        return " * ".join(bits) if bits else "1"


def det_factorization(m, n):
    """Factored closed form of the regular-block determinant."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    q = Polynomial.q()
    one = Polynomial.one()
    color_base = (one + (m - 1) * q) * (one - q) ** (m - 1)
    color_exponent = n * m ** (n - 1) * factorial(n)
    perm_factors = []
    for i in range(1, n):
        step = i * i + i
        numerator = (n - i) * m**n * factorial(n)
        exponent, remainder = divmod(numerator, step)
        if remainder:
            raise ArithmeticError(f"non-integer cycle exponent at i={i}")
        perm_factors.append((one - q**step, exponent))
    return DetFactorization(
        m=m,
        n=n,
        color_base=color_base,
        color_exponent=color_exponent,
        perm_factors=tuple(perm_factors),
    )


def det_closed_form(m, n):
    """Expanded closed form of the regular-block determinant."""
    return det_factorization(m, n).expand()


def det_bruteforce(block):
    """Exact determinant of a GramBlock or RepMatrix by fraction-free elimination."""
    return linalg.rational_det([list(row) for row in block.entries])


def regular_block_det(m, n, method="packed"):
    """Brute-force determinant of the regular representation of the group sum."""
    rep = rep_matrix(cinv_sum(m, n), tuple(range(1, n + 1)))
    return linalg.rational_det([list(row) for row in rep.entries], method=method)


def factor_sum(m, n):
    """Split the q-weighted group sum into permutation and color factors.

    Returns (perm_sum, color_sum): the q**inversions sum over neutral-colored
    permutations and the q**(non-neutral count) sum over pure color elements.
    ga_mul(perm_sum, color_sum) equals cinv_sum(m, n), and color_sum equals
    the product of the n single-position sums 1 + q*(all shifts).
    """
    q = Polynomial.q()
    neutral = (m,) * n
    identity_word = tuple(range(1, n + 1))
    perm_terms = {}
    color_terms = {}
    for g in enumerate_group(m, n):
        if g.colors == neutral:
            perm_terms[g] = RationalFunction(q ** cinv(g))
        if g.values == identity_word:
            color_terms[g] = RationalFunction(q ** cinv(g))
    return (
        GroupAlgebraElement(m, n, perm_terms),
        GroupAlgebraElement(m, n, color_terms),
    )


@dataclass(frozen=True)
class InverseFactors:
    """Sparse factors whose ordered product inverts the q-weighted group sum.

    position_inverses[k-1] inverts the color sum at position k (supported on
    the cyclic shifts there).  For each block size j = 2..n,
    difference_products[j-2] is the product over k < j of
    (1 - q**(j-k) * cycle(j -> k)), and geometric_products[j-2] is the
    product over k <= j-1 of truncated geometric series in cycle(j-1 -> k)
    divided by (1 - q**((j-k)(j-k+1))); both families are neutral-colored.
    """

    m: int
    n: int
    position_inverses: tuple
    difference_products: tuple
    geometric_products: tuple


def _difference_product(m, n, j):
    """Product over k = 1..j-1 of (1 - q**(j-k) * insertion_cycle(j, k))."""
    q = RationalFunction(Polynomial.q())
    factors = []
    for k in range(1, j):
        cyc = GroupAlgebraElement.from_element(insertion_cycle(m, n, j, k))
        factors.append(GroupAlgebraElement.identity(m, n) - cyc.scale(q ** (j - k)))
    return product_chain(factors)


def _geometric_product(m, n, j):
    """Product over k = j-1..1 of geometric series in insertion_cycle(j-1, k).

    The k factor is sum_{i=0}^{j-1-k} q**((j-k+1)i) cycle**i, divided by the
    scalar (1 - q**((j-k)(j-k+1))).
    """
    q = RationalFunction(Polynomial.q())
    one = RationalFunction.one()
    factors = []
    for k in range(j - 1, 0, -1):
        top = j - 1 - k
        series = GroupAlgebraElement.zero(m, n)
        cyc = insertion_cycle(m, n, j - 1, k)
        power = ColoredPermutation.neutral(m, n)
        for i in range(top + 1):
            series = series + GroupAlgebraElement.from_element(
                power, q ** ((top + 2) * i)
            )
            power = compose(power, cyc)
        denom = one - q ** ((top + 1) * (top + 2))
        factors.append(series.scale(denom.reciprocal()))
    return product_chain(factors)


def inverse_factors(m, n):
    """All sparse factors of the closed-form inverse, unassembled."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    position_inverses = tuple(
        embed_single_position(all_shifts_inverse(m), n, pos)
        for pos in range(1, n + 1)
    )
    difference_products = tuple(_difference_product(m, n, j) for j in range(2, n + 1))
    geometric_products = tuple(_geometric_product(m, n, j) for j in range(2, n + 1))
    return InverseFactors(
        m=m,
        n=n,
        position_inverses=position_inverses,
        difference_products=difference_products,
        geometric_products=geometric_products,
    )


def inverse_closed_form(m, n):
    """The closed-form inverse of cinv_sum(m, n), assembled from its factors.

    The permutation part multiplies the per-block pairs (difference product,
    then geometric product) with the largest block acting first, and the
    color part acts after the permutation part; verify_inverse pins these
    orders two-sidedly.
    """
    factors = inverse_factors(m, n)
    color_inverse = product_chain(factors.position_inverses)
    blocks = []
    for j in range(n, 1, -1):
        blocks.append(
            product_chain(
                [
                    factors.difference_products[j - 2],
                    factors.geometric_products[j - 2],
                ]
            )
        )
    if blocks:
        perm_inverse = product_chain(blocks)
    else:
        perm_inverse = GroupAlgebraElement.identity(m, n)
    return ga_mul(perm_inverse, color_inverse)


def verify_inverse(m, n):
    """Two-sided exact check that the assembled inverse inverts the group sum."""
    s = cinv_sum(m, n)
    inv = inverse_closed_form(m, n)
    e = GroupAlgebraElement.identity(m, n)
    return ga_mul(inv, s) == e and ga_mul(s, inv) == e
