"""Group-algebra elements over the rational-function field, their products,
and representation matrices on arrangement modules.

An element is a finite map from colored permutations (all sharing one color
count m and one length n) to RationalFunction coefficients.  The module of
formal combinations of the colored arrangements of a multiset I carries a
right action of the group; ``rep_matrix`` expands that action in the
canonical arrangement basis, one column per basis element.

``ga_mul`` is oriented so that representation matrices compose covariantly:
``rep_matrix(ga_mul(x, y), I)`` equals ``rep_matrix(x, I) @ rep_matrix(y, I)``.
Concretely the product term of (pi_x, pi_y) is compose(pi_y, pi_x), i.e. in
ga_mul(x, y) the arrangement is acted on by y's group element first.

The cyclic color group of order m is handled as the n = 1 case: its
generator is the color shift at the single position, and its regular
representation matrices are circulants.  Closed forms for the circulant
determinant and for two cyclic-element inverses live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .exact_arith import Polynomial, RationalFunction, _coerce_rf
from .colored_perm import (
    ColoredPermutation,
    act,
    as_multiset,
    cinv,
    color_shift,
    compose,
    enumerate_arrangements,
    enumerate_group,
)
from . import linalg


class GroupAlgebraElement:
    """Finite RationalFunction-weighted combination of colored permutations.

    Zero coefficients are never stored; equality is structural on the term
    map.  Instances are treated as immutable.
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        clean = {}
        if terms:
            for pi, coeff in terms.items():
                coeff = _as_rf(coeff)
                if coeff.is_zero:
                    continue
                if pi.m != m or pi.n != n:
                    raise ValueError(f"term {pi} does not live in ({m}, {n})")
                clean[pi] = coeff
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAlgebraElement is immutable")

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def identity(cls, m, n):
        return cls(m, n, {ColoredPermutation.neutral(m, n): RationalFunction.one()})

    @classmethod
    def from_element(cls, pi, coeff=1):
        return cls(pi.m, pi.n, {pi: _as_rf(coeff)})

    def coeff(self, pi):
        return self.terms.get(pi, RationalFunction.zero())

    def support(self):
        return set(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_identity(self):
        return self == GroupAlgebraElement.identity(self.m, self.n)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_sizes(other)
        out = dict(self.terms)
        for pi, c in other.terms.items():
            out[pi] = out.get(pi, RationalFunction.zero()) + c
        return GroupAlgebraElement(self.m, self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GroupAlgebraElement(
            self.m, self.n, {pi: -c for pi, c in self.terms.items()}
        )

    def scale(self, coeff):
        coeff = _as_rf(coeff)
        return GroupAlgebraElement(
            self.m, self.n, {pi: c * coeff for pi, c in self.terms.items()}
        )

    def _check_sizes(self, other):
        if self.m != other.m or self.n != other.n:
            raise ValueError(
                f"size mismatch: ({self.m}, {self.n}) vs ({other.m}, {other.n})"
            )

    def __repr__(self):
        if not self.terms:
            return "GroupAlgebraElement(0)"
        bits = [f"[{c}]*{pi}" for pi, c in sorted(self.terms.items(), key=lambda t: str(t[0]))]
        return "GroupAlgebraElement(" + " + ".join(bits) + ")"


def _as_rf(value):
    out = _coerce_rf(value)
    if out is NotImplemented:
        raise TypeError(f"cannot use {value!r} as a coefficient")
    return out


def ga_mul(x, y):
    """Convolution product oriented so rep_matrix is multiplicative.

    rep_matrix(ga_mul(x, y), I) == rep_matrix(x, I) @ rep_matrix(y, I); the
    group term contributed by a pair (pi_x, pi_y) is compose(pi_y, pi_x).
    """
    x._check_sizes(y)
    out = {}
    for pi_x, cx in x.terms.items():
        for pi_y, cy in y.terms.items():
            g = compose(pi_y, pi_x)
            acc = out.get(g)
            out[g] = cx * cy if acc is None else acc + cx * cy
    return GroupAlgebraElement(x.m, x.n, out)


def product_chain(factors):
    """Left-to-right product: the first factor's group elements act first.

    product_chain([x, y, z]) has representation rep(z) @ rep(y) @ rep(x); it
    is the element whose right action equals acting by x, then y, then z.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("empty product")
    return reduce(lambda acc, f: ga_mul(f, acc), factors)


@lru_cache(maxsize=None)
def cinv_sum(m, n):
    """The q-weighted group sum: every element with coefficient q**cinv."""
    q = Polynomial.q()
    return GroupAlgebraElement(
        m,
        n,
        {pi: RationalFunction(q ** cinv(pi)) for pi in enumerate_group(m, n)},
    )


@dataclass(frozen=True)
class RepMatrix:
    """A square matrix of RationalFunctions over an explicit ordered basis."""

    basis: tuple
    entries: tuple

    @property
    def size(self):
        return len(self.basis)


def rep_matrix(x, multiset):
    """Right-action matrix of x on the arrangement module of the multiset.

    Column j expands basis[j] acted on by x in the canonical arrangement
    basis; for the multiset {1..n} this is the regular representation.
    """
    multiset = as_multiset(multiset)
    if len(multiset) != x.n:
        raise ValueError(f"multiset size {len(multiset)} does not match n={x.n}")
    basis = enumerate_arrangements(x.m, multiset)
    index = {theta: i for i, theta in enumerate(basis)}
    size = len(basis)
    zero = RationalFunction.zero()
    cols = [[zero] * size for _ in range(size)]
    for j, theta in enumerate(basis):
        col = cols[j]
        for pi, c in x.terms.items():
            i = index[act(theta, pi)]
            col[i] = col[i] + c
    entries = tuple(tuple(cols[j][i] for j in range(size)) for i in range(size))
    return RepMatrix(basis=basis, entries=entries)


def det_rep(x, multiset):
    """Exact determinant of rep_matrix(x, multiset) by fraction-free elimination."""
    return linalg.rational_det([list(r) for r in rep_matrix(x, multiset).entries])


# ---------------------------------------------------------------------------
# The cyclic color group of order m, realized on a single position.


def cyclic_shift(m, power=1):
    """Power of the generator of the order-m cyclic color group (n = 1)."""
    return color_shift(m, 1, 1, power)


def all_shifts_sum(m, z):
    """The cyclic element 1 + z * (sum of all m-1 nontrivial shifts)."""
    z = _as_rf(z)
    terms = {ColoredPermutation.neutral(m, 1): RationalFunction.one()}
    for k in range(1, m):
        terms[cyclic_shift(m, k)] = z
    return GroupAlgebraElement(m, 1, terms)


def circulant_det_closed(m, z):
    """Closed form (1 + (m-1)z) * (1-z)**(m-1) for det rep(all_shifts_sum)."""
    z = _as_rf(z)
    one = RationalFunction.one()
    out = one + (m - 1) * z
    base = one - z
    for _ in range(m - 1):
        out = out * base
    return out


def all_shifts_inverse(m):
    """Inverse of all_shifts_sum(m, q) in the cyclic group algebra.

    Closed form: (1 + (m-2)q - q * sum of nontrivial shifts) divided by
    (1 + (m-1)q)(1-q).
    """
    q = RationalFunction(Polynomial.q())
    one = RationalFunction.one()
    denom = (one + (m - 1) * q) * (one - q)
    terms = {ColoredPermutation.neutral(m, 1): (one + (m - 2) * q) / denom}
    for k in range(1, m):
        terms[cyclic_shift(m, k)] = -q / denom
    return GroupAlgebraElement(m, 1, terms)


def single_shift_inverse(m, z):
    """Inverse of (1 - z * shift): geometric sum over (1 - z**m).

    Closed form: (1/(1 - z**m)) * sum over i < m of z**i shift**i.
    """
    z = _as_rf(z)
    one = RationalFunction.one()
    denom = one - _rf_pow(z, m)
    terms = {}
    acc = one
    for i in range(m):
        terms[cyclic_shift(m, i)] = acc / denom
        acc = acc * z
    return GroupAlgebraElement(m, 1, terms)


def _rf_pow(z, e):
    out = RationalFunction.one()
    for _ in range(e):
        out = out * z
    return out


def embed_single_position(x, n, pos):
    """Transport a cyclic (n = 1) element onto color shifts at one position."""
    if x.n != 1:
        raise ValueError("embed_single_position expects an n = 1 element")
    m = x.m
    return GroupAlgebraElement(
        m,
        n,
        {
            color_shift(m, n, pos, pi.colors[0]): c
            for pi, c in x.terms.items()
        },
    )


def restrict_single_position(x, pos):
    """Inverse of embed_single_position for elements supported on one position.

    Raises ValueError if any term moves a value or colors another position.
    """
    m, n = x.m, x.n
    terms = {}
    for pi, c in x.terms.items():
        if pi.values != tuple(range(1, n + 1)):
            raise ValueError(f"{pi} is not a pure color element")
        for i, col in enumerate(pi.colors, start=1):
            if i != pos and col != m:
                raise ValueError(f"{pi} colors position {i}, not only {pos}")
        terms[cyclic_shift(m, pi.colors[pos - 1])] = c
    return GroupAlgebraElement(m, 1, terms)
