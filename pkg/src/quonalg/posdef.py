"""Exact positive-definiteness certificates for Gram blocks at rational q.

A block evaluated at an exact rational point is a symmetric matrix of
Fractions; its leading principal minors decide definiteness (Sylvester):
all positive means positive definite.  A zero minor with no negative minor
before it is reported as singular, anything else as indefinite.  Minors are
computed by integer fraction-free elimination after clearing one common
denominator, so there are no tolerances anywhere.

``scan`` samples a closed interval on an exact rational grid; floats appear
only in the clearly-labeled approximate eigenvalue diagnostic, which is not
used by any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gram import build_gram
from . import linalg

POSITIVE_DEFINITE = "positive_definite"
SINGULAR = "singular"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class PosDefReport:
    """Verdict of one exact certification at one rational point."""

    m: int
    multiset: tuple
    q0: Fraction
    minors: tuple
    verdict: str

    @property
    def smallest_minor(self):
        return min(self.minors) if self.minors else Fraction(1)


def classify_minors(minors):
    """Sylvester verdict from the leading principal minors."""
    for value in minors:
        if value < 0:
            return INDEFINITE
        if value == 0:
            return SINGULAR
    return POSITIVE_DEFINITE


def evaluate_block(block, q0):
    """The block as exact Fractions at q = q0 (entries are polynomials)."""
    q0 = Fraction(q0)
    return [[entry.evaluate(q0) for entry in row] for row in block.entries]


def leading_minors(block, q0):
    """Exact leading principal minors of the evaluated block."""
    return linalg.leading_minors(evaluate_block(block, q0))


def certify_block(block, q0):
    """Exact Sylvester certification of one block at one rational point."""
    q0 = Fraction(q0)
    minors = tuple(leading_minors(block, q0))
    return PosDefReport(
        m=block.m,
        multiset=block.multiset,
        q0=q0,
        minors=minors,
        verdict=classify_minors(minors),
    )


def certify(m, n, q0):
    """Certify the regular block (multiset 1..n) at one rational point."""
    return certify_block(build_gram(m, tuple(range(1, n + 1))), q0)


def scan(m, n, q_lo, q_hi, steps):
    """Certify at ``steps`` evenly spaced rational points, endpoints included."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    q_lo = Fraction(q_lo)
    q_hi = Fraction(q_hi)
    block = build_gram(m, tuple(range(1, n + 1)))
    if steps == 1:
        points = [q_lo]
    else:
        width = q_hi - q_lo
        points = [q_lo + width * k / (steps - 1) for k in range(steps)]
    return [certify_block(block, point) for point in points]


def interval_of_definiteness(m):
    """The open interval of q where the regular blocks stay definite."""
    if m == 1:
        return (Fraction(-1), Fraction(1))
    return (Fraction(1, 1 - m), Fraction(1))


def approx_eigenvalues(block, q0, sweeps=64):
    """Approximate eigenvalues of the evaluated block (floats, diagnostic only).

    Cyclic Jacobi rotations on the symmetric float matrix; accuracy is
    whatever float arithmetic gives, which is why no verdict uses this.
    """
    a = [[float(v) for v in row] for row in evaluate_block(block, q0)]
    size = len(a)
    for _ in range(sweeps):
        off = 0.0
        for i in range(size):
            for j in range(i + 1, size):
                off += a[i][j] * a[i][j]
        if off < 1e-24:
            break
        for i in range(size):
            for j in range(i + 1, size):
                if a[i][j] == 0.0:
                    continue
                theta = (a[j][j] - a[i][i]) / (2.0 * a[i][j])
                sign = 1.0 if theta >= 0 else -1.0
                t = sign / (abs(theta) + (theta * theta + 1.0) ** 0.5)
                c = 1.0 / (t * t + 1.0) ** 0.5
                s = t * c
                for k in range(size):
                    aik, ajk = a[i][k], a[j][k]
                    a[i][k] = c * aik - s * ajk
                    a[j][k] = s * aik + c * ajk
                for k in range(size):
                    aki, akj = a[k][i], a[k][j]
                    a[k][i] = c * aki - s * akj
                    a[k][j] = s * aki + c * akj
    return sorted(a[i][i] for i in range(size))
