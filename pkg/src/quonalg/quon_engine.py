"""Annihilation/creation operator words and vacuum expectation values.

States are kept in creator-only normal form: a CreatorState maps creator
words (tuples of (mode, color) pairs, outermost creator first) to
RationalFunction coefficients.  Applying an annihilator a_{j,l} to a creator
word sums, over every position u whose creator mode is j, the word with that
creator deleted, weighted by q**(u-1) * q**color_mismatch; a word with no
matching mode contributes nothing, and annihilators kill the vacuum.  This
is enough to evaluate any vacuum expectation, because the annihilators of
the bra can be removed one at a time from the right.

Word-order convention, also used by the CLI: a bra or ket string lists the
operators exactly as written left to right in the bracket.  The ket word
(i1,k1)(i2,k2)... denotes the creators applied left to right, and the bra
word (j1,l1)(j2,l2)... denotes the annihilators as written, so the LAST pair
of the bra string is the innermost annihilator and is applied first.

The same expectations have a purely combinatorial form: the inner product of
two arrangements of a common multiset is the q**cinv generating sum over the
colored permutations carrying the ket arrangement to the bra arrangement
(``cosym_expectation``), which is independent of the rewriting path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import Polynomial, RationalFunction
from .colored_perm import act, cinv, enumerate_group


def color_mismatch(creator_color, annihilator_color, m):
    """1 if the two colors differ mod m, else 0.

    This is the exponent of the extra q in the contraction of a creator and
    an annihilator of the same mode; color m is congruent to 0.
    """
    return 0 if (annihilator_color - creator_color) % m == 0 else 1


@dataclass(frozen=True)
class CreatorState:
    """Finite combination of creator-only words applied to the vacuum."""

    m: int
    terms: dict

    def coeff(self, word):
        return self.terms.get(tuple(word), RationalFunction.zero())

    @property
    def is_zero(self):
        return not self.terms


def creator_state(m, word, coeff=None):
    """The state of a single creator word (outermost creator first)."""
    word = tuple((int(v), int(c)) for v, c in word)
    for _, c in word:
        if not 1 <= c <= m:
            raise ValueError(f"color {c} outside 1..{m}")
    if coeff is None:
        coeff = RationalFunction.one()
    if coeff.is_zero:
        return CreatorState(m, {})
    return CreatorState(m, {word: coeff})


def apply_annihilator(mode, color, state):
    """Normal-order one annihilator a_{mode,color} into a creator state.

    Each creator word contributes, for every position u (1-based) holding the
    annihilated mode, the word with that position removed, weighted by
    q**(u - 1 + color_mismatch).  Words without the mode vanish, as does the
    empty word.
    """
    m = state.m
    if not 1 <= color <= m:
        raise ValueError(f"color {color} outside 1..{m}")
    q = Polynomial.q()
    out = {}
    for word, coeff in state.terms.items():
        for u, (cmode, ccolor) in enumerate(word, start=1):
            if cmode != mode:
                continue
            weight = coeff * q ** (u - 1 + color_mismatch(ccolor, color, m))
            shorter = word[: u - 1] + word[u:]
            acc = out.get(shorter)
            out[shorter] = weight if acc is None else acc + weight
    return CreatorState(m, {w: c for w, c in out.items() if not c.is_zero})


def vacuum_expectation(bra, ket, m):
    """Exact value of <vacuum| (bra annihilators) (ket creators) |vacuum>.

    ``bra`` and ``ket`` are sequences of (mode, color) pairs in the written
    order described in the module docstring.  The result is always a
    polynomial; it is returned as a RationalFunction with denominator one.
    """
    state = creator_state(m, ket)
    for mode, color in reversed(tuple(bra)):
        if state.is_zero:
            break
        state = apply_annihilator(mode, color, state)
    value = state.coeff(())
    assert value.is_polynomial, "expectation produced a true quotient"
    return value


def cosym_expectation(theta_bra, theta_ket):
    """Combinatorial form of the same inner product.

    Sums q**cinv over all colored permutations pi with
    act(theta_ket, pi) == theta_bra.  If the two arrangements draw on
    different multisets (or lengths) the sum is empty and the value is 0,
    matching the operator computation.
    """
    if theta_bra.m != theta_ket.m:
        raise ValueError(f"color-count mismatch: {theta_bra.m} vs {theta_ket.m}")
    if theta_bra.multiset != theta_ket.multiset:
        return RationalFunction.zero()
    total = Polynomial.zero()
    q = Polynomial.q()
    for pi in enumerate_group(theta_ket.m, theta_ket.n):
        if act(theta_ket, pi) == theta_bra:
            total = total + q ** cinv(pi)
    return RationalFunction(total)
