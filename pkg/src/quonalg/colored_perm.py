"""Colored permutations, colored arrangements of a multiset, and the
colored-inversion statistic cinv.

A colored permutation on n positions with m colors is a pair of words: a
bijection of 1..n in one-line form and a color word over 1..m.  Color m is
the neutral color; it plays the role of 0 modulo m in all color arithmetic.
A colored arrangement replaces the bijection by a rearrangement of an
arbitrary multiset of positive integers, so the group elements are exactly
the arrangements of the multiset {1, ..., n}.

The right action of a colored permutation (perm, pcolors) on an arrangement
(values, colors) produces (values o perm, colors o perm + pcolors mod m);
group composition is the same formula applied to two permutations.

The enumeration order fixed here is part of the package contract (matrix
rows, CSV exports, and the CLI depend on it): value words ascend
lexicographically, and within one value word the colors are driven by a
counter over the value slots.  Slot k means the k-th smallest multiset
element (ties broken left to right), each slot's digit runs through
(m, 1, 2, ..., m-1), slot 1 is the fastest digit and slot n the slowest,
and the position holding slot k's value receives that slot's digit.  The
all-neutral coloring therefore comes first, and for the identity value word
slots coincide with positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product


@dataclass(frozen=True)
class ColoredArrangement:
    """A rearrangement of a multiset of positive integers, with colors."""

    m: int
    values: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def n(self):
        return len(self.values)

    @property
    def multiset(self):
        return tuple(sorted(self.values))

    @property
    def tokens(self):
        """The (value, color) pairs in position order."""
        return tuple(zip(self.values, self.colors))

    def validate(self):
        if self.m < 1:
            raise ValueError(f"color count must be >= 1, got {self.m}")
        if len(self.colors) != len(self.values):
            raise ValueError("values and colors must have equal length")
        if any(v < 1 for v in self.values):
            raise ValueError(f"values must be positive: {self.values}")
        if any(not 1 <= c <= self.m for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.m}: {self.colors}")
        return self

    def __str__(self):
        return word_str(self.tokens)


@dataclass(frozen=True)
class ColoredPermutation(ColoredArrangement):
    """A colored arrangement whose value word is a bijection of 1..n."""

    def validate(self):
        super().validate()
        if sorted(self.values) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.values}")
        return self

    @classmethod
    def neutral(cls, m, n):
        """The group identity: identity word, every color neutral."""
        return cls(m, tuple(range(1, n + 1)), (m,) * n)


def word_str(tokens):
    """Render (value, color) pairs as ``(v,c)(v,c)...``; empty word is ``()``."""
    if not tokens:
        return "()"
    return "".join(f"({v},{c})" for v, c in tokens)


def parse_word(text):
    """Parse ``(v,c)(v,c)...`` into a tuple of (value, color) pairs.

    The empty word may be written ``""`` or ``()``.
    """
    s = text.replace(" ", "")
    if s in ("", "()"):
        return ()
    tokens = []
    i = 0
    while i < len(s):
        if s[i] != "(":
            raise ValueError(f"expected '(' at position {i} in {text!r}")
        close = s.find(")", i)
        if close < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        body = s[i + 1 : close].split(",")
        if len(body) != 2:
            raise ValueError(f"expected '(value,color)' in {text!r}")
        tokens.append((int(body[0]), int(body[1])))
        i = close + 1
    return tuple(tokens)


def arrangement_from_word(m, tokens):
    values = tuple(v for v, _ in tokens)
    colors = tuple(c for _, c in tokens)
    return ColoredArrangement(m, values, colors).validate()


def cinv(pi):
    """Colored inversions: inversions of the value word plus the number of
    positions carrying a non-neutral color."""
    values = pi.values
    n = len(values)
    inv = 0
    for i in range(n):
        vi = values[i]
        for j in range(i + 1, n):
            if vi > values[j]:
                inv += 1
    return inv + sum(1 for c in pi.colors if c != pi.m)


def act(theta, pi):
    """Right action of the colored permutation pi on the arrangement theta.

    Position i of the result takes theta's value at position pi(i), and its
    color is the mod-m sum of theta's color there and pi's color at i
    (representatives chosen in 1..m).  Returns the same type as theta, so
    acting on a ColoredPermutation yields the group composition.
    """
    if theta.n != pi.n:
        raise ValueError(f"length mismatch: {theta.n} vs {pi.n}")
    if theta.m != pi.m:
        raise ValueError(f"color-count mismatch: {theta.m} vs {pi.m}")
    m = theta.m
    tv, tc = theta.values, theta.colors
    new_values = tuple(tv[s - 1] for s in pi.values)
    new_colors = tuple(
        (tc[s - 1] + c - 1) % m + 1 for s, c in zip(pi.values, pi.colors)
    )
    return type(theta)(m, new_values, new_colors)


def compose(a, b):
    """Group composition in the colored permutation group: act(a, b)."""
    return act(a, b)


def inverse(pi):
    """The group inverse: compose(pi, inverse(pi)) is the neutral element."""
    n = pi.n
    m = pi.m
    inv_values = [0] * n
    for i, s in enumerate(pi.values):
        inv_values[s - 1] = i + 1
    inv_colors = tuple(
        (-pi.colors[inv_values[i] - 1]) % m or m for i in range(n)
    )
    return ColoredPermutation(m, tuple(inv_values), inv_colors)


def decompose(pi):
    """Split pi into a neutral-colored part and a pure color part.

    Returns (perm_part, color_part) with perm_part carrying pi's value word
    and all-neutral colors, color_part carrying the identity word and pi's
    colors; act(perm_part, color_part) == pi and cinv is additive across the
    pair.
    """
    m, n = pi.m, pi.n
    perm_part = ColoredPermutation(m, pi.values, (m,) * n)
    color_part = ColoredPermutation(m, tuple(range(1, n + 1)), pi.colors)
    return perm_part, color_part


def color_cycle_order(m):
    """Per-position color enumeration order: neutral first, then 1..m-1."""
    return (m,) + tuple(range(1, m))


def as_multiset(values):
    """Canonical multiset form: ascending tuple of positive integers."""
    ms = tuple(sorted(values))
    if any(not isinstance(v, int) or v < 1 for v in ms):
        raise ValueError(f"multiset entries must be positive integers: {values}")
    return ms


def _slot_map(word):
    """Position -> 1-based slot of the sorted multiset, ties left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    st = [0] * len(word)
    for slot, i in enumerate(order, start=1):
        st[i] = slot
    return tuple(st)


@lru_cache(maxsize=None)
def _enumerate(m, multiset, as_group):
    if m < 1:
        raise ValueError(f"color count must be >= 1, got {m}")
    n = len(multiset)
    value_words = sorted(set(permutations(multiset)))
    # Counter tuples indexed by slot, slot 1 fastest.
    counters = [w[::-1] for w in product(color_cycle_order(m), repeat=n)]
    cls = ColoredPermutation if as_group else ColoredArrangement
    out = []
    for word in value_words:
        slots = _slot_map(word)
        for counter in counters:
            colors = tuple(counter[slots[i] - 1] for i in range(n))
            out.append(cls(m, word, colors))
    return tuple(out)


def enumerate_arrangements(m, multiset):
    """All colored arrangements of the multiset, in the canonical order."""
    return _enumerate(m, as_multiset(multiset), False)


def enumerate_group(m, n):
    """All m**n * n! colored permutations on n positions, canonical order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _enumerate(m, tuple(range(1, n + 1)), True)


def color_shift(m, n, pos, amount=1):
    """The pure color element shifting the color at one position.

    With amount = 1 this is the generator of the cyclic color subgroup at
    ``pos``; general amounts give its powers (amount is taken mod m).
    """
    if not 1 <= pos <= n:
        raise ValueError(f"position {pos} outside 1..{n}")
    colors = [m] * n
    colors[pos - 1] = amount % m or m
    return ColoredPermutation(m, tuple(range(1, n + 1)), tuple(colors))


def insertion_cycle(m, n, j, k):
    """The neutral-colored cycle sending j -> j-1 -> ... -> k -> j.

    In one-line form this is the word 1, ..., k-1, j, k, ..., j-1 followed by
    the fixed points j+1..n: it inserts the value j at position k.  Its
    inversion count is j - k.
    """
    if not 1 <= k <= j <= n:
        raise ValueError(f"need 1 <= k <= j <= n, got k={k}, j={j}, n={n}")
    word = list(range(1, n + 1))
    word[k - 1 : j] = [j] + list(range(k, j))
    return ColoredPermutation(m, tuple(word), (m,) * n)
