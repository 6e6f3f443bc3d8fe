"""Exact arithmetic in ZZ[q] and its fraction field.

Every scalar in this package is either an integer-coefficient polynomial in
the single variable q, or a reduced quotient of two such polynomials.  All
coefficients are arbitrary-precision integers, all quotients are kept in a
canonical reduced form, and equality is therefore structural.  Exact rational
numbers (used as evaluation points) are plain ``fractions.Fraction`` values.

Canonical string form, used verbatim by the CLI and the file exports: terms
ascending by degree, coefficient 1 elided, constant term printed bare, e.g.
``q^4 + q^5`` or ``1 - 2q + q^2``.  A quotient with nontrivial denominator is
printed ``(num)/(den)``.  ``parse_polynomial`` / ``parse_rational_function``
read the same grammar back.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

Rational = Fraction

# Schoolbook multiplication is faster below this size product; above it the
# coefficients are packed into big integers (see _pack_coeffs).
_PACK_THRESHOLD = 4096


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Dense univariate polynomial over ZZ.

    ``coeffs[i]`` is the coefficient of q**i.  Trailing zeros are stripped;
    the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def q(cls):
        return _Q

    @classmethod
    def constant(cls, c):
        return cls((int(c),))

    @classmethod
    def monomial(cls, degree, coeff=1):
        if coeff == 0:
            return _ZERO
        return cls((0,) * degree + (int(coeff),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        if len(a) * len(b) >= _PACK_THRESHOLD:
            return Polynomial(_mul_packed(a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative exponent on a polynomial")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def times_monomial(self, degree, coeff=1):
        """Return self * coeff * q**degree without a full convolution."""
        if coeff == 0 or self.is_zero:
            return _ZERO
        return Polynomial((0,) * degree + tuple(c * coeff for c in self.coeffs))

    def evaluate(self, point):
        """Exact value at a rational point, as a Fraction."""
        acc = Fraction(0)
        x = Fraction(point)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self):
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, abs(c))
        return g

    def primitive(self):
        """self divided by its content; zero stays zero."""
        g = self.content()
        if g in (0, 1):
            return self
        return Polynomial(tuple(c // g for c in self.coeffs))

    def divexact(self, other):
        """Exact quotient self/other in ZZ[q]; ValueError if division fails."""
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return _ZERO
        da, db = self.degree, other.degree
        if da < db:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        bc = other.coeffs
        lb = other.leading
        quot = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            c = rem[db + k]
            if c:
                t, r = divmod(c, lb)
                if r:
                    raise ValueError("inexact polynomial division")
                quot[k] = t
                for i, bi in enumerate(bc):
                    rem[k + i] -= t * bi
        if any(rem):
            raise ValueError("inexact polynomial division")
        return Polynomial(quot)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


_ZERO = Polynomial.__new__(Polynomial)
object.__setattr__(_ZERO, "coeffs", ())
_ONE = Polynomial.__new__(Polynomial)
object.__setattr__(_ONE, "coeffs", (1,))
_Q = Polynomial.__new__(Polynomial)
object.__setattr__(_Q, "coeffs", (0, 1))


def _mul_packed(a, b):
    """Multiply coefficient tuples by packing them into one big integer each.

    Coefficients are laid out in base 2**stride with balanced digits, so the
    integer product is the polynomial product as long as every product
    coefficient stays below 2**(stride-1) in magnitude; the stride is chosen
    from the operands to guarantee that.
    """
    bound = min(len(a), len(b)) * max(abs(c) for c in a) * max(abs(c) for c in b)
    stride = bound.bit_length() + 2
    return _unpack_int(_pack_coeffs(a, stride) * _pack_coeffs(b, stride), stride)


def _pack_coeffs(coeffs, stride):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << stride) + c
    return acc


def _unpack_int(value, stride):
    """Inverse of _pack_coeffs under the balanced-digit convention."""
    coeffs = []
    half = 1 << (stride - 1)
    mask = (1 << stride) - 1
    while value:
        d = value & mask
        if d >= half:
            d -= mask + 1
        coeffs.append(d)
        value = (value - d) >> stride
    return coeffs


def _prem(a, b):
    """Pseudo-remainder of a by b: lc(b)**(deg a - deg b + 1) * a  mod  b."""
    da, db = a.degree, b.degree
    if da < db:
        return a
    rem = list(a.coeffs)
    bc = b.coeffs
    lb = b.leading
    for k in range(da - db, -1, -1):
        c = rem[db + k]
        rem = [x * lb for x in rem]
        if c:
            for i, bi in enumerate(bc):
                rem[k + i] -= c * bi
    return Polynomial(rem[:db])


def _positive_primitive(p):
    p = p.primitive()
    if p.leading < 0:
        p = -p
    return p


def poly_gcd(a, b):
    """Primitive gcd in ZZ[q] with positive leading coefficient.

    Computed by the primitive pseudo-remainder sequence; gcd(0, b) is the
    positive primitive part of b.
    """
    if a.is_zero:
        return _positive_primitive(b)
    if b.is_zero:
        return _positive_primitive(a)
    a = a.primitive()
    b = b.primitive()
    while not b.is_zero:
        a, b = b, _prem(a, b).primitive()
    return _positive_primitive(a)


def poly_lcm(a, b):
    if a.is_zero or b.is_zero:
        return _ZERO
    g = poly_gcd(a, b)
    out = (a * b).divexact(g)
    if out.leading < 0:
        out = -out
    return out


class RationalFunction:
    """Reduced quotient num/den of two integer polynomials.

    Canonical form: gcd(num, den) = 1 over the rationals, the integer
    contents of num and den share no factor, and den has positive leading
    coefficient.  Instances are immutable and hashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = Polynomial.constant(num)
        if den is None:
            den = _ONE
        elif isinstance(den, int):
            den = Polynomial.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = _ZERO, _ONE
        elif den != _ONE:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            cg = _int_gcd(num.content(), den.content())
            if cg > 1:
                num = num.divexact(cg)
                den = den.divexact(cg)
            if den.leading < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def zero(cls):
        return RF_ZERO

    @classmethod
    def one(cls):
        return RF_ONE

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den == _ONE

    def as_polynomial(self):
        if self.den != _ONE:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return _rf_poly(self.num + other.num)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return _rf_poly(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        out = RF_ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def reciprocal(self):
        return RationalFunction(self.den, self.num)

    def evaluate(self, point):
        """Exact value at a rational point; raises ZeroDivisionError at a pole."""
        point = Fraction(point)
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {point}")
        return self.num.evaluate(point) / d

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _rf_poly(num):
    """Wrap a polynomial as a RationalFunction without running reduction."""
    out = RationalFunction.__new__(RationalFunction)
    object.__setattr__(out, "num", num)
    object.__setattr__(out, "den", _ONE)
    return out


def _coerce_rf(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return _rf_poly(value)
    if isinstance(value, int):
        return _rf_poly(Polynomial.constant(value))
    return NotImplemented


RF_ZERO = _rf_poly(_ZERO)
RF_ONE = _rf_poly(_ONE)


def parse_polynomial(text):
    """Parse the canonical polynomial grammar, e.g. ``1 - 2q + q^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs = {}
    i = 0
    first = True
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ValueError(f"expected sign in {text!r} at position {i}")
        first = False
        start = i
        while i < len(s) and s[i].isdigit():
            i += 1
        mag_str = s[start:i]
        degree = 0
        if i < len(s) and s[i] == "q":
            i += 1
            degree = 1
            if i < len(s) and s[i] == "^":
                i += 1
                dstart = i
                while i < len(s) and s[i].isdigit():
                    i += 1
                if i == dstart:
                    raise ValueError(f"missing exponent in {text!r}")
                degree = int(s[dstart:i])
        elif not mag_str:
            raise ValueError(f"malformed term in {text!r} at position {start}")
        mag = int(mag_str) if mag_str else 1
        coeffs[degree] = coeffs.get(degree, 0) + sign * mag
    if not coeffs:
        raise ValueError(f"no terms in {text!r}")
    size = max(coeffs) + 1
    out = [0] * size
    for d, c in coeffs.items():
        out[d] = c
    return Polynomial(out)


def parse_rational_function(text):
    """Parse either a bare polynomial or the canonical ``(num)/(den)`` form."""
    s = text.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        num_str, den_str = s[1:-1].split(")/(", 1)
        return RationalFunction(parse_polynomial(num_str), parse_polynomial(den_str))
    return _rf_poly(parse_polynomial(s))


def parse_rational(text):
    """Parse an exact rational number: an integer literal or ``p/q``.

    Decimal notation is rejected on purpose; exact inputs must be integers
    or quotients of integers.
    """
    s = text.strip()
    if "." in s:
        raise ValueError(f"decimal notation not accepted for exact input: {text!r}")
    return Fraction(s)
