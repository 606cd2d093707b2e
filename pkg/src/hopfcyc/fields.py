"""Exact scalar fields.

The working field is the rationals, realized by :class:`fractions.Fraction`:
arbitrary-precision integers, positive denominator, reduced to lowest terms
after every operation, so canonical form is automatic and all arithmetic is
exact.  Small prime fields are available as well; they exist so structure
axioms can be checked in positive characteristic, while the homology layer
insists on characteristic zero.

Scalars serialize as ``"p/q"``, or ``"p"`` when the denominator is one.
"""

from fractions import Fraction

from .errors import ParseError


class Rationals:
    """The field of rational numbers, elements are ``Fraction`` values."""

    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"cannot coerce {value!r} into QQ")

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r}: {exc}") from None

    def format(self, value):
        return str(value)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class FpElement:
    """Residue modulo a prime, with field arithmetic."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime p.  Supported for axiom checking only."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def coerce(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ParseError("element of a different prime field")
            return value
        if isinstance(value, int):
            return FpElement(value, self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"cannot coerce {value!r} into {self.name}")

    def parse(self, text):
        frac = QQ.parse(text)
        if frac.denominator % self.p == 0:
            raise ParseError(f"{text!r} has no image in {self.name}")
        return FpElement(frac.numerator * pow(frac.denominator, -1, self.p), self.p)

    def format(self, value):
        return str(value.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return self.name


def GF(p):
    return PrimeField(p)
