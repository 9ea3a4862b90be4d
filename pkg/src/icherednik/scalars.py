"""Exact coefficient arithmetic: rationals and prime fields.

Every object in this package stores coefficients either as
`fractions.Fraction` (characteristic 0) or as `PrimeFieldElement`
(characteristic p).  Both are immutable, hashable and support the usual
operators, so the polynomial and word-algebra layers stay agnostic of the
ground field.  Field-level services (coercion, parsing of "p/q" strings,
printing) live on the `RationalField` / `PrimeField` objects.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeFieldElement:
    """A canonical residue modulo a fixed prime, with field arithmetic.

    Mixed arithmetic with `int` promotes the integer; mixing two different
    moduli raises.  Division uses the modular inverse.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("elements of different prime fields")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.residue - o.residue, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.residue - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.residue == 0:
            raise ZeroDivisionError("division by zero in prime field")
        inv = pow(o.residue, -1, self.modulus)
        return PrimeFieldElement(self.residue * inv, self.modulus)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, k: int):
        if k < 0:
            return (PrimeFieldElement(1, self.modulus) / self) ** (-k)
        return PrimeFieldElement(pow(self.residue, k, self.modulus), self.modulus)

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"{self.residue}"


class RationalField:
    """The rational numbers; elements are `fractions.Fraction`."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def to_str(self, x: Fraction) -> str:
        return str(x)

    def element_of(self, x) -> bool:
        return isinstance(x, Fraction)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with p elements, p prime."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise ValueError("element of a different prime field")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return PrimeFieldElement(value.numerator, self.p) / PrimeFieldElement(
                value.denominator, self.p
            )
        if isinstance(value, str):
            if "/" in value:
                num, den = value.split("/")
                return PrimeFieldElement(int(num), self.p) / PrimeFieldElement(
                    int(den), self.p
                )
            return PrimeFieldElement(int(value), self.p)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def to_str(self, x: PrimeFieldElement) -> str:
        return str(x.residue)

    def element_of(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.modulus == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of_characteristic(char: int):
    """Field object for a characteristic given as 0 or a prime."""
    return QQ if char == 0 else PrimeField(char)
