"""Exact field arithmetic: arbitrary-precision rationals and prime fields GF(p).

Every other module in the package is generic over the two field kinds
defined here.  A :class:`Field` object knows how to create, combine and
format payload values; a :class:`FieldElement` pairs one payload with its
field and exposes the usual operator protocol.

Canonical forms are maintained after every operation:

* rationals ride on :class:`fractions.Fraction`, so they are always in
  lowest terms with a positive denominator;
* GF(p) residues are plain ints fully reduced into ``[0, p)``.

Equality is structural on the canonical form.  Mixing elements of
different fields raises :class:`~diagcomp.errors.FieldMismatch` rather
than silently coercing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InvalidArgument

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "FieldElement",
    "RATIONALS",
    "parse_field",
    "is_prime",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (fine for desk-scale p)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Abstract field of scalars; use :class:`Rationals` or :class:`PrimeField`."""

    # short text code used by the CLI ("Q", "GF:7")
    code: str = "?"

    # --- payload-level arithmetic, provided by subclasses -------------------

    def _coerce(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _format(self, a) -> str:
        return str(a)

    def _parse(self, text: str):
        raise NotImplementedError

    # --- public element factory ---------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce ``value`` (int, Fraction, or same-field element) into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value.field} value into {self}")
            return value
        return FieldElement(self, self._coerce(value))

    # calling the field is shorthand for .element(), e.g. GF7(3)
    __call__ = element

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def parse(self, text: str) -> "FieldElement":
        """Parse the CLI text form of one element ("3", "-4/7", "12")."""
        return FieldElement(self, self._parse(text.strip()))

    def random_element(self, rng) -> "FieldElement":
        raise NotImplementedError

    def __repr__(self):
        return self.code


class Rationals(Field):
    """The field of arbitrary-precision rational numbers."""

    code = "Q"

    def _coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise InvalidArgument(f"cannot interpret {value!r} as a rational")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def _format(self, a) -> str:
        return str(a)  # Fraction prints "num/den", or "num" when den == 1

    def _parse(self, text: str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"bad rational literal {text!r}") from exc

    def random_element(self, rng, num_range=(-9, 9), den_range=(1, 9)) -> "FieldElement":
        """Random small rational; numerator/denominator bounds are inclusive."""
        num = rng.randint(*num_range)
        den = rng.randint(*den_range)
        return FieldElement(self, Fraction(num, den))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(Rationals)


class PrimeField(Field):
    """The prime field GF(p) of residues modulo a prime p."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or not is_prime(modulus):
            raise InvalidArgument(f"modulus {modulus!r} is not a prime")
        self.modulus = modulus
        self.code = f"GF:{modulus}"

    def _coerce(self, value):
        if isinstance(value, int):
            return value % self.modulus
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.modulus
            raise InvalidArgument(f"cannot embed non-integer {value} into {self}")
        raise InvalidArgument(f"cannot interpret {value!r} as a residue mod {self.modulus}")

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _sub(self, a, b):
        return (a - b) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, self.modulus - 2, self.modulus)

    def _parse(self, text: str):
        try:
            return int(text, 10) % self.modulus
        except ValueError as exc:
            raise InvalidArgument(f"bad residue literal {text!r}") from exc

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.modulus))

    def elements(self):
        """Iterate over all residues (used by exhaustive enumerations)."""
        for r in range(self.modulus):
            yield FieldElement(self, r)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash((PrimeField, self.modulus))


RATIONALS = Rationals()


def parse_field(text: str) -> Field:
    """Parse a field code: "Q" for the rationals, "GF:p" for a prime field."""
    text = text.strip()
    if text == "Q":
        return RATIONALS
    if text.startswith("GF:"):
        try:
            p = int(text[3:], 10)
        except ValueError as exc:
            raise InvalidArgument(f"bad field code {text!r}") from exc
        return PrimeField(p)
    raise InvalidArgument(f"bad field code {text!r} (expected 'Q' or 'GF:p')")


class FieldElement:
    """One immutable scalar plus the field it lives in.

    Supports ``+ - * / ==``, unary ``-``, and ``.inverse()``.  Operations
    between elements of different fields raise :class:`FieldMismatch`.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _same_field(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} operand mixed with {other.field}")
            return other
        # bare ints are convenient in formulas (0, 1, small constants)
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(other.value, self.value))

    def __mul__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return not self

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"{self.field.code}({self})"
