"""Monic univariate polynomials over one exact field.

Coefficients are stored low-to-high: index ``i`` holds the coefficient of
``t^i``, and the leading coefficient 1 of ``t^n`` is implicit.  Only the
handful of operations the construction and its verification need are
provided; there is deliberately no general multiplication or division.
"""

from __future__ import annotations

from .errors import FieldMismatch, InvalidArgument
from .fields import Field, FieldElement

__all__ = ["MonicPoly", "poly_equal", "parse_poly"]


class MonicPoly:
    """``t^n + c_{n-1} t^{n-1} + ... + c_0`` with the leading 1 implicit.

    The degree-0 unit polynomial (empty coefficient tuple) is permitted
    only as the seed of ``mul_linear`` chains; build it with
    :meth:`MonicPoly.unit`.  Publicly constructed polynomials must have
    degree at least 1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = tuple(field.element(c) for c in coeffs)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("MonicPoly is immutable")

    @classmethod
    def unit(cls, field: Field) -> "MonicPoly":
        """The constant polynomial 1 (internal seed for mul_linear chains)."""
        return cls(field, ())

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def coeff(self, i: int) -> FieldElement:
        """Coefficient of t^i, including the implicit leading 1 at i = n."""
        if i == self.degree:
            return self.field.one()
        return self.coeffs[i]

    def eval(self, t: FieldElement) -> FieldElement:
        """Horner evaluation at ``t``."""
        t = self.field.element(t)
        acc = self.field.one()
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def mul_linear(self, root_shift: FieldElement) -> "MonicPoly":
        """Return ``(t - root_shift) * self``, monic of degree n + 1."""
        s = self.field.element(root_shift)
        old = self.coeffs
        n = len(old)
        new = []
        for i in range(n + 1):
            below = old[i - 1] if i >= 1 else self.field.zero()
            here = old[i] if i < n else self.field.one()
            new.append(below - s * here)
        # new[n] = old[n-1] - s*1, and the fresh leading 1 stays implicit
        return MonicPoly(self.field, new)

    def add_constant(self, k: FieldElement) -> "MonicPoly":
        """Return ``self + k`` (only the constant coefficient changes)."""
        if self.degree == 0:
            raise InvalidArgument("cannot shift the constant of the unit polynomial")
        k = self.field.element(k)
        return MonicPoly(self.field, (self.coeffs[0] + k,) + self.coeffs[1:])

    def __eq__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def coeff_strings(self) -> list:
        return [str(c) for c in self.coeffs]

    def pretty(self) -> str:
        """Human form, e.g. ``t^3 - 2*t + 5`` (GF(p) residues always print 0..p-1)."""
        n = self.degree
        if n == 0:
            return "1"
        parts = [_term("", 1, n)]
        for i in range(n - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            text = str(c)
            if text.startswith("-"):
                parts.append(" - " + _term(text[1:], _abs_is_one(text[1:]), i))
            else:
                parts.append(" + " + _term(text, _abs_is_one(text), i))
        return "".join(parts)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"MonicPoly({self.field.code}, [{', '.join(self.coeff_strings())}])"


def _abs_is_one(text: str) -> bool:
    return text == "1"


def _term(coeff_text: str, coeff_is_one: bool, power: int) -> str:
    if power == 0:
        return coeff_text
    t = "t" if power == 1 else f"t^{power}"
    if coeff_is_one:
        return t
    return f"{coeff_text}*{t}"


def poly_equal(f: MonicPoly, g: MonicPoly) -> bool:
    """Exact equality of same-field monic polynomials."""
    if f.field != g.field:
        raise FieldMismatch("comparing polynomials over different fields")
    return f.degree == g.degree and f.coeffs == g.coeffs


def parse_poly(field: Field, text: str) -> MonicPoly:
    """Parse the CLI coefficient list "c0,c1,...,c_{n-1}" (monic implicit)."""
    items = [part for part in text.split(",")]
    if len(items) == 1 and not items[0].strip():
        raise InvalidArgument("polynomial needs at least one coefficient")
    return MonicPoly(field, [field.parse(part) for part in items])
