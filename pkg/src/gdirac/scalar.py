"""Exact arithmetic in the real quadratic field Q(sqrt2).

Every amplitude produced by the operators in this package lies in
Q(sqrt2): the Clifford generators carry a factor sqrt(2) and the Dirac
operator carries 1/2, and nothing else ever enters.  Working in this
field turns every identity check in the test suite into an exact
equality with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RatLike = int | Fraction


@dataclass(frozen=True, slots=True)
class Scalar:
    """The element ``a + b*sqrt(2)`` with rational ``a``, ``b``.

    Fractions are kept reduced with positive denominator (guaranteed by
    ``fractions.Fraction``), so equality is structural.
    """

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a: RatLike = 0, b: RatLike = 0) -> "Scalar":
        return Scalar(Fraction(a), Fraction(b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    @staticmethod
    def from_int(n: int) -> "Scalar":
        return Scalar(Fraction(n), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __add__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "Scalar") -> "Scalar":
        return _coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __mul__(self, other: "Scalar | RatLike") -> "Scalar":
        other = _coerce(other)
        # (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r,  r = sqrt(2)
        return Scalar(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        norm = self.a * self.a - 2 * self.b * self.b
        if not norm:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return Scalar(self.a / norm, -self.b / norm)

    def __truediv__(self, other: "Scalar | RatLike") -> "Scalar":
        return self * _coerce(other).inverse()

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(2), computed exactly."""
        if not self.a and not self.b:
            return 0
        if self.a >= 0 and self.b >= 0:
            return 1
        if self.a <= 0 and self.b <= 0:
            return -1
        # Mixed signs: compare a^2 with 2 b^2 (equality impossible for
        # nonzero rationals since sqrt(2) is irrational).
        if self.a > 0:
            return 1 if self.a * self.a > 2 * self.b * self.b else -1
        return -1 if self.a * self.a > 2 * self.b * self.b else 1

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    def __lt__(self, other: "Scalar | RatLike") -> bool:
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other: "Scalar | RatLike") -> bool:
        return (self - _coerce(other)).sign() <= 0

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        sep = "-" if self.b < 0 else "+"
        return f"{self.a}{sep}{abs(self.b)}√2"

    def __repr__(self) -> str:
        return f"Scalar({self.a!r}, {self.b!r})"


def _coerce(x: "Scalar | RatLike") -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(Fraction(x), Fraction(0))


ZERO = Scalar.of(0)
ONE = Scalar.of(1)
TWO = Scalar.of(2)
HALF = Scalar.of(Fraction(1, 2))
SQRT2 = Scalar.of(0, 1)
HALF_SQRT2 = Scalar.of(0, Fraction(1, 2))


def scalar_arith(x: Scalar, y: Scalar | None, op: str) -> Scalar:
    """Dispatch table for the four field operations plus negation.

    There is no conjugation: the field is real, so the inner products
    built on it degenerate to bilinear forms.
    """
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    raise ValueError(f"unknown scalar op {op!r}")
