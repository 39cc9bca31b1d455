"""Exact ordered-field arithmetic.

Rationals are plain :class:`fractions.Fraction` values.  Elements of a real
quadratic extension Q(sqrt k) are :class:`QuadExt` instances; they mix freely
with ``int`` and ``Fraction`` operands, which are promoted.  Every value is
kept in canonical form, so equality is structural.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = [
    "DivisionByZero",
    "FieldMode",
    "IncompatibleExtensions",
    "NegativeInput",
    "NotRepresentable",
    "Ordering",
    "QuadExt",
    "cmp",
    "format_element",
    "is_square_free",
    "parse_element",
    "sqrt_exact",
    "to_field",
]


class DivisionByZero(ZeroDivisionError):
    pass


class IncompatibleExtensions(ValueError):
    """Operands live in different quadratic extensions."""


class NotRepresentable(ArithmeticError):
    """The requested square root is not an element of the current field."""


class NegativeInput(ValueError):
    pass


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def is_square_free(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % (f * f) == 0:
            return False
        f += 1
    return True


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@total_ordering
class QuadExt:
    """The number ``a + b*sqrt(k)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b", "k")

    def __init__(self, a, b, k: int):
        if not is_square_free(k):
            raise ValueError(f"k must be a square-free integer >= 2, got {k}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.k = k

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.k != self.k:
                raise IncompatibleExtensions(
                    f"cannot combine elements of Q(√{self.k}) and Q(√{other.k})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.k)
        return None

    def __repr__(self) -> str:
        return f"QuadExt({self.a!s}, {self.b!s}, {self.k})"

    def __str__(self) -> str:
        return format_element(self)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.k)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.k)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.k)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.k * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.k)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.k)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - k*b**2``; zero only for the zero element."""
        return self.a * self.a - self.k * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(√%d)" % self.k)
        p = self * o.conjugate()
        return QuadExt(p.a / n, p.b / n, self.k)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return QuadExt(1, 0, self.k) / (self ** -n)
        out = QuadExt(1, 0, self.k)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a**2 with k*b**2 (never equal, k square-free)
        bigger_a = a * a > self.k * b * b
        if a > 0:
            return 1 if bigger_a else -1
        return -1 if bigger_a else 1

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.k == other.k and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.k))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __abs__(self):
        return -self if self.sign() < 0 else self


FieldElement = Union[Fraction, QuadExt]


def cmp(x, y) -> Ordering:
    """Three-way exact comparison; raises on mixed extensions."""
    if isinstance(x, QuadExt):
        s = (x - y).sign()
    elif isinstance(y, QuadExt):
        s = -(y - x).sign()
    else:
        d = Fraction(x) - Fraction(y)
        s = (d > 0) - (d < 0)
    return Ordering(s)


@dataclass(frozen=True)
class FieldMode:
    """Which field new elements are created in: Q (``k is None``) or Q(sqrt k)."""

    k: int | None = None

    def __post_init__(self):
        if self.k is not None and not is_square_free(self.k):
            raise ValueError(f"extension degree parameter must be square-free >= 2, got {self.k}")

    @classmethod
    def parse(cls, text: str) -> FieldMode:
        text = text.strip().lower()
        if text in ("rational", "q"):
            return cls()
        m = re.fullmatch(r"quadext:(\d+)", text)
        if not m:
            raise ValueError(f"unknown field mode {text!r}; use 'rational' or 'quadext:K'")
        return cls(int(m.group(1)))

    @property
    def name(self) -> str:
        return "rational" if self.k is None else f"quadext:{self.k}"

    def __call__(self, x) -> FieldElement:
        return to_field(x, self.k)


def to_field(x, k: int | None = None) -> FieldElement:
    """Coerce ``x`` (int, Fraction, QuadExt or string) into the given field."""
    if isinstance(x, str):
        x = parse_element(x)
    if isinstance(x, QuadExt):
        if k is None:
            if x.b != 0:
                raise IncompatibleExtensions(f"{x} is not rational")
            return x.a
        if x.k != k and x.b != 0:
            raise IncompatibleExtensions(f"{x} is not in Q(√{k})")
        return QuadExt(x.a, x.b, k)
    if isinstance(x, float):
        raise TypeError("floats are not exact field elements")
    if k is None:
        return Fraction(x)
    return QuadExt(x, 0, k)


def sqrt_exact(x, k: int | None = None) -> FieldElement:
    """Exact nonnegative square root of ``x``.

    ``k`` selects Q(sqrt k); a :class:`QuadExt` argument brings its own.
    Raises :class:`NotRepresentable` when the root is not in the field.
    """
    if isinstance(x, QuadExt):
        k = x.k
    if cmp(x, 0) < 0:
        raise NegativeInput(f"square root of negative element {format_element(x)}")
    if k is None:
        r = _rational_sqrt(Fraction(x))
        if r is None:
            raise NotRepresentable(f"{format_element(x)} has no square root in Q")
        return r
    q = to_field(x, k)
    a, b = q.a, q.b
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return QuadExt(r, 0, k)
        r = _rational_sqrt(a / k)
        if r is not None:
            return QuadExt(0, r, k)
        raise NotRepresentable(f"{format_element(a)} has no square root in Q(√{k})")
    # (c + e√k)^2 = a + b√k  <=>  c^2 + k e^2 = a, 2ce = b
    m = _rational_sqrt(a * a - k * b * b)
    if m is not None:
        for c2 in ((a + m) / 2, (a - m) / 2):
            c = _rational_sqrt(c2)
            if c:
                root = QuadExt(c, b / (2 * c), k)
                return root if root.sign() >= 0 else -root
    raise NotRepresentable(f"{format_element(q)} has no square root in Q(√{k})")


def _format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_element(x) -> str:
    """Text encoding: ``num/den`` (den omitted when 1) or ``a+b√k``."""
    if isinstance(x, QuadExt):
        b = _format_rational(x.b)
        sep = "" if b.startswith("-") else "+"
        return f"{_format_rational(x.a)}{sep}{b}√{x.k}"
    return _format_rational(x)


_RATIONAL = r"[+-]?\d+(?:/\d+)?"


def _parse_coefficient(t: str) -> Fraction:
    if t in ("", "+"):
        return Fraction(1)
    if t == "-":
        return Fraction(-1)
    return Fraction(t)


def parse_element(text: str) -> FieldElement:
    """Inverse of :func:`format_element`.  Also accepts ``sqrt`` for ``√``."""
    s = text.strip().replace(" ", "")
    if re.fullmatch(_RATIONAL, s):
        return Fraction(s)
    m = re.fullmatch(r"(?P<left>.*?)(?:√|sqrt)\(?(?P<k>\d+)\)?", s)
    if not m:
        raise ValueError(f"cannot parse field element {text!r}")
    left = m.group("left")
    split = max(left.rfind("+"), left.rfind("-"))
    try:
        if split <= 0:
            a, b = Fraction(0), _parse_coefficient(left)
        else:
            a, b = Fraction(left[:split]), _parse_coefficient(left[split:])
    except ValueError:
        raise ValueError(f"cannot parse field element {text!r}") from None
    return QuadExt(a, b, int(m.group("k")))
