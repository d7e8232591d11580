"""Exact scalars: rationals, Eisenstein numbers a + b*w, rational quaternions.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  ``EisScalar`` stores the pair (a, b) for a + b*w with
w = exp(2*pi*i/3), so w**2 = -1 - w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class EisScalar:
    """(a + b*w) over Q, held as integers ``(na + nb*w) / den`` in lowest terms."""

    __slots__ = ("_na", "_nb", "_den")

    def __init__(self, a: Number = 0, b: Number = 0):
        a, b = Fraction(a), Fraction(b)
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        self._na = a.numerator * (den // a.denominator)
        self._nb = b.numerator * (den // b.denominator)
        self._den = den

    @classmethod
    def _raw(cls, na: int, nb: int, den: int) -> "EisScalar":
        if den != 1:
            g = gcd(na, nb, den)
            if g != 1:
                na, nb, den = na // g, nb // g, den // g
        self = object.__new__(cls)
        self._na, self._nb, self._den = na, nb, den
        return self

    @property
    def a(self) -> Fraction:
        return Fraction(self._na, self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._nb, self._den)

    @classmethod
    def coerce(cls, x) -> "EisScalar":
        if isinstance(x, EisScalar):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Fraction):
            return cls._raw(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to EisScalar")

    def __add__(self, other):
        if not isinstance(other, EisScalar):
            try:
                other = EisScalar.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return EisScalar._raw(self._na + other._na, self._nb + other._nb, d1)
        return EisScalar._raw(
            self._na * d2 + other._na * d1, self._nb * d2 + other._nb * d1, d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return EisScalar._raw(-self._na, -self._nb, self._den)

    def __sub__(self, other):
        if not isinstance(other, EisScalar):
            try:
                other = EisScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, EisScalar):
            try:
                other = EisScalar.coerce(other)
            except TypeError:
                return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        a, b, c, d = self._na, self._nb, other._na, other._nb
        bd = b * d
        return EisScalar._raw(a * c - bd, a * d + b * c - bd, self._den * other._den)

    __rmul__ = __mul__

    def conj(self) -> "EisScalar":
        # conj(w) = w^2 = -1 - w
        return EisScalar._raw(self._na - self._nb, -self._nb, self._den)

    def norm(self) -> Fraction:
        """|x|^2 = a^2 - ab + b^2."""
        a, b = self._na, self._nb
        return Fraction(a * a - a * b + b * b, self._den * self._den)

    def inverse(self) -> "EisScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("EisScalar division by zero")
        return self.conj() * EisScalar.coerce(1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * EisScalar.coerce(1 / Fraction(other))
        if not isinstance(other, EisScalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return self._na != 0 or self._nb != 0

    def __eq__(self, other):
        if isinstance(other, EisScalar):
            return self._na == other._na and self._nb == other._nb and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self._nb == 0 and Fraction(self._na, self._den) == other
        return NotImplemented

    def __hash__(self):
        return hash((self._na, self._nb, self._den))

    def __reduce__(self):
        return (EisScalar, (self.a, self.b))

    def is_rational(self) -> bool:
        return self._nb == 0

    def __str__(self):
        return f"{fmt_rational(self.a)}+{fmt_rational(self.b)}*w"

    def __repr__(self):
        return f"EisScalar({self})"

    def short(self) -> str:
        """Compact form such as ``1``, ``-w``, ``wb`` or ``2-1/2w``."""
        a, b = self.a, self.b
        if b == 0:
            return fmt_rational(a)
        if a == b:
            # a + a*w = -a*wbar
            return {-1: "wb", 1: "-wb"}.get(a, f"{fmt_rational(-a)}wb")
        coef = {1: "", -1: "-"}.get(b, fmt_rational(b))
        if a == 0:
            return f"{coef}w"
        if b > 0:
            coef = "+" + coef
        return f"{fmt_rational(a)}{coef}w"

    @classmethod
    def parse(cls, text: str) -> "EisScalar":
        """Inverse of ``str``: ``"a+b*w"``."""
        text = text.strip()
        if not text.endswith("*w"):
            raise ValueError(f"bad EisScalar literal {text!r}")
        body = text[:-2]
        # the '+' separating a from b; a may itself start with '-'
        idx = body.find("+", 1)
        if idx < 0:
            raise ValueError(f"bad EisScalar literal {text!r}")
        return cls(Fraction(body[:idx]), Fraction(body[idx + 1:]))


ZERO = EisScalar(0, 0)
ONE = EisScalar(1, 0)
OMEGA = EisScalar(0, 1)
OMEGA_BAR = EisScalar(-1, -1)
THETA = EisScalar(1, 2)  # w - wbar = sqrt(-3)


def eis_mul(x: EisScalar, y: EisScalar) -> EisScalar:
    return x * y


def eis_conj(x: EisScalar) -> EisScalar:
    return x.conj()


@dataclass(frozen=True, slots=True)
class Quaternion:
    """w + x i + y j + z k over Q (Hamilton: i^2 = j^2 = k^2 = ijk = -1)."""

    w: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, o):
        if isinstance(o, (int, Fraction)):
            o = Quaternion(o)
        if not isinstance(o, Quaternion):
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Quaternion(self.w * o, self.x * o, self.y * o, self.z * o)
        if not isinstance(o, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = o.w, o.x, o.y, o.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * o
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quaternion division by zero")
        return self.conjugate() * (1 / Fraction(n))

    def star(self) -> "Quaternion":
        """Automorphism negating i and swapping j with -k."""
        return Quaternion(self.w, -self.x, -self.z, -self.y)

    def __bool__(self):
        return any(self.coeffs())

    def __str__(self):
        w, x, y, z = (fmt_rational(c) for c in self.coeffs())
        return f"{w}+{x}i+{y}j+{z}k".replace("+-", "-")

    def __repr__(self):
        return f"Quaternion({self})"

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        """Parse the ``w+xi+yj+zk`` form produced by ``str``."""
        import re

        m = re.fullmatch(
            r"\s*([+-]?[\d/]+)([+-][\d/]+)i([+-][\d/]+)j([+-][\d/]+)k\s*", text
        )
        if not m:
            raise ValueError(f"bad quaternion literal {text!r}")
        return cls(*(Fraction(g) for g in m.groups()))


Q1 = Quaternion(1)
QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)
# quaternion w = (-1+i+j+k)/2; never interchangeable with the complex OMEGA
Q_OMEGA = Quaternion(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
Q_OMEGA_BAR = Q_OMEGA * Q_OMEGA


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q
