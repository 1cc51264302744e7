"""Exact scalars a + b*sqrt(d) with rational a, b and a fixed square-free d.

Every geometric quantity in the package (projections, window offsets, cone
witnesses, pattern coordinates) is a FieldScalar, so all comparisons reduce
to integer arithmetic and nothing ever touches floating point on a decision
path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

_SQRT_RE = re.compile(
    r"^(?:(?P<a>[+-]?\d+(?:/\d+)?)(?P<op>[+-]))?"
    r"(?P<bsign>[+-])?(?P<b>\d+(?:/\d+)?)?\*?sqrt\((?P<d>\d+)\)$"
)


def _is_square_free(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class FieldScalar:
    """Immutable element a + b*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, a, b=0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d != 1 and not _is_square_free(d):
            raise ValueError(f"discriminant {d} is not a square-free positive integer")
        if d == 1:
            a, b = a + b, Fraction(0)
        elif b == 0:
            d = d  # keep the ambient field even for rational values
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("FieldScalar is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def rational(cls, value, d: int = 1) -> "FieldScalar":
        return cls(Fraction(value), 0, d)

    @classmethod
    def sqrt_term(cls, coeff, d: int) -> "FieldScalar":
        return cls(0, Fraction(coeff), d)

    def with_discriminant(self, d: int) -> "FieldScalar":
        """Coerce a rational value into the field Q(sqrt(d))."""
        if self.b != 0 and self.d != d:
            raise ValueError(f"cannot move {self} from sqrt({self.d}) to sqrt({d})")
        return FieldScalar(self.a, self.b, d)

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            if other.b == 0 and self.b == 0:
                return other
            if other.b == 0:
                return FieldScalar(other.a, 0, self.d)
            if self.b == 0:
                return other
            if other.d != self.d:
                raise ValueError(f"mixed discriminants {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldScalar(other, 0, self.d)
        return NotImplemented

    def _ambient(self, other: "FieldScalar") -> int:
        if self.b != 0:
            return self.d
        if other.b != 0:
            return other.d
        return self.d if self.d != 1 else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldScalar(self.a + o.a, self.b + o.b, self._ambient(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldScalar(self.a - o.a, self.b - o.b, self._ambient(o))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldScalar(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._ambient(o)
        return FieldScalar(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "FieldScalar":
        return FieldScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "FieldScalar":
        n = self.norm()
        if n == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("division by zero FieldScalar")
            raise ZeroDivisionError("norm zero is impossible for square-free d")
        return FieldScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- exact order -----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs = a * a
        rhs = b * b * self.d
        if a > 0:  # b < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, FieldScalar):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.a, self.b, self.d if self.b else 1))
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return (self - o).sign() >= 0

    def floor(self) -> int:
        """Exact floor, via integer bracketing and sign tests only."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return math.floor(a)
        root_lo = math.isqrt(d)
        root_hi = root_lo + 1
        if b >= 0:
            lo = math.floor(a) + math.floor(b * root_lo) - 1
            hi = math.ceil(a) + math.ceil(b * root_hi) + 1
        else:
            lo = math.floor(a) + math.floor(b * root_hi) - 1
            hi = math.ceil(a) + math.ceil(b * root_lo) + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if (self - mid).sign() >= 0:
                lo = mid
            else:
                hi = mid - 1
        return lo

    # -- text form ---------------------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def text(self) -> str:
        """Canonical text form `R` or `R + S*sqrt(D)`."""
        if self.b == 0:
            return _frac_text(self.a)
        return f"{_frac_text(self.a)} + {_frac_text(self.b)}*sqrt({self.d})"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"FieldScalar({self.a!r}, {self.b!r}, {self.d})"

    @classmethod
    def parse(cls, text: str, d: int) -> "FieldScalar":
        """Parse the text form; whitespace-insensitive.

        Accepts `R`, `R + S*sqrt(D)`, `R - S*sqrt(D)`, `S*sqrt(D)` and
        signed rationals `p/q`.  D must equal the scheme discriminant d.
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ValueError("empty FieldScalar literal")
        if "sqrt" not in compact:
            try:
                return cls(Fraction(compact), 0, d)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"cannot parse FieldScalar literal {text!r}") from exc
        m = _SQRT_RE.match(compact)
        if not m:
            raise ValueError(f"cannot parse FieldScalar literal {text!r}")
        lit_d = int(m.group("d"))
        if lit_d != d:
            raise ValueError(
                f"literal discriminant {lit_d} differs from scheme discriminant {d}"
            )
        a = Fraction(m.group("a")) if m.group("a") is not None else Fraction(0)
        b = Fraction(m.group("b")) if m.group("b") is not None else Fraction(1)
        if m.group("bsign") == "-":
            b = -b
        if m.group("op") == "-":
            b = -b
        return cls(a, b, d)


def _frac_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def field_sign(x: FieldScalar) -> int:
    return x.sign()


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
