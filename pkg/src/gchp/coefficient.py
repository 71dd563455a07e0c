"""Complex scalars in one of two arithmetic modes.

EXACT mode stores a pair of `fractions.Fraction` (a Gaussian rational), so
equality is decidable and every identity check can be exact.  FLOAT mode
stores a pair of machine floats and exists for quadrature interop.  The two
modes never mix silently: combining an EXACT and a FLOAT value raises
`ModeMismatchError`.  Plain ints and Fractions coerce into either mode;
floats and complex coerce only into FLOAT mode.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction


class Mode(Enum):
    EXACT = "exact"
    FLOAT = "float"


class ModeMismatchError(TypeError):
    """Raised when EXACT and FLOAT values meet in one operation."""


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class Coefficient:
    """An immutable complex scalar with an explicit arithmetic mode."""

    __slots__ = ("re", "im", "mode")

    def __init__(self, re, im, mode: Mode):
        if mode is Mode.EXACT:
            re, im = Fraction(re), Fraction(im)
        else:
            re, im = float(re), float(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Coefficient is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def exact(cls, re, im=0) -> Coefficient:
        """Exact value from ints, Fractions, or strings like '3/4'."""
        return cls(Fraction(re), Fraction(im), Mode.EXACT)

    @classmethod
    def floating(cls, re, im=0.0) -> Coefficient:
        return cls(float(re), float(im), Mode.FLOAT)

    @classmethod
    def from_complex(cls, value: complex) -> Coefficient:
        return cls(value.real, value.imag, Mode.FLOAT)

    @classmethod
    def zero(cls, mode: Mode) -> Coefficient:
        return cls(0, 0, mode)

    @classmethod
    def one(cls, mode: Mode) -> Coefficient:
        return cls(1, 0, mode)

    # -- coercion and mode checks -------------------------------------

    def _coerce(self, other):
        """Return `other` as a Coefficient in self's mode, or None."""
        if isinstance(other, Coefficient):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"cannot combine {self.mode.value} and {other.mode.value} values"
                )
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return Coefficient(other, 0, self.mode)
        if self.mode is Mode.FLOAT and isinstance(other, float):
            return Coefficient(other, 0.0, self.mode)
        if self.mode is Mode.FLOAT and isinstance(other, complex):
            return Coefficient(other.real, other.imag, self.mode)
        if isinstance(other, (float, complex)):
            raise ModeMismatchError("float/complex scalars require FLOAT mode")
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Coefficient(self.re + o.re, self.im + o.im, self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Coefficient(self.re - o.re, self.im - o.im, self.mode)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Coefficient(o.re - self.re, o.im - self.im, self.mode)

    def __neg__(self):
        return Coefficient(-self.re, -self.im, self.mode)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Coefficient(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.mode,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Coefficient")
        return Coefficient(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
            self.mode,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> Coefficient:
        if not isinstance(n, int) or n < 0:
            raise ValueError("Coefficient powers must be nonnegative integers")
        result = Coefficient.one(self.mode)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Coefficient:
        return Coefficient.one(self.mode) / self

    # -- structure -----------------------------------------------------

    def conj(self) -> Coefficient:
        return Coefficient(self.re, -self.im, self.mode)

    def abs2(self) -> Coefficient:
        """|self|^2 as a real Coefficient of the same mode."""
        return Coefficient(self.re * self.re + self.im * self.im, 0, self.mode)

    def magnitude(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def sqrt_real(self) -> Coefficient | None:
        """Square root of a nonnegative real value; None if not representable."""
        if not self.is_real():
            return None
        if self.mode is Mode.FLOAT:
            if self.re < 0:
                return None
            return Coefficient(math.sqrt(self.re), 0.0, Mode.FLOAT)
        root = _sqrt_fraction(self.re)
        if root is None:
            return None
        return Coefficient(root, 0, Mode.EXACT)

    # -- conversions ---------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_float(self) -> Coefficient:
        return Coefficient(float(self.re), float(self.im), Mode.FLOAT)

    def to_exact(self) -> Coefficient:
        # Fraction(float) is the exact binary value, so this never rounds.
        return Coefficient(Fraction(self.re), Fraction(self.im), Mode.EXACT)

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Coefficient(other, 0, self.mode)
        if not isinstance(other, Coefficient):
            return NotImplemented
        if other.mode is not self.mode:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.mode, self.re, self.im))

    def __repr__(self):
        return f"Coefficient({self.re!r}, {self.im!r}, {self.mode.value})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        if re == 0:
            return f"{'-' if im < 0 else ''}{mag}i"
        return f"{re}{sign}{mag}i"


def parse_scalar(text: str, mode: Mode) -> Fraction | float:
    """Parse one real scalar from the command line.

    EXACT mode accepts 'p/q' and decimal strings exactly; FLOAT mode parses
    a machine float.
    """
    if mode is Mode.EXACT:
        return Fraction(text)
    return float(text)
