"""Dense bivariate polynomials in z and its conjugate z*.

A polynomial is stored as a rectangular grid of coefficients: row j holds
the coefficients of z^j, column k those of z*^k, so the entry at (j, k)
multiplies the monomial z^j z*^k.  Trailing all-zero rows and columns are
trimmed on construction, which makes the degree metadata canonical and lets
the grid double as the matrix representation used for display.

Entries are Coefficient values in ordinary use.  Any commutative-ring
element with the same operator surface (`+`, `-`, `*`, unary `-`,
`is_zero()`, and coercion of ints/Fractions on the right of `*` and `+`)
works too; the identity suite exploits this to run the same arithmetic with
entries that are polynomials in the shift parameter.

All values are immutable and all operations pure.
"""

from __future__ import annotations

from fractions import Fraction

from .coefficient import Coefficient, Mode


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, float, complex)) and not isinstance(x, bool)


class BiPoly:
    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("BiPoly needs at least one entry; use zero()/constant()")
        width = max(len(r) for r in rows)
        zero = rows[0][0] * 0
        for r in rows:
            r.extend([zero] * (width - len(r)))
        # Trim trailing all-zero rows, then trailing all-zero columns.
        while len(rows) > 1 and all(e.is_zero() for e in rows[-1]):
            rows.pop()
        width = len(rows[0])
        while width > 1 and all(r[width - 1].is_zero() for r in rows):
            width -= 1
        object.__setattr__(self, "_rows", tuple(tuple(r[:width]) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def constant(cls, coeff: Coefficient) -> BiPoly:
        return cls([[coeff]])

    @classmethod
    def zero(cls, mode: Mode) -> BiPoly:
        return cls([[Coefficient.zero(mode)]])

    @classmethod
    def one(cls, mode: Mode) -> BiPoly:
        return cls([[Coefficient.one(mode)]])

    @classmethod
    def z(cls, mode: Mode) -> BiPoly:
        return cls.monomial(1, 0, Coefficient.one(mode))

    @classmethod
    def zbar(cls, mode: Mode) -> BiPoly:
        return cls.monomial(0, 1, Coefficient.one(mode))

    @classmethod
    def monomial(cls, j: int, k: int, coeff: Coefficient) -> BiPoly:
        if j < 0 or k < 0:
            raise ValueError("monomial powers must be nonnegative")
        zero = coeff * 0
        rows = [[zero] * (k + 1) for _ in range(j + 1)]
        rows[j][k] = coeff
        return cls(rows)

    @classmethod
    def from_grid(cls, grid, mode: Mode) -> BiPoly:
        """Build from a grid of plain numbers (ints, Fractions, floats, complex)."""
        rows = []
        for r in grid:
            row = []
            for e in r:
                if isinstance(e, Coefficient):
                    row.append(e)
                elif isinstance(e, complex):
                    row.append(Coefficient(e.real, e.imag, mode))
                else:
                    row.append(Coefficient(e, 0, mode))
            rows.append(row)
        return cls(rows)

    # -- structure -----------------------------------------------------

    @property
    def deg_z(self) -> int:
        return len(self._rows) - 1

    @property
    def deg_zbar(self) -> int:
        return len(self._rows[0]) - 1

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), len(self._rows[0]))

    def grid(self):
        """The normalized coefficient grid (rows = powers of z)."""
        return self._rows

    def coeff(self, j: int, k: int):
        if 0 <= j < len(self._rows) and 0 <= k < len(self._rows[0]):
            return self._rows[j][k]
        return self._rows[0][0] * 0

    def is_zero(self) -> bool:
        return self.shape == (1, 1) and self._rows[0][0].is_zero()

    @property
    def mode(self):
        e = self._rows[0][0]
        return e.mode if isinstance(e, Coefficient) else None

    def _ring_scalar(self, s):
        """Embed a plain scalar into the entry ring."""
        return self._rows[0][0] * 0 + s

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other) or isinstance(other, Coefficient):
            other = BiPoly.constant(self._ring_scalar(other))
        if not isinstance(other, BiPoly):
            return NotImplemented
        nr = max(len(self._rows), len(other._rows))
        nc = max(len(self._rows[0]), len(other._rows[0]))
        return BiPoly(
            [[self.coeff(j, k) + other.coeff(j, k) for k in range(nc)] for j in range(nr)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, Coefficient):
            other = BiPoly.constant(self._ring_scalar(other))
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return BiPoly([[-e for e in r] for r in self._rows])

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, Coefficient):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            # Entry-ring elements (e.g. symbolic entries) also scale.
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        nr = len(self._rows) + len(other._rows) - 1
        nc = len(self._rows[0]) + len(other._rows[0]) - 1
        zero = self._rows[0][0] * 0
        acc = [[zero for _ in range(nc)] for _ in range(nr)]
        for j, row in enumerate(self._rows):
            for k, e in enumerate(row):
                if e.is_zero():
                    continue
                for p, orow in enumerate(other._rows):
                    for q, f in enumerate(orow):
                        if f.is_zero():
                            continue
                        acc[j + p][k + q] = acc[j + p][k + q] + e * f
        return BiPoly(acc)

    __rmul__ = __mul__

    def scale(self, s) -> BiPoly:
        return BiPoly([[e * s for e in r] for r in self._rows])

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("BiPoly powers must be nonnegative integers")
        result = BiPoly.constant(self._ring_scalar(1))
        for _ in range(n):
            result = result * self
        return result

    # -- calculus ------------------------------------------------------

    def d_dz(self) -> BiPoly:
        """Formal partial derivative in z (z and z* independent)."""
        if len(self._rows) == 1:
            return BiPoly.constant(self._rows[0][0] * 0)
        return BiPoly(
            [[e * j for e in self._rows[j]] for j in range(1, len(self._rows))]
        )

    def d_dzbar(self) -> BiPoly:
        """Formal partial derivative in z*."""
        if len(self._rows[0]) == 1:
            return BiPoly.constant(self._rows[0][0] * 0)
        return BiPoly(
            [[row[k] * k for k in range(1, len(row))] for row in self._rows]
        )

    # -- evaluation and substitution ------------------------------------

    def eval(self, z: Coefficient) -> Coefficient:
        """Value at a point, with z* taken as the conjugate of z (nested Horner)."""
        return self.eval_pair(z, z.conj())

    def eval_pair(self, z, zbar):
        """Value with z and z* supplied independently."""
        zero = self._rows[0][0] * 0
        total = zero
        for row in reversed(self._rows):
            acc = zero
            for e in reversed(row):
                acc = acc * zbar + e
            total = total * z + acc
        return total

    def subst(self, z_poly: BiPoly, zbar_poly: BiPoly) -> BiPoly:
        """Formal substitution z -> z_poly, z* -> zbar_poly, fully expanded."""
        zero_poly = BiPoly.constant(self._rows[0][0] * 0)
        total = zero_poly
        zp = BiPoly.constant(self._ring_scalar(1))
        for row in self._rows:
            wp = zp
            for e in row:
                if not e.is_zero():
                    total = total + wp.scale(e)
                wp = wp * zbar_poly
            zp = zp * z_poly
        return total

    def scale_vars(self, sz, szbar) -> BiPoly:
        """Substitute z -> sz*z and z* -> szbar*z* for scalar factors."""
        rows = []
        zpow = self._ring_scalar(1)
        for row in self._rows:
            out, wpow = [], zpow
            for e in row:
                out.append(e * wpow)
                wpow = wpow * szbar
            rows.append(out)
            zpow = zpow * sz
        return BiPoly(rows)

    def conjugate(self) -> BiPoly:
        """Complex conjugate as a polynomial (entries conjugated, z and z* swapped)."""
        nr, nc = self.shape
        return BiPoly([[self._rows[j][k].conj() for j in range(nr)] for k in range(nc)])

    # -- comparison ------------------------------------------------------

    def max_abs(self) -> float:
        return max(e.magnitude() for r in self._rows for e in r)

    def equal_within(self, other: BiPoly, tol: float) -> bool:
        """EXACT entries compare exactly (tol ignored); FLOAT entries compare
        coefficient-wise relative to the largest coefficient magnitude."""
        if self.mode is Mode.EXACT and other.mode is Mode.EXACT:
            return self == other
        nr = max(len(self._rows), len(other._rows))
        nc = max(len(self._rows[0]), len(other._rows[0]))
        scale = max(self.max_abs(), other.max_abs())
        if scale == 0.0:
            return True
        for j in range(nr):
            for k in range(nc):
                d = self.coeff(j, k) - other.coeff(j, k)
                if d.magnitude() > tol * scale:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        terms = []
        for j, row in enumerate(self._rows):
            for k, e in enumerate(row):
                if e.is_zero():
                    continue
                mono = "".join(
                    [f"z^{j}" if j > 1 else "z" if j == 1 else "",
                     f"zb^{k}" if k > 1 else "zb" if k == 1 else ""]
                ) or "1"
                terms.append(f"({e})*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_float(self) -> BiPoly:
        return BiPoly([[e.to_float() for e in r] for r in self._rows])

    def to_exact(self) -> BiPoly:
        return BiPoly([[e.to_exact() for e in r] for r in self._rows])

    def to_complex_grid(self):
        """Nested list of complex values (for numpy interop)."""
        return [[e.to_complex() for e in r] for r in self._rows]
