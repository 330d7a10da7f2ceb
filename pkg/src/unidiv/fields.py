"""Exact arithmetic in K = Q(zeta3) and L = K(theta), theta = 2cos(2pi/7).

K elements are a0 + a1*zeta3, reduced by zeta3^2 = -1 - zeta3.  L elements
are c0 + c1*theta + c2*theta^2 with KElem coefficients, reduced by the
minimal polynomial theta^3 + theta^2 - 2*theta - 1 = 0 (theta = zeta7 +
1/zeta7; the polynomial is pinned once numerically in the test suite).

The degree-3 Galois action of L over K is generated by theta -> theta^2 - 2
and fixes K pointwise.  Complex conjugation acts on the K coefficients
(zeta3 -> zeta3^2) and fixes theta; it commutes with the Galois action.

All values are immutable and all operations pure, so everything can be
shared freely across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence, Union

from .rationals import as_rat

KCoercible = Union["KElem", Fraction, int]
LCoercible = Union["LElem", "KElem", Fraction, int]

# Complex values of the generators: zeta3 = exp(2i*pi/3) and the three real
# conjugates of theta; index k holds 2*cos(2*pi*2^k/7), so that applying the
# Galois generator shifts the embedding index by one.
ZETA3_COMPLEX = complex(-0.5, math.sqrt(3.0) / 2.0)
THETA_EMBEDDINGS = tuple(2.0 * math.cos(2.0 * math.pi * (2**k) / 7.0) for k in range(3))


class KElem:
    """a0 + a1*zeta3 with rational a0, a1 (unique representation)."""

    __slots__ = ("a0", "a1")

    def __init__(self, a0: Fraction | int | str = 0, a1: Fraction | int | str = 0):
        self.a0 = as_rat(a0)
        self.a1 = as_rat(a1)

    @staticmethod
    def _coerce(value) -> Optional["KElem"]:
        if isinstance(value, KElem):
            return value
        if isinstance(value, (int, Fraction)):
            return KElem(value)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KElem(self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KElem(self.a0 - o.a0, self.a1 - o.a1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return KElem(-self.a0, -self.a1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a0 + a1 z)(b0 + b1 z) with z^2 = -1 - z
        cross = self.a0 * o.a1 + self.a1 * o.a0
        square = self.a1 * o.a1
        return KElem(self.a0 * o.a0 - square, cross - square)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a0 == o.a0 and self.a1 == o.a1

    def __hash__(self):
        return hash((self.a0, self.a1))

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0

    def is_rational(self) -> bool:
        return self.a1 == 0

    def conj(self) -> "KElem":
        """zeta3 -> zeta3^2 = -1 - zeta3 (complex conjugation on K)."""
        return KElem(self.a0 - self.a1, -self.a1)

    def norm_q(self) -> Fraction:
        """Norm down to the rationals: a0^2 - a0*a1 + a1^2."""
        return self.a0 * self.a0 - self.a0 * self.a1 + self.a1 * self.a1

    def inv(self) -> "KElem":
        n = self.norm_q()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta3)")
        c = self.conj()
        return KElem(c.a0 / n, c.a1 / n)

    def to_complex(self) -> complex:
        return complex(self.a0) + complex(self.a1) * ZETA3_COMPLEX

    def __str__(self):
        if self.a1 == 0:
            return str(self.a0)
        if self.a1 == 1:
            zpart = "zeta3"
        elif self.a1 == -1:
            zpart = "-zeta3"
        else:
            zpart = f"{self.a1}*zeta3"
        if self.a0 == 0:
            return zpart
        joiner = "+" if not zpart.startswith("-") else ""
        return f"{self.a0}{joiner}{zpart}"

    def __repr__(self):
        return f"KElem({self.a0!r}, {self.a1!r})"


K_ZERO = KElem(0)
K_ONE = KElem(1)
ZETA3 = KElem(0, 1)

# Reduction data for the power basis {1, theta, theta^2}:
#   theta^3 = 1 + 2*theta - theta^2,  theta^4 = -1 - theta + 3*theta^2
_THETA3 = (Fraction(1), Fraction(2), Fraction(-1))
_THETA4 = (Fraction(-1), Fraction(-1), Fraction(3))

# Galois generator on basis vectors: sigma(1), sigma(theta), sigma(theta^2)
#   sigma(theta) = theta^2 - 2,  sigma(theta^2) = 3 - theta - theta^2
_SIGMA_IMAGES = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(-2), Fraction(0), Fraction(1)),
    (Fraction(3), Fraction(-1), Fraction(-1)),
)


def _as_k(value) -> KElem:
    k = KElem._coerce(value)
    if k is None:
        raise TypeError(f"cannot interpret {value!r} as an element of Q(zeta3)")
    return k


class LElem:
    """c0 + c1*theta + c2*theta^2 with KElem coefficients (unique representation)."""

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0: LCoercible = 0, c1: LCoercible = 0, c2: LCoercible = 0):
        self.c0 = _as_k(c0)
        self.c1 = _as_k(c1)
        self.c2 = _as_k(c2)

    @staticmethod
    def _coerce(value) -> Optional["LElem"]:
        if isinstance(value, LElem):
            return value
        if isinstance(value, (KElem, int, Fraction)):
            return LElem(value)
        return None

    def coeffs(self) -> tuple[KElem, KElem, KElem]:
        return (self.c0, self.c1, self.c2)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LElem(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LElem(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return LElem(-self.c0, -self.c1, -self.c2)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = o.c0, o.c1, o.c2
        t0 = a0 * b0
        t1 = a0 * b1 + a1 * b0
        t2 = a0 * b2 + a1 * b1 + a2 * b0
        t3 = a1 * b2 + a2 * b1
        t4 = a2 * b2
        return LElem(
            t0 + t3 * _THETA3[0] + t4 * _THETA4[0],
            t1 + t3 * _THETA3[1] + t4 * _THETA4[1],
            t2 + t3 * _THETA3[2] + t4 * _THETA4[2],
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1 and self.c2 == o.c2

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2))

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero() and self.c2.is_zero()

    def is_in_k(self) -> bool:
        return self.c1.is_zero() and self.c2.is_zero()

    def as_k(self) -> KElem:
        if not self.is_in_k():
            raise ValueError(f"{self} has nonzero theta components")
        return self.c0

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs())

    def sigma(self, power: int = 1) -> "LElem":
        """Apply the Galois generator (theta -> theta^2 - 2) power mod 3 times."""
        out = self
        for _ in range(power % 3):
            c = out.coeffs()
            images = []
            for col in range(3):
                acc = K_ZERO
                for row in range(3):
                    acc = acc + c[row] * _SIGMA_IMAGES[row][col]
                images.append(acc)
            out = LElem(*images)
        return out

    def conj(self) -> "LElem":
        """Complex conjugation: zeta3 -> zeta3^2 on every coefficient, theta fixed."""
        return LElem(self.c0.conj(), self.c1.conj(), self.c2.conj())

    def norm_to_k(self) -> KElem:
        """Product of the three Galois conjugates; always lands in K."""
        n = self * self.sigma(1) * self.sigma(2)
        assert n.is_in_k(), f"norm fell outside K: {n}"
        return n.c0

    def _mul_matrix(self) -> list[list[KElem]]:
        """Columns are the basis images self*1, self*theta, self*theta^2."""
        cols = [self, self * THETA, self * THETA_SQ]
        return [[cols[j].coeffs()[i] for j in range(3)] for i in range(3)]

    def inv(self) -> "LElem":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in K(theta)")
        sol = solve_k_linear(self._mul_matrix(), [K_ONE, K_ZERO, K_ZERO])
        assert sol is not None, "multiplication matrix is singular for a nonzero element"
        return LElem(*sol)

    def to_complex(self, conj_index: int = 0) -> complex:
        """Complex value with zeta3 -> exp(2i*pi/3) and theta -> its conj_index-th conjugate."""
        t = THETA_EMBEDDINGS[conj_index]
        return self.c0.to_complex() + self.c1.to_complex() * t + self.c2.to_complex() * (t * t)

    def real_imag_parts(self) -> tuple["LElem", "LElem"]:
        """Split as v + zeta3*w with v, w in the real subfield Q(theta)."""
        v = LElem(*(KElem(c.a0) for c in self.coeffs()))
        w = LElem(*(KElem(c.a1) for c in self.coeffs()))
        return v, w

    def six_tuple(self) -> tuple[Fraction, ...]:
        """Rational coordinates in basis order (1, zeta3, theta, theta*zeta3, theta^2, theta^2*zeta3)."""
        return (self.c0.a0, self.c0.a1, self.c1.a0, self.c1.a1, self.c2.a0, self.c2.a1)

    @classmethod
    def from_six_tuple(cls, values: Sequence[Fraction | int | str]) -> "LElem":
        vals = [as_rat(v) for v in values]
        if len(vals) != 6:
            raise ValueError("expected six rational coordinates")
        return cls(KElem(vals[0], vals[1]), KElem(vals[2], vals[3]), KElem(vals[4], vals[5]))

    def __str__(self):
        parts = []
        for coeff, var in ((self.c0, ""), (self.c1, "theta"), (self.c2, "theta^2")):
            if coeff.is_zero():
                continue
            if not var:
                parts.append(str(coeff))
                continue
            if coeff == 1:
                parts.append(var)
            elif coeff == -1:
                parts.append("-" + var)
            else:
                body = str(coeff)
                if "+" in body[1:] or "-" in body[1:]:
                    body = f"({body})"
                parts.append(f"{body}*{var}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"LElem({self.c0!r}, {self.c1!r}, {self.c2!r})"


L_ZERO = LElem(0)
L_ONE = LElem(1)
THETA = LElem(0, 1, 0)
THETA_SQ = LElem(0, 0, 1)


def solve_k_linear(
    rows: Sequence[Sequence[KElem]], rhs: Sequence[KElem]
) -> Optional[list[KElem]]:
    """Solve an m x n linear system over K by exact Gaussian elimination.

    Returns one solution (free variables set to 0) or None if inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if not aug[i][col].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not aug[i][n].is_zero():
            return None
    sol = [K_ZERO] * n
    for i, col in enumerate(pivots):
        sol[col] = aug[i][n]
    return sol


def minimal_polynomial_coeffs() -> tuple[Fraction, ...]:
    """Coefficients (lowest first) of the pinned minimal polynomial of theta."""
    return (Fraction(-1), Fraction(-2), Fraction(1), Fraction(1))
