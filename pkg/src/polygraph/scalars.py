"""Scalar backends: exact Gaussian rationals and complex doubles.

Algebraic predicates (gcd, resultant-is-zero, standardness) are only
authoritative over the exact backend; root finding and exploration live in
complex doubles.  A value is "exact" exactly when it is a :class:`GaussRat`;
everything else (int/float/complex) is treated as a float-mode scalar and is
never promoted to exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

# Relative tolerance for float-mode predicates; quantities within 10x of the
# threshold are reported as numerically uncertain.
FLOAT_PREDICATE_TOL = 1e-9


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational re + im*i with arbitrary-precision Fraction parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "GaussRat":
        return GaussRat(Fraction(re), Fraction(im))

    def __add__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussRat(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("GaussRat powers must be nonnegative integers")
        out = GR_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        from .textio import format_scalar

        return format_scalar(self)

    __repr__ = __str__


GR_ZERO = GaussRat()
GR_ONE = GaussRat(Fraction(1))
GR_I = GaussRat(Fraction(0), Fraction(1))


def _as_gauss(v):
    if isinstance(v, GaussRat):
        return v
    if isinstance(v, (int, Fraction)):
        return GaussRat(Fraction(v))
    return None


def is_exact(v) -> bool:
    return isinstance(v, GaussRat)


def to_complex(v) -> complex:
    return complex(v)


def exact(re, im=0) -> GaussRat:
    """Build an exact scalar from ints/Fractions; floats are rejected."""
    if isinstance(re, float) or isinstance(im, float) or isinstance(re, complex):
        raise ExactFromFloat(re, im)
    return GaussRat(Fraction(re), Fraction(im))


class ExactFromFloat(DomainError):
    def __init__(self, re, im):
        super().__init__(
            "floats are never promoted to exact scalars; use Fractions or ints"
        )


def scalar_close(u, v, tol: float) -> bool:
    """|u - v| <= tol * (1 + max(|u|, |v|)) in complex doubles."""
    cu, cv = complex(u), complex(v)
    return abs(cu - cv) <= tol * (1.0 + max(abs(cu), abs(cv)))


def scalar_is_zero(v, tol: float = 0.0) -> bool:
    if isinstance(v, GaussRat):
        return not v
    return abs(complex(v)) <= tol


def require_finite(z: complex, context: str) -> complex:
    from .errors import EvaluationOverflow

    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise EvaluationOverflow(f"non-finite value during {context}")
    return z
