"""Dense univariate polynomials over exact Gaussian rationals or complex doubles.

Coefficients are stored ascending.  A polynomial is exact when every
coefficient is a :class:`~polygraph.scalars.GaussRat`; mixing an exact
polynomial with a float one coerces the result to floats (never the other
way around).  The zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ExactArithmeticRequired, SynthesisError
from .scalars import GR_ONE, GR_ZERO, is_exact, require_finite

# Float coefficients below this fraction of the largest one are treated as
# arithmetic debris and trimmed from the leading end.
TRIM_REL = 1e-12


def _trim(coeffs: list, exact_mode: bool) -> tuple:
    if exact_mode:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
    else:
        scale = max((abs(c) for c in coeffs), default=0.0)
        floor = TRIM_REL * scale
        while coeffs and abs(coeffs[-1]) <= floor:
            coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UniPoly:
    coeffs: tuple  # ascending powers, trimmed
    var: str = "x"

    @staticmethod
    def make(coeffs: Iterable, var: str = "x") -> "UniPoly":
        cs = list(coeffs)
        exact_mode = all(is_exact(c) for c in cs)
        if exact_mode:
            return UniPoly(_trim(cs, True), var)
        return UniPoly(_trim([complex(c) for c in cs], False), var)

    @staticmethod
    def zero(var: str = "x") -> "UniPoly":
        return UniPoly((), var)

    @staticmethod
    def one(var: str = "x") -> "UniPoly":
        return UniPoly((GR_ONE,), var)

    @staticmethod
    def variable(var: str = "x") -> "UniPoly":
        return UniPoly((GR_ZERO, GR_ONE), var)

    @staticmethod
    def constant(c, var: str = "x") -> "UniPoly":
        return UniPoly.make([c], var)

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def mode(self) -> str:
        return "exact" if all(is_exact(c) for c in self.coeffs) else "float"

    @property
    def lead(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR_ZERO if self.mode == "exact" else 0j

    def is_constant(self) -> bool:
        return self.degree <= 0

    def to_float(self) -> "UniPoly":
        if self.mode == "float":
            return self
        return UniPoly(tuple(complex(c) for c in self.coeffs), self.var)

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def coeff_scale(self) -> float:
        return max((abs(complex(c)) for c in self.coeffs), default=0.0)

    # -- arithmetic ------------------------------------------------------

    def _pair(self, other: "UniPoly"):
        if self.mode == other.mode:
            return self, other
        return self.to_float(), other.to_float()

    def __add__(self, other: "UniPoly") -> "UniPoly":
        p, q = self._pair(other)
        n = max(len(p.coeffs), len(q.coeffs))
        return UniPoly.make(
            [p.coeff(k) + q.coeff(k) for k in range(n)], self.var
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs), self.var)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        p, q = self._pair(other)
        if p.is_zero or q.is_zero:
            return UniPoly.zero(self.var)
        out = [GR_ZERO if p.mode == "exact" else 0j] * (
            len(p.coeffs) + len(q.coeffs) - 1
        )
        for i, a in enumerate(p.coeffs):
            if not _nonzero(a):
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly.make(out, self.var)

    def scale(self, s) -> "UniPoly":
        if is_exact(s) and self.mode == "exact":
            return UniPoly(tuple(c * s for c in self.coeffs), self.var)
        cs = complex(s)
        return UniPoly.make([complex(c) * cs for c in self.coeffs], self.var)

    def shift_mul_x(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if self.is_zero or k == 0:
            return self
        pad = (GR_ZERO,) * k if self.mode == "exact" else (0j,) * k
        return UniPoly(pad + self.coeffs, self.var)

    def power(self, k: int) -> "UniPoly":
        if k < 0:
            raise DomainError("negative polynomial power")
        out = UniPoly.one(self.var) if self.mode == "exact" else UniPoly.make([1.0], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly.make(
            [self.coeffs[k] * k for k in range(1, len(self.coeffs))], self.var
        )

    def __call__(self, u):
        return self.eval(u)

    def eval(self, u):
        """Horner evaluation; float paths raise on overflow."""
        if self.is_zero:
            return GR_ZERO if is_exact(u) else 0j
        if self.mode == "exact" and is_exact(u):
            acc = GR_ZERO
            for c in reversed(self.coeffs):
                acc = acc * u + c
            return acc
        cu = complex(u)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * cu + complex(c)
        return require_finite(acc, "polynomial evaluation")

    # -- exact division and gcd ------------------------------------------

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.lead
        if self.mode == "exact":
            inv = GR_ONE / lead
            return UniPoly(tuple(c * inv for c in self.coeffs), self.var)
        return UniPoly(tuple(complex(c) / complex(lead) for c in self.coeffs), self.var)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if self.mode != "exact" or other.mode != "exact":
            raise ExactArithmeticRequired("polynomial division requires exact scalars")
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead = other.lead
        quo = [GR_ZERO] * max(0, len(rem) - dq)
        while len(rem) - 1 >= dq and rem:
            k = len(rem) - 1 - dq
            q = rem[-1] / lead
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(_trim(quo, True), self.var), UniPoly(tuple(rem), self.var)

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise DomainError("inexact polynomial division")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over exact scalars; gcd(0, 0) = 0."""
        if self.mode != "exact" or other.mode != "exact":
            raise ExactArithmeticRequired("gcd is only defined in exact mode")
        p, q = self, other
        while not q.is_zero:
            p, q = q, p.divmod(q)[1]
        return p.monic()

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    # -- misc --------------------------------------------------------------

    def __str__(self):
        from .textio import format_unipoly

        return format_unipoly(self)

    __repr__ = __str__


def _nonzero(c) -> bool:
    return bool(c) if is_exact(c) else c != 0


def from_roots(roots: Sequence, lead=1.0, var: str = "x") -> UniPoly:
    """Expand lead * prod (var - r) over the mode of the inputs."""
    p = UniPoly.constant(lead, var)
    lin_one = GR_ONE if is_exact(lead) else 1.0
    for r in roots:
        p = p * UniPoly.make([-r if is_exact(r) else -complex(r), lin_one], var)
    return p


def lagrange_interpolate(points: Sequence[tuple], var: str = "x") -> UniPoly:
    """Exact Lagrange interpolation through (node, value) GaussRat pairs.

    Nodes must be pairwise distinct; the result is the unique polynomial of
    degree < len(points) matching every pair.
    """
    nodes = [p[0] for p in points]
    vals = [p[1] for p in points]
    if not all(is_exact(u) for u in nodes) or not all(is_exact(v) for v in vals):
        raise ExactArithmeticRequired("interpolation nodes and values must be exact")
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise SynthesisError(
                    "repeated interpolation node", node=str(nodes[i])
                )
    total = UniPoly.zero(var)
    for i, (u, v) in enumerate(zip(nodes, vals)):
        if not v:
            continue
        basis = UniPoly.one(var)
        denom = GR_ONE
        for j, w in enumerate(nodes):
            if j == i:
                continue
            basis = basis * UniPoly((-w, GR_ONE), var)
            denom = denom * (u - w)
        total = total + basis.scale(v / denom)
    return total
