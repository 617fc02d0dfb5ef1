"""Symmetric total-degree-2 polynomials x^2 + y^2 + a xy + b(x+y) + c.

Walking a component is the linear recurrence v_{n+1} = -a v_n - v_{n-1} - b
(sum of the two roots of Phi(v_n, y)).  Its characteristic roots w, 1/w
multiply to 1, so components close into n-cycles exactly when w is a
primitive n-th root of unity, i.e. a = 2 cos(2 pi k / n) with gcd(k, n) = 1;
otherwise every non-singular component is a double ray.  The b shift is
removed by the affine move x -> x - b/(a+2) whenever a != -2.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .analyzer import analyze
from .bipoly import BiPoly
from .errors import DomainError, NotStandardError
from .moebius import DEFAULT_NMAX, continued_fraction_candidates
from .scalars import GR_ONE, GaussRat, is_exact

COS_TOL = 1e-9
_AMBIG_BAND = 10.0


class QuadCase(enum.Enum):
    A_MINUS_2 = "AMinus2"
    A_PLUS_2 = "APlus2"
    GENERIC = "Generic"


class QuadShape(enum.Enum):
    CYCLE = "Cycle"
    DOUBLE_RAY = "DoubleRay"


@dataclass(frozen=True)
class QuadReport:
    case: QuadCase
    loops: tuple[complex, ...]
    double_arc_origins: tuple[complex, ...]
    singular_components_finite: bool
    verdict: QuadShape | None = None
    cosine_witness: tuple[int, int] | None = None
    numerically_ambiguous: bool = False
    # The length of the cycles the explorer actually finds: the cosine
    # witness (n, k) names the angle with a = 2 cos(2 pi k / n), but the
    # characteristic roots are -exp(+-2 pi i k / n), whose multiplicative
    # order is 2n / gcd(n + 2k, 2n).  The two coincide only when 4 | n.
    component_cycle_length: int | None = None

    def as_json(self) -> dict:
        return {
            "case": self.case.value,
            "loops": [[z.real, z.imag] for z in self.loops],
            "double_arc_origins": [[z.real, z.imag] for z in self.double_arc_origins],
            "singular_components_finite": self.singular_components_finite,
            "verdict": None
            if self.verdict is None
            else (
                f"Cycle({self.cosine_witness[0]})"
                if self.verdict is QuadShape.CYCLE
                else "DoubleRay"
            ),
            "cosine_witness": list(self.cosine_witness) if self.cosine_witness else None,
            "component_cycle_length": self.component_cycle_length,
            "numerically_ambiguous": self.numerically_ambiguous,
        }


@dataclass(frozen=True)
class QuadSym:
    """Coefficients of x^2 + y^2 + a xy + b(x+y) + c; standard by construction."""

    a: object
    b: object
    c: object

    def __post_init__(self):
        report = analyze(self.as_bipoly())
        if not report.is_standard:
            raise NotStandardError(
                "x^2 + y^2 + a*x*y + b*(x+y) + c is not standard for these values",
                reasons=report.failure_reasons,
            )

    def as_bipoly(self) -> BiPoly:
        one = GR_ONE if self.mode == "exact" else 1.0
        return BiPoly.make(
            {
                (2, 0): one,
                (0, 2): one,
                (1, 1): self.a,
                (1, 0): self.b,
                (0, 1): self.b,
                (0, 0): self.c,
            }
        )

    @property
    def mode(self) -> str:
        return "exact" if all(is_exact(v) for v in (self.a, self.b, self.c)) else "float"


def _case_of(a, tol: float = 1e-12) -> QuadCase:
    if is_exact(a):
        if a == GaussRat.of(-2):
            return QuadCase.A_MINUS_2
        if a == GaussRat.of(2):
            return QuadCase.A_PLUS_2
        return QuadCase.GENERIC
    ca = complex(a)
    if abs(ca + 2) <= tol:
        return QuadCase.A_MINUS_2
    if abs(ca - 2) <= tol:
        return QuadCase.A_PLUS_2
    return QuadCase.GENERIC


def normalize(q: QuadSym) -> QuadSym:
    """Shift away the linear term: b -> 0, c -> c - b^2/(a+2); needs a != -2."""
    if _case_of(q.a) is QuadCase.A_MINUS_2:
        raise DomainError("a = -2 has no normalizing shift; handled directly")
    if q.mode == "exact":
        two = GaussRat.of(2)
        return QuadSym(q.a, GaussRat.of(0), q.c - q.b * q.b / (q.a + two))
    a, b, c = complex(q.a), complex(q.b), complex(q.c)
    return QuadSym(a, 0.0, c - b * b / (a + 2))


def shift_amount(q: QuadSym) -> complex:
    """Vertices of the normalized digraph map to u - b/(a+2) in the original."""
    return complex(q.b) / (complex(q.a) + 2.0)


def recurrence_orbit(q: QuadSym, v0: complex, v1: complex, steps: int) -> list[complex]:
    """[v_0 .. v_steps] with v_{n+1} = -a v_n - v_{n-1} - b; seed must be an arc."""
    phi = q.as_bipoly().to_float()
    val = phi.eval(complex(v0), complex(v1))
    scale = max(1.0, abs(complex(v0)), abs(complex(v1))) ** 2
    if abs(complex(val)) > 1e-6 * scale:
        raise DomainError(
            "seed pair is not an arc: Phi(v0, v1) != 0", residual=abs(complex(val))
        )
    a, b = complex(q.a), complex(q.b)
    orbit = [complex(v0), complex(v1)]
    for _ in range(steps - 1):
        orbit.append(-a * orbit[-1] - orbit[-2] - b)
    return orbit[: steps + 1]


def cosine_recognize(a, n_max: int = DEFAULT_NMAX, tol: float = COS_TOL):
    """Least (n, k) with a = 2 cos(2 pi k / n), gcd(k, n) = 1, or None.

    Exact rational a only matches for a in {0, 1, -1} (plus the excluded
    +-2); float a goes through arccos and continued-fraction recognition,
    with a mandatory numeric re-check of every candidate.
    """
    if is_exact(a):
        if not a.is_real():
            return None
        table = {
            Fraction(0): (4, 1),
            Fraction(1): (6, 1),
            Fraction(-1): (3, 1),
        }
        return table.get(a.re)
    ca = complex(a)
    if abs(ca.imag) > tol:
        return None
    x = ca.real / 2.0
    if not -1.0 < x < 1.0:
        return None
    theta = math.acos(x) / (2 * math.pi)  # in (0, 1/2)
    for k, n in continued_fraction_candidates(theta, n_max):
        if n < 3 or k <= 0 or math.gcd(k, n) != 1:
            continue
        if abs(2 * math.cos(2 * math.pi * k / n) - ca.real) <= tol * (1 + abs(ca)):
            return (n, k)
    return None


def _near_miss(a, n_max: int, tol: float) -> bool:
    """True when recognition failed but only by the uncertainty band."""
    if is_exact(a):
        return False
    ca = complex(a)
    if abs(ca.imag) > tol * _AMBIG_BAND or not -1.0 < ca.real / 2.0 < 1.0:
        return False
    theta = math.acos(ca.real / 2.0) / (2 * math.pi)
    for k, n in continued_fraction_candidates(theta, n_max):
        if n < 3 or k <= 0 or math.gcd(k, n) != 1:
            continue
        err = abs(2 * math.cos(2 * math.pi * k / n) - ca.real)
        if tol * (1 + abs(ca)) < err <= tol * _AMBIG_BAND * (1 + abs(ca)):
            return True
    return False


def singular_inventory_quad(q: QuadSym) -> QuadReport:
    """Loops and double-arc origins by case, via the closed-form locations."""
    case = _case_of(q.a)
    finite = True
    if case is QuadCase.A_MINUS_2:
        b, c = complex(q.b), complex(q.c)
        if abs(b) == 0:
            loops: tuple[complex, ...] = ()
            doubles: tuple[complex, ...] = ()
        else:
            loops = (-c / (2 * b),)
            doubles = ((b * b - 4 * c) / (8 * b),)
            finite = False
        return QuadReport(case, loops, doubles, singular_components_finite=finite)

    shift = shift_amount(q)
    norm = normalize(q)
    a, c = complex(norm.a), complex(norm.c)
    if case is QuadCase.A_PLUS_2:
        root = cmath.sqrt(-c) / 2.0
        loops = (root - shift, -root - shift)
        return QuadReport(case, loops, (), singular_components_finite=False)

    if abs(c) == 0:
        return QuadReport(case, (-shift,), (), singular_components_finite=True)
    loop_root = cmath.sqrt(-c / (a + 2))
    double_root = 2 * cmath.sqrt(c / (a * a - 4))
    witness = cosine_recognize(q.a)
    return QuadReport(
        case,
        (loop_root - shift, -loop_root - shift),
        (double_root - shift, -double_root - shift),
        singular_components_finite=witness is not None,
        cosine_witness=witness,
    )


def classify_deg2(q: QuadSym, n_max: int = DEFAULT_NMAX) -> QuadReport:
    """Full verdict: Cycle(n) on a cosine witness, DoubleRay otherwise."""
    inventory = singular_inventory_quad(q)
    case = inventory.case
    if case in (QuadCase.A_MINUS_2, QuadCase.A_PLUS_2):
        return QuadReport(
            case,
            inventory.loops,
            inventory.double_arc_origins,
            inventory.singular_components_finite,
            verdict=QuadShape.DOUBLE_RAY,
        )
    witness = cosine_recognize(q.a, n_max)
    ambiguous = witness is None and _near_miss(q.a, n_max, COS_TOL)
    verdict = QuadShape.CYCLE if witness else QuadShape.DOUBLE_RAY
    no_singulars = not inventory.loops and not inventory.double_arc_origins
    return QuadReport(
        case,
        inventory.loops,
        inventory.double_arc_origins,
        singular_components_finite=witness is not None or no_singulars
        or inventory.singular_components_finite,
        verdict=verdict,
        cosine_witness=witness,
        numerically_ambiguous=ambiguous,
        component_cycle_length=component_cycle_length(*witness) if witness else None,
    )


def component_cycle_length(n: int, k: int) -> int:
    """Order of -exp(2 pi i k / n): the cycle length the explorer observes."""
    return 2 * n // math.gcd(n + 2 * k, 2 * n)


def characteristic_roots(q: QuadSym) -> tuple[complex, complex]:
    """Roots w1, w2 = 1/w1 of lambda^2 + a lambda + 1."""
    a = complex(q.a)
    r = cmath.sqrt(a * a - 4)
    return (-a + r) / 2, (-a - r) / 2
