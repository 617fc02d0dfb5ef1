"""All complex roots of a univariate polynomial, with multiplicities.

Aberth-Ehrlich simultaneous iteration from a deterministic perturbed-circle
start, followed by multiplicity clustering.  A cluster of m iterates around a
multiplicity-m root is only determined to accuracy eps**(1/m), so candidate
clusterings are scored by how well the reconstructed product matches the
input coefficients, and multiple roots are re-polished on the (m-1)-th
derivative where they are simple again.

Residuals |p(root)| are reported against an evaluation-noise bound derived
from the standard Horner error estimate, so callers can tell a converged
root from a stalled iterate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RootFindingError, ZeroPolynomialError
from .unipoly import UniPoly, from_roots as _expand_roots

MAX_ITERS = 200
DEFAULT_TOL = 1e-12
_START_ANGLE = 0.4
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    residual: float


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]
    residual_bound: float
    reconstruction_error: float
    degree: int
    lead: complex
    var: str = "x"

    def values(self) -> list[complex]:
        return [r.value for r in self.roots]

    def with_multiplicity(self) -> list[tuple[complex, int]]:
        return [(r.value, r.multiplicity) for r in self.roots]

    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)


def roots(p: UniPoly, tol: float = DEFAULT_TOL) -> RootSet:
    """Find all roots of p with multiplicities (exact inputs are converted)."""
    if p.is_zero:
        raise ZeroPolynomialError("cannot take roots of the zero polynomial")
    pf = p.to_float()
    if pf.degree < 1:
        raise DomainError("root finding needs degree >= 1", degree=pf.degree)
    c = np.array(pf.coeffs, dtype=complex)
    lead = complex(c[-1])

    # Deflate exact zero roots at the origin before iterating.
    n_zero = 0
    while abs(c[0]) == 0.0:
        c = c[1:]
        n_zero += 1
    n = len(c) - 1

    z = _aberth(c, tol) if n >= 1 else np.empty(0, dtype=complex)
    clusters = _best_clustering(z, c, tol) if n >= 1 else []
    clusters = [_refine_cluster(v, m, c) for v, m in clusters]
    if n_zero:
        clusters.append((0j, n_zero))
    clusters.sort(key=lambda vm: (vm[0].real, vm[0].imag))

    full = np.array(pf.coeffs, dtype=complex)
    root_objs = []
    bound = 0.0
    for v, m in clusters:
        res = abs(_horner(full, np.array([v]))[0])
        root_objs.append(Root(complex(v), int(m), float(res)))
        bound = max(bound, _noise_abs(full, abs(v)))
    recon = _reconstruction_error(clusters, np.array(pf.coeffs, dtype=complex))
    return RootSet(
        roots=tuple(root_objs),
        residual_bound=float(bound),
        reconstruction_error=float(recon),
        degree=pf.degree,
        lead=lead,
        var=pf.var,
    )


def poly_from_roots(root_set, lead=None, var: str | None = None) -> UniPoly:
    """Expand lead * prod (v - r_i)**m_i; the verification oracle for roots()."""
    if isinstance(root_set, RootSet):
        pairs = root_set.with_multiplicity()
        lead = root_set.lead if lead is None else lead
        var = root_set.var if var is None else var
    else:
        pairs = [(complex(v), int(m)) for v, m in root_set]
        lead = 1.0 if lead is None else lead
        var = "x" if var is None else var
    flat = [v for v, m in pairs for _ in range(m)]
    return _expand_roots(flat, complex(lead), var)


# -- Aberth-Ehrlich core ------------------------------------------------------


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for k in range(len(c) - 1, -1, -1):
        acc = acc * z + c[k]
    return acc


def _noise_abs(c: np.ndarray, r: float) -> float:
    """Evaluation-noise bound for |p| at radius r (Horner roundoff model)."""
    n = len(c) - 1
    powers = np.power(r, np.arange(len(c)))
    return float(4.0 * (2 * n + 1) * _EPS * np.sum(np.abs(c) * powers) + 1e-300)


def _start_circle(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    radius = 1.0 + float(np.max(np.abs(c[:-1])) / abs(c[-1]))  # Cauchy bound
    angles = 2.0 * np.pi * np.arange(n) / n + _START_ANGLE
    return radius * np.exp(1j * angles)


def _aberth(c: np.ndarray, tol: float) -> np.ndarray:
    n = len(c) - 1
    if n == 1:
        return np.array([-c[0] / c[1]])
    dc = c[1:] * np.arange(1, n + 1)
    z = _start_circle(c)
    settled = np.zeros(n, dtype=bool)
    for _ in range(MAX_ITERS):
        pv = _horner(c, z)
        dv = _horner(dc, z)
        dead = dv == 0
        if np.any(dead):
            z = np.where(dead, z * (1 + 1e-8) + 1e-8, z)
            pv = _horner(c, z)
            dv = _horner(dc, z)
        w = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - w * s
        small = np.abs(denom) < 1e-12
        corr = np.where(small, w, w / np.where(small, 1.0, denom))
        corr = np.where(settled, 0.0, corr)
        z = z - corr
        noise = np.array([_noise_abs(c, abs(zk)) for zk in z])
        settled = (np.abs(corr) < tol * (1.0 + np.abs(z))) | (np.abs(pv) <= 4.0 * noise)
        if settled.all():
            return z
    # Accept a stalled configuration only if every residual sits at noise level.
    pv = np.abs(_horner(c, z))
    noise = np.array([_noise_abs(c, abs(zk)) for zk in z])
    if np.all(pv <= 64.0 * noise):
        return z
    raise RootFindingError(
        "simultaneous iteration did not converge",
        best=[complex(v) for v in z],
        max_iters=MAX_ITERS,
    )


# -- multiplicity clustering ---------------------------------------------------


def _single_linkage(z: np.ndarray, threshold_rel: float) -> list[list[int]]:
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = 1.0 + max(abs(z[i]), abs(z[j]))
            if abs(z[i] - z[j]) <= threshold_rel * scale:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def _clusters_from_groups(z: np.ndarray, groups: list[list[int]]) -> list[tuple[complex, int]]:
    return [(complex(np.mean(z[g])), len(g)) for g in groups]


def _reconstruction_error(clusters: list[tuple[complex, int]], c: np.ndarray) -> float:
    prod = np.array([c[-1]], dtype=complex)
    for v, m in clusters:
        for _ in range(m):
            prod = np.convolve(prod, np.array([-v, 1.0], dtype=complex))
    if len(prod) != len(c):
        return np.inf
    scale = np.max(np.abs(c))
    return float(np.max(np.abs(prod - c)) / scale)


def _best_clustering(z: np.ndarray, c: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Try cluster radii tol**(1/m) for rising tentative multiplicity m.

    More merging is preferred whenever it reconstructs the coefficients
    essentially as well as no merging, because a merged cluster is only
    wrong if two genuinely distinct roots were joined, and that shows up
    as a reconstruction mismatch.
    """
    n = len(z)
    base = max(tol, 64.0 * _EPS)
    seen: list[tuple[float, list[tuple[complex, int]]]] = []
    for m_try in range(1, n + 1):
        radius = base ** (1.0 / m_try)
        groups = _single_linkage(z, radius)
        clusters = _clusters_from_groups(z, groups)
        err = _reconstruction_error(clusters, c)
        seen.append((err, clusters))
    best_err = min(e for e, _ in seen)
    floor = max(4.0 * best_err, 1e-11)
    chosen = min(
        (cl for e, cl in seen if e <= floor),
        key=len,
    )
    return chosen


def _refine_cluster(v: complex, m: int, c: np.ndarray) -> tuple[complex, int]:
    """Polish a multiplicity-m root on p**(m-1) where it is simple."""
    if m <= 1:
        return v, m
    d = c.copy()
    for _ in range(m - 1):
        d = d[1:] * np.arange(1, len(d))
    dd = d[1:] * np.arange(1, len(d))
    best = v
    best_val = abs(_horner(d, np.array([v]))[0])
    cur = v
    for _ in range(8):
        fv = _horner(d, np.array([cur]))[0]
        fd = _horner(dd, np.array([cur]))[0]
        if fd == 0:
            break
        cur = cur - fv / fd
        val = abs(_horner(d, np.array([cur]))[0])
        if val < best_val:
            best, best_val = cur, val
        else:
            break
    return complex(best), m


def newton_polish(value: complex, p: UniPoly, multiplicity: int = 1, steps: int = 3) -> complex:
    """Multiplicity-corrected Newton steps; keeps the best |p| seen."""
    c = np.array(p.to_float().coeffs, dtype=complex)
    if len(c) < 2:
        return value
    dc = c[1:] * np.arange(1, len(c))
    best = value
    best_val = abs(_horner(c, np.array([value]))[0])
    cur = value
    for _ in range(steps):
        fd = _horner(dc, np.array([cur]))[0]
        if fd == 0:
            break
        cur = cur - multiplicity * _horner(c, np.array([cur]))[0] / fd
        val = abs(_horner(c, np.array([cur]))[0])
        if val < best_val:
            best, best_val = cur, val
        else:
            break
    return complex(best)
