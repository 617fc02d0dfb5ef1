"""Empirical probe of the all-components-isomorphic conjecture.

Samples seeds from an annulus, rejects those near singular vertices,
explores each weak component, classifies it, and compares the closed ones
pairwise.  This gathers evidence only; a probe can refute the conjecture
(all_isomorphic = False with reproduction data) but never prove it.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .analyzer import analyze, singular_vertex_values
from .bipoly import BiPoly
from .errors import DomainError, NotStandardError, SizeLimitError
from .explorer import (
    Budget,
    ExploredDigraph,
    Shape,
    ShapeLabel,
    classify,
    explore_component,
    is_isomorphic,
)

SEED_MARGIN = 1e-3
_MIN_RADIUS = 0.5


@dataclass(frozen=True)
class ProbeResult:
    polynomial: BiPoly
    seeds: tuple[complex, ...]
    labels: tuple[ShapeLabel, ...]
    all_isomorphic: bool | None
    truncated_count: int
    counterexample: tuple[int, int] | None = None
    graphs: tuple[ExploredDigraph, ...] = ()

    def as_json(self) -> dict:
        from .textio import bipoly_to_json

        out = {
            "polynomial": bipoly_to_json(self.polynomial),
            "seeds": [[s.real, s.imag] for s in self.seeds],
            "labels": [str(l) for l in self.labels],
            "all_isomorphic": self.all_isomorphic,
            "truncated_count": self.truncated_count,
        }
        if self.counterexample is not None:
            i, j = self.counterexample
            out["counterexample"] = {
                "seed_indices": [i, j],
                "graphs": [self.graphs[i].as_json(), self.graphs[j].as_json()],
            }
        return out


def sample_radius(phi: BiPoly) -> float:
    """Outer sampling radius from coefficient magnitudes."""
    scale = phi.coeff_scale()
    lead = abs(complex(phi.lead_gl()))
    ratio = scale / max(lead, 1e-300)
    deg = max(phi.total_degree, 1)
    return max(2.0, 2.0 * ratio ** (1.0 / deg))


def probe_conjecture(
    phi: BiPoly,
    n_seeds: int = 10,
    budget: Budget = Budget(),
    rng_seed: int = 0,
    workers: int = 1,
    margin: float = SEED_MARGIN,
) -> ProbeResult:
    """Explore n_seeds random non-singular seeds and compare the components."""
    report = analyze(phi)
    if not report.is_standard:
        raise NotStandardError(
            "probe requires a standard polynomial", reasons=report.failure_reasons
        )
    singular = singular_vertex_values(phi, report)
    r_max = sample_radius(phi)
    rng = random.Random(rng_seed)
    seeds: list[complex] = []
    attempts = 0
    while len(seeds) < n_seeds:
        attempts += 1
        if attempts > 1000 * n_seeds:
            raise DomainError("could not sample seeds away from singular vertices")
        r = math.sqrt(rng.uniform(_MIN_RADIUS**2, r_max**2))
        theta = rng.uniform(0.0, 2 * math.pi)
        u = complex(r * math.cos(theta), r * math.sin(theta))
        if all(abs(u - s) > margin for s in singular):
            seeds.append(u)

    def job(u: complex) -> ExploredDigraph:
        return explore_component(phi, u, budget)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            graphs = list(pool.map(job, seeds))
    else:
        graphs = [job(u) for u in seeds]

    labels = [classify(g) for g in graphs]
    truncated_count = sum(1 for g in graphs if g.truncated)

    all_iso: bool | None
    counterexample = None
    if truncated_count > 0:
        all_iso = None
    else:
        all_iso = True
        for i in range(len(graphs)):
            if all_iso is not True:
                break
            for j in range(i + 1, len(graphs)):
                same = _components_isomorphic(graphs[i], graphs[j], labels[i], labels[j])
                if same is False:
                    all_iso = False
                    counterexample = (i, j)
                    break
                if same is None:
                    all_iso = None
    return ProbeResult(
        polynomial=phi,
        seeds=tuple(seeds),
        labels=tuple(labels),
        all_isomorphic=all_iso,
        truncated_count=truncated_count,
        counterexample=counterexample,
        graphs=tuple(graphs),
    )


def _components_isomorphic(g, h, lg: ShapeLabel, lh: ShapeLabel) -> bool | None:
    if lg.shape is not Shape.UNKNOWN and lh.shape is not Shape.UNKNOWN:
        return lg == lh
    if g.order != h.order or len(g.arcs) != len(h.arcs):
        return False
    try:
        return is_isomorphic(g, h)
    except SizeLimitError:
        return None
