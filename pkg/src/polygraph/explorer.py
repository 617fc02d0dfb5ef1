"""Budgeted breadth-first exploration of G(Phi) and component classification.

Vertices are complex numbers deduplicated through a spatial hash with cell
side dedup_eps; the first value discovered in a cell neighborhood is the
canonical representative, and ids follow BFS discovery order, so identical
inputs give identical graphs.

Weak components alternate out- and in-neighbors; strong components run a
forward sweep and, only if that sweep hits the budget, a backward one, then
extract the strongly connected component of the seed.  A forward sweep that
closes is a complete certificate: every directed cycle through the seed
lies inside it.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass

from .analyzer import analyze
from .bipoly import BiPoly, in_poly, out_poly
from .errors import (
    DomainError,
    ExplorationError,
    NotStandardError,
    RootFindingError,
    SizeLimitError,
)
from .rootfind import newton_polish, roots as find_roots

DEFAULT_MAX_VERTICES = 5000
DEFAULT_MAX_DEPTH = 50
DEFAULT_DEDUP_EPS = 1e-6
ISO_LIMIT = 12


@dataclass(frozen=True)
class Budget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_depth: int = DEFAULT_MAX_DEPTH
    dedup_eps: float = DEFAULT_DEDUP_EPS

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_depth <= 0 or self.dedup_eps <= 0:
            raise DomainError("budget fields must be positive")


class Shape(enum.Enum):
    DIRECTED_CYCLE = "DirectedCycle"
    CYCLE = "Cycle"
    COMPLETE = "CompleteK"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    DOUBLE_RAY_PREFIX = "DoubleRayPrefix"
    DIRECTED_PATH_PREFIX = "DirectedPathPrefix"
    GRID_PREFIX = "GridPrefix"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ShapeLabel:
    shape: Shape
    n: int = 0

    def __str__(self):
        return f"{self.shape.value}({self.n})" if self.n else self.shape.value


def labels_equivalent(a: ShapeLabel, b: ShapeLabel) -> bool:
    """Label equality modulo graph coincidences C3 = K3 and C4 = K_{2,2}."""
    if a == b:
        return True
    pair = {a, b}
    if pair == {ShapeLabel(Shape.CYCLE, 3), ShapeLabel(Shape.COMPLETE, 3)}:
        return True
    if pair == {ShapeLabel(Shape.CYCLE, 4), ShapeLabel(Shape.COMPLETE_BIPARTITE, 2)}:
        return True
    return False


@dataclass(frozen=True)
class ExploredDigraph:
    vertices: tuple[tuple[int, complex], ...]
    arcs: tuple[tuple[int, int, int], ...]
    truncated: bool
    seed_id: int
    frontier_ids: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.vertices)

    def value(self, vid: int) -> complex:
        return self.vertices[vid][1]

    def out_arcs(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {v: [] for v, _ in self.vertices}
        for f, t, m in self.arcs:
            out[f].append((t, m))
        return out

    def in_arcs(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {v: [] for v, _ in self.vertices}
        for f, t, m in self.arcs:
            out[t].append((f, m))
        return out

    def as_json(self) -> dict:
        return {
            "seed": self.seed_id,
            "truncated": self.truncated,
            "vertices": [
                {"id": vid, "re": val.real, "im": val.imag}
                for vid, val in self.vertices
            ],
            "arcs": [
                {"from": f, "to": t, "mult": m} for f, t, m in self.arcs
            ],
        }


# -- vertex dedup table ---------------------------------------------------------


class _VertexTable:
    def __init__(self, eps: float):
        self.eps = eps
        self.values: list[complex] = []
        self.cells: dict[tuple[int, int], list[int]] = {}

    def _cell(self, z: complex) -> tuple[int, int]:
        return (math.floor(z.real / self.eps), math.floor(z.imag / self.eps))

    def find(self, z: complex) -> int | None:
        cx, cy = self._cell(z)
        best = None
        best_d = self.eps
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for vid in self.cells.get((cx + dx, cy + dy), ()):
                    d = abs(self.values[vid] - z)
                    if d < best_d:
                        best, best_d = vid, d
        return best

    def add(self, z: complex) -> int:
        vid = len(self.values)
        self.values.append(z)
        self.cells.setdefault(self._cell(z), []).append(vid)
        return vid

    def find_or_add(self, z: complex) -> tuple[int, bool]:
        vid = self.find(z)
        if vid is not None:
            return vid, False
        return self.add(z), True


# -- neighbor enumeration ---------------------------------------------------------


def out_neighbors(phi: BiPoly, u: complex) -> list[tuple[complex, int]]:
    """Roots with multiplicity of Phi(u, y), sorted; [] if the degree drops to 0."""
    q = out_poly(phi, u)
    if q.degree < 1:
        return []
    rs = find_roots(q)
    vals = [
        (newton_polish(r.value, q, r.multiplicity), r.multiplicity) for r in rs.roots
    ]
    return sorted(vals, key=lambda vm: (vm[0].real, vm[0].imag))


def in_neighbors(phi: BiPoly, v: complex) -> list[tuple[complex, int]]:
    """Roots with multiplicity of Phi(x, v), sorted; [] if the degree drops to 0."""
    q = in_poly(phi, v)
    if q.degree < 1:
        return []
    rs = find_roots(q)
    vals = [
        (newton_polish(r.value, q, r.multiplicity), r.multiplicity) for r in rs.roots
    ]
    return sorted(vals, key=lambda vm: (vm[0].real, vm[0].imag))


# -- BFS engine ---------------------------------------------------------------------


class _Sweep:
    """Shared BFS machinery for weak/forward/backward exploration."""

    def __init__(self, phi: BiPoly, budget: Budget, table: _VertexTable):
        self.phi = phi.to_float()
        self.budget = budget
        self.table = table
        self.out_arcs: dict[int, list[tuple[int, int]]] = {}
        self.in_arcs_seen: dict[tuple[int, int], int] = {}
        self.expanded: set[int] = set()
        self.frontier: set[int] = set()
        self.truncated = False

    def run(self, seed_id: int, direction: str, depth0: int = 0):
        queue = deque([(seed_id, depth0)])
        enqueued = {seed_id}
        while queue:
            vid, depth = queue.popleft()
            if vid in self.expanded:
                continue
            if depth >= self.budget.max_depth:
                self.truncated = True
                self.frontier.add(vid)
                continue
            try:
                targets = self._expand(vid, direction)
            except RootFindingError as exc:
                raise ExplorationError(
                    "root finding failed during exploration",
                    partial=self._snapshot(seed_id),
                    vertex=str(self.table.values[vid]),
                ) from exc
            self.expanded.add(vid)
            self.frontier.discard(vid)
            for wid in targets:
                if wid not in enqueued and wid not in self.expanded:
                    enqueued.add(wid)
                    queue.append((wid, depth + 1))

    def _expand(self, vid: int, direction: str) -> list[int]:
        u = self.table.values[vid]
        new_ids: list[int] = []
        if direction in ("weak", "fwd"):
            outs = out_neighbors(self.phi, u)
            arc_list: list[tuple[int, int]] = []
            for val, mult in outs:
                wid = self._materialize(val)
                if wid is None:
                    continue
                arc_list.append((wid, mult))
                new_ids.append(wid)
            self.out_arcs[vid] = arc_list
        if direction in ("weak", "bwd"):
            ins = in_neighbors(self.phi, u)
            for val, mult in ins:
                wid = self._materialize(val)
                if wid is None:
                    continue
                # Provisional: arc multiplicity is authoritative from the
                # out side; replaced when/if wid itself is expanded.
                self.in_arcs_seen[(wid, vid)] = mult
                new_ids.append(wid)
        return new_ids

    def _materialize(self, val: complex) -> int | None:
        wid = self.table.find(val)
        if wid is not None:
            return wid
        if len(self.table.values) >= self.budget.max_vertices:
            self.truncated = True
            return None
        return self.table.add(val)

    def _snapshot(self, seed_id: int) -> "ExploredDigraph":
        return _build_graph(self, seed_id, truncated=True)


def _build_graph(sweep: _Sweep, seed_id: int, truncated: bool | None = None) -> ExploredDigraph:
    arcs: list[tuple[int, int, int]] = []
    for f in sorted(sweep.out_arcs):
        for t, m in sweep.out_arcs[f]:
            arcs.append((f, t, m))
    for (f, t), m in sorted(sweep.in_arcs_seen.items()):
        if f not in sweep.out_arcs:
            arcs.append((f, t, m))
    n = len(sweep.table.values)
    unexpanded = [i for i in range(n) if i not in sweep.expanded]
    trunc = sweep.truncated or bool(unexpanded) if truncated is None else truncated
    return ExploredDigraph(
        vertices=tuple((i, sweep.table.values[i]) for i in range(n)),
        arcs=tuple(sorted(arcs)),
        truncated=trunc,
        seed_id=seed_id,
        frontier_ids=tuple(sorted(set(unexpanded) | sweep.frontier)),
    )


def _require_standard(phi: BiPoly):
    report = analyze(phi)
    if not report.is_standard:
        raise NotStandardError(
            "exploration requires a standard polynomial",
            reasons=report.failure_reasons,
        )
    return report


def explore_component(phi: BiPoly, seed: complex, budget: Budget = Budget()) -> ExploredDigraph:
    """Weak component of the seed: BFS over out- and in-neighbors."""
    _require_standard(phi)
    table = _VertexTable(budget.dedup_eps)
    seed_id = table.add(complex(seed))
    sweep = _Sweep(phi, budget, table)
    sweep.run(seed_id, "weak")
    return _build_graph(sweep, seed_id)


def explore_strong_component(phi: BiPoly, seed: complex, budget: Budget = Budget()) -> ExploredDigraph:
    """Strong component of the seed, exact when a directed sweep closes."""
    _require_standard(phi)
    table = _VertexTable(budget.dedup_eps)
    seed_id = table.add(complex(seed))
    fwd = _Sweep(phi, budget, table)
    fwd.run(seed_id, "fwd")
    fwd_closed = not fwd.truncated and all(
        i in fwd.expanded for i in range(len(table.values))
    )
    if fwd_closed:
        comp = _scc_of(seed_id, len(table.values), fwd.out_arcs)
        return _induced(table, fwd.out_arcs, comp, seed_id, truncated=False)

    bwd = _Sweep(phi, budget, table)
    bwd.out_arcs = fwd.out_arcs  # share definitively recorded out-arcs
    bwd.run(seed_id, "bwd")
    n = len(table.values)
    arcs: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for f, lst in fwd.out_arcs.items():
        arcs[f] = list(lst)
    for (f, t), m in bwd.in_arcs_seen.items():
        if f not in fwd.out_arcs:
            arcs[f].append((t, m))
    comp = _scc_of(seed_id, n, arcs)
    return _induced(table, arcs, comp, seed_id, truncated=True)


def _scc_of(seed_id: int, n: int, out_arcs: dict[int, list[tuple[int, int]]]) -> set[int]:
    """Iterative Tarjan restricted to the component containing seed_id."""
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    comp_of: dict[int, int] = {}
    counter = [0]
    comps: list[set[int]] = []

    for root in range(n):
        if root in index:
            continue
        work = [(root, iter(out_arcs.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w, _m in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(out_arcs.get(w, ()))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    comp_of[w] = len(comps)
                    if w == v:
                        break
                comps.append(comp)
    return comps[comp_of[seed_id]]


def _induced(
    table: _VertexTable,
    out_arcs: dict[int, list[tuple[int, int]]],
    comp: set[int],
    seed_id: int,
    truncated: bool,
) -> ExploredDigraph:
    order = sorted(comp)
    remap = {old: new for new, old in enumerate(order)}
    arcs = []
    for f in order:
        for t, m in out_arcs.get(f, ()):
            if t in comp:
                arcs.append((remap[f], remap[t], m))
    return ExploredDigraph(
        vertices=tuple((remap[v], table.values[v]) for v in order),
        arcs=tuple(sorted(arcs)),
        truncated=truncated,
        seed_id=remap[seed_id],
    )


# -- classification ------------------------------------------------------------------


def classify(g: ExploredDigraph) -> ShapeLabel:
    """Recognize the component shapes that actually occur, else Unknown."""
    n = g.order
    if n == 0:
        return ShapeLabel(Shape.UNKNOWN)
    out = g.out_arcs()
    inn = g.in_arcs()
    has_loop = any(f == t for f, t, _ in g.arcs)
    has_multi = any(m > 1 for _, _, m in g.arcs)
    arc_set = {(f, t) for f, t, _ in g.arcs}
    symmetric = all((t, f) in arc_set for f, t in arc_set)

    if not g.truncated:
        if has_loop or has_multi:
            return ShapeLabel(Shape.UNKNOWN)
        outdeg = {v: sum(m for _, m in lst) for v, lst in out.items()}
        indeg = {v: sum(m for _, m in lst) for v, lst in inn.items()}
        if n >= 2 and all(outdeg[v] == 1 and indeg[v] == 1 for v in outdeg):
            if _is_single_cycle(g, out):
                return ShapeLabel(Shape.DIRECTED_CYCLE, n)
        if symmetric and len(arc_set) == n * (n - 1) and n >= 2:
            return ShapeLabel(Shape.COMPLETE, n)
        if symmetric and n % 2 == 0:
            d = n // 2
            sides = _bipartition(g, arc_set)
            if (
                sides is not None
                and len(sides[0]) == d
                and len(arc_set) == 2 * d * d
            ):
                return ShapeLabel(Shape.COMPLETE_BIPARTITE, d)
        if symmetric and n >= 3 and _is_undirected_cycle(g, arc_set):
            return ShapeLabel(Shape.CYCLE, n)
        return ShapeLabel(Shape.UNKNOWN)

    # Truncated graphs: prefix recognizers.
    if not has_loop and not has_multi:
        if not symmetric and _is_directed_chain(g, out, inn):
            return ShapeLabel(Shape.DIRECTED_PATH_PREFIX)
        if symmetric and _is_path_graph(g, arc_set):
            return ShapeLabel(Shape.DOUBLE_RAY_PREFIX)
        if _looks_like_grid(g):
            return ShapeLabel(Shape.GRID_PREFIX)
    return ShapeLabel(Shape.UNKNOWN)


def _is_single_cycle(g: ExploredDigraph, out) -> bool:
    succ = {v: lst[0][0] for v, lst in out.items() if lst}
    if len(succ) != g.order:
        return False
    start = g.vertices[0][0]
    seen = set()
    cur = start
    for _ in range(g.order):
        if cur in seen:
            return False
        seen.add(cur)
        cur = succ[cur]
    return cur == start and len(seen) == g.order


def _neighbors(arc_set: set[tuple[int, int]]) -> dict[int, set[int]]:
    nb: dict[int, set[int]] = {}
    for f, t in arc_set:
        if f != t:
            nb.setdefault(f, set()).add(t)
            nb.setdefault(t, set()).add(f)
    return nb


def _bipartition(g: ExploredDigraph, arc_set) -> tuple[set[int], set[int]] | None:
    nb = _neighbors(arc_set)
    color: dict[int, int] = {}
    for start, _ in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in nb.get(v, ()):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = {v for v, c in color.items() if c == 0}
    side1 = {v for v, c in color.items() if c == 1}
    return side0, side1


def _is_undirected_cycle(g: ExploredDigraph, arc_set) -> bool:
    nb = _neighbors(arc_set)
    if len(nb) != g.order or any(len(s) != 2 for s in nb.values()):
        return False
    start = g.vertices[0][0]
    prev, cur = None, start
    for _ in range(g.order):
        nxt = [w for w in nb[cur] if w != prev]
        if not nxt:
            return False
        prev, cur = cur, nxt[0]
    return cur == start


def _is_path_graph(g: ExploredDigraph, arc_set) -> bool:
    nb = _neighbors(arc_set)
    if len(nb) != g.order:
        return g.order == 1 and not arc_set
    degs = sorted(len(s) for s in nb.values())
    if g.order == 1:
        return True
    if degs.count(1) != 2 or any(d > 2 for d in degs):
        return False
    return len(arc_set) == 2 * (g.order - 1)


def _is_directed_chain(g: ExploredDigraph, out, inn) -> bool:
    outdeg = {v: len(lst) for v, lst in out.items()}
    indeg = {v: len(lst) for v, lst in inn.items()}
    if any(d > 1 for d in outdeg.values()) or any(d > 1 for d in indeg.values()):
        return False
    return len(g.arcs) >= g.order - 1 >= 0 and len(g.arcs) <= g.order


def _looks_like_grid(g: ExploredDigraph, eps: float = 1e-6) -> bool:
    diffs: list[complex] = []
    for f, t, _ in g.arcs:
        d = g.value(t) - g.value(f)
        if all(abs(d - e) > eps * (1 + abs(e)) for e in diffs):
            diffs.append(d)
        if len(diffs) > 4:
            return False
    if len(diffs) != 4:
        return False
    used = [False] * 4
    pairs = []
    for i in range(4):
        if used[i]:
            continue
        mate = None
        for j in range(i + 1, 4):
            if not used[j] and abs(diffs[i] + diffs[j]) <= eps * (1 + abs(diffs[i])):
                mate = j
                break
        if mate is None:
            return False
        used[i] = used[mate] = True
        pairs.append(diffs[i])
    s, t = pairs
    cross = (s * t.conjugate()).imag
    return abs(cross) > eps * (abs(s) * abs(t) + 1)


# -- isomorphism -----------------------------------------------------------------


def is_isomorphic(g: ExploredDigraph, h: ExploredDigraph) -> bool:
    """Arc-multiplicity-preserving bijection search for closed small graphs."""
    if g.truncated or h.truncated:
        raise SizeLimitError("isomorphism testing needs closed graphs")
    if g.order > ISO_LIMIT or h.order > ISO_LIMIT:
        raise SizeLimitError(
            "graphs too large for exact matching; compare classify labels",
            limit=ISO_LIMIT,
        )
    if g.order != h.order or len(g.arcs) != len(h.arcs):
        return False

    def adj(gr: ExploredDigraph):
        a: dict[tuple[int, int], int] = {}
        for f, t, m in gr.arcs:
            a[(f, t)] = a.get((f, t), 0) + m
        return a

    ag, ah = adj(g), adj(h)
    if sorted(ag.values()) != sorted(ah.values()):
        return False

    def signature(a, n):
        sig = {}
        for v in range(n):
            outs = sorted(m for (f, _), m in a.items() if f == v)
            ins = sorted(m for (_, t), m in a.items() if t == v)
            loop = a.get((v, v), 0)
            sig[v] = (tuple(outs), tuple(ins), loop)
        return sig

    n = g.order
    sg, sh = signature(ag, n), signature(ah, n)
    if sorted(sg.values()) != sorted(sh.values()):
        return False

    order = sorted(range(n), key=lambda v: (sg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def compatible(v, w):
        if sg[v] != sh[w]:
            return False
        for u, img in mapping.items():
            if ag.get((v, u), 0) != ah.get((w, img), 0):
                return False
            if ag.get((u, v), 0) != ah.get((img, w), 0):
                return False
        return ag.get((v, v), 0) == ah.get((w, w), 0)

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if w in used or not compatible(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return backtrack(0)


# -- export ------------------------------------------------------------------------


def _label(z: complex) -> str:
    re = float(f"{z.real:.6g}")
    im = float(f"{z.imag:.6g}")
    if im == 0:
        return f"{re:.6g}"
    im_txt = f"{im:.6g}i"
    if re == 0:
        return im_txt
    return f"{re:.6g}{'+' if im > 0 else ''}{im_txt}"


def export(g: ExploredDigraph, fmt: str = "json") -> bytes:
    """Serialize the graph as DOT or canonical JSON bytes."""
    if fmt == "json":
        import json

        return (json.dumps(g.as_json(), sort_keys=True) + "\n").encode()
    if fmt == "dot":
        lines = ["digraph polygraph {"]
        for vid, val in g.vertices:
            lines.append(f'  {vid} [label="{_label(val)}"];')
        for f, t, m in g.arcs:
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  {f} -> {t}{attr};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")
