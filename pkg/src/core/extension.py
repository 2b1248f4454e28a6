"""
Constructive (Δ+2, 2)-incidence coloring of outerplanar graphs.

The solver reduces each connected component by repeatedly deleting the
vertex u of a reducible configuration until only components of maximum
degree at most 2 remain. Those are colored directly, then the deleted
vertices are put back in reverse order and each extension step colors the
four (or two) incidences on u's edges.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .exceptions import ContractViolation, InvariantFailure, NotOuterplanarError, NotReducibleError
from .graph import Graph, is_connected, reachable_from, subgraph
from .incidence import (
    Incidence,
    IncidenceColoring,
    feasible_colors,
    incoming_color_set,
    verify_coloring,
)
from .reduction import Configuration, ConfigurationCase, PieceReducer, exceeds_edge_bound

logger = logging.getLogger(__name__)

# Colors the base colorer may use when patching cycles whose length is not a multiple of 3.
BASE_WINDOW_PALETTE = 4
BASE_WINDOW_EDGES = 4


@dataclass(frozen=True)
class SolverConfig:
    """Palette size ``k`` and incoming bound ``l`` for one solve."""

    k: int
    l: int = 2

    def __post_init__(self):
        if self.k < 3:
            raise ContractViolation(f"palette size must be at least 3, got {self.k}")

    @classmethod
    def for_graph(cls, g: Graph) -> "SolverConfig":
        """k = Δ + 2, with Δ floored at 1 so k is never below 3."""
        return cls(k=max(g.max_degree, 1) + 2)


@dataclass(frozen=True)
class ColorPermutation:
    """A bijection on the palette ``[0, len(mapping))``."""

    mapping: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ContractViolation(f"not a permutation: {self.mapping}")

    @classmethod
    def identity(cls, k: int) -> "ColorPermutation":
        return cls(tuple(range(k)))

    @property
    def size(self) -> int:
        return len(self.mapping)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))

    def __call__(self, color: int) -> int:
        return self.mapping[color]


@dataclass(frozen=True)
class TraceStep:
    """One entry of a solve trace: a base-colored component or an applied configuration."""

    configuration: Optional[Configuration] = None
    component: Tuple[int, ...] = ()
    note: Optional[str] = None

    def describe(self) -> str:
        if self.configuration is not None:
            text = f"reduce {self.configuration}"
        else:
            text = f"base component on {len(self.component)} vertices"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass
class SolveResult:
    k: int
    coloring: IncidenceColoring
    trace: List[TraceStep] = field(default_factory=list)

    @property
    def configurations(self) -> List[Configuration]:
        return [step.configuration for step in self.trace if step.configuration is not None]


def _pick(g: Graph, c: IncidenceColoring, inc: Incidence, within: Optional[Set[int]] = None) -> int:
    """Smallest feasible color for ``inc``, optionally restricted to ``within``."""
    options = feasible_colors(g, c, inc)
    if within is not None:
        options &= within
    if not options:
        raise InvariantFailure(f"no admissible color for incidence {tuple(inc)}")
    return min(options)


def _require_neighbors(g: Graph, u: int, expected: Iterable[int]) -> None:
    if g.neighbors(u) != frozenset(expected):
        raise ContractViolation(
            f"vertex {u} has neighbors {sorted(g.neighbors(u))}, expected {sorted(expected)}")


# Base case

def _walk_order(g: Graph) -> List[int]:
    """Vertices of a connected graph of maximum degree 2 in path or cycle order."""
    ends = [v for v in g.vertices if g.degree(v) <= 1]
    start = ends[0] if ends else g.vertices[0]
    order = [start]
    previous, current = None, start
    while True:
        ahead = [y for y in g.sorted_neighbors(current) if y != previous]
        if not ahead or ahead[0] == start:
            break
        previous, current = current, ahead[0]
        order.append(current)
    return order


def _complete_by_search(g: Graph, c: IncidenceColoring, pending: Sequence[Incidence]) -> bool:
    """Depth-first search coloring ``pending`` in place; False if impossible."""
    if not pending:
        return True
    inc = pending[0]
    for color in sorted(feasible_colors(g, c, inc)):
        c.assign(inc, color)
        if _complete_by_search(g, c, pending[1:]):
            return True
        c.unassign(inc)
    return False


def color_base_component(g: Graph, cfg: SolverConfig) -> IncidenceColoring:
    """Color a connected graph of maximum degree at most 2.

    Along a path v0..v(n-1) the incidence (v_i, v_i+1) gets color i mod 3 and
    (v_i+1, v_i) gets (i + 2) mod 3. Cycles whose length is a multiple of 3
    take the same pattern all the way round; other cycles keep it on all but
    the last four edges, and those eight incidences are searched
    exhaustively over colors 0..3.

    Raises:
        ContractViolation: If g is not connected, has a vertex of degree 3 or
            more, or the palette is too small.
        InvariantFailure: If the resulting coloring does not verify.
    """
    if g.max_degree > 2:
        raise ContractViolation(f"base colorer needs maximum degree <= 2, got {g.max_degree}")
    if not is_connected(g):
        raise ContractViolation("base colorer needs a connected graph")

    c = IncidenceColoring(cfg.k, cfg.l)
    if g.edge_count == 0:
        return c

    order = _walk_order(g)
    n = len(order)
    cyclic = g.edge_count == n
    if cyclic:
        edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    else:
        edges = [(order[i], order[i + 1]) for i in range(n - 1)]

    needs_patch = cyclic and n % 3 != 0
    minimum = BASE_WINDOW_PALETTE if needs_patch else 3
    if cfg.k < minimum:
        raise ContractViolation(f"{'cycle' if cyclic else 'path'} on {n} vertices needs k >= {minimum}")

    patterned = len(edges) - BASE_WINDOW_EDGES if needs_patch else len(edges)
    for i, (a, b) in enumerate(edges[:max(patterned, 0)]):
        c.assign(Incidence(a, b), i % 3)
        c.assign(Incidence(b, a), (i + 2) % 3)

    if needs_patch:
        window = []
        for a, b in edges[max(patterned, 0):]:
            window.extend((Incidence(a, b), Incidence(b, a)))
        scratch = c.with_palette(BASE_WINDOW_PALETTE)
        if not _complete_by_search(g, scratch, window):
            raise InvariantFailure(f"no patch for the base cycle on {n} vertices")
        c = scratch.with_palette(cfg.k)
        logger.debug(f"Patched cycle of length {n} over a window of {len(window)} incidences")

    report = verify_coloring(g, c, require_total=True)
    if not report.is_valid:
        raise InvariantFailure(f"base coloring failed verification: {report.describe()[:3]}")
    return c


# Extension steps. Each public step copies its input; the solver drives the
# in-place variants on the coloring it owns.

def _extend_case1(g: Graph, c: IncidenceColoring, u: int, v: int) -> None:
    c.assign(Incidence(v, u), _pick(g, c, Incidence(v, u)))
    incoming = incoming_color_set(g, c, v)
    if not incoming:
        raise InvariantFailure(f"vertex {v} has no incoming color to reuse for ({u}, {v})")
    c.assign(Incidence(u, v), _pick(g, c, Incidence(u, v), within=incoming))


def extend_case1(g: Graph, c: IncidenceColoring, u: int, v: int) -> IncidenceColoring:
    """Extend a coloring of g - u to g where u is a leaf hanging from v.

    (v, vu) takes any feasible color; (u, uv) reuses a color already
    incoming at v, so v's incoming set does not grow.

    Raises:
        ContractViolation: If u is not a leaf of g adjacent to v, or v is isolated in g - u.
        InvariantFailure: If no admissible color exists.
    """
    _require_neighbors(g, u, (v,))
    if g.degree(v) < 2:
        raise ContractViolation(f"vertex {v} is isolated in g - {u}; use the base colorer")
    c = c.copy()
    _extend_case1(g, c, u, v)
    return c


def _extend_case2(g: Graph, c: IncidenceColoring, u: int, v: int, w: int, x: int) -> None:
    c.assign(Incidence(w, u), _pick(g, c, Incidence(w, u)))
    incoming_w = incoming_color_set(g, c, w)
    if not incoming_w:
        raise InvariantFailure(f"vertex {w} has no incoming color to reuse for ({u}, {w})")
    c.assign(Incidence(u, w), _pick(g, c, Incidence(u, w), within=incoming_w))

    uv = Incidence(u, v)
    options = feasible_colors(g, c, uv)
    preferred = c.get(Incidence(x, v))
    if preferred is not None and preferred in options:
        c.assign(uv, preferred)
    else:
        c.assign(uv, _pick(g, c, uv))
    c.assign(Incidence(v, u), _pick(g, c, Incidence(v, u)))


def extend_case2(g: Graph, c: IncidenceColoring, u: int, v: int, w: int, x: int) -> IncidenceColoring:
    """Extend a coloring of g - u to g where u, v are adjacent degree-2 vertices.

    w is u's other neighbor and x is v's. (u, uv) prefers the color of
    (x, xv), which keeps v's incoming set to a single color; any feasible
    color is used otherwise.

    Raises:
        ContractViolation: On a witness that does not match g or a palette below 5.
        InvariantFailure: If no admissible color exists.
    """
    _require_neighbors(g, u, (v, w))
    _require_neighbors(g, v, (u, x))
    if w == x:
        raise ContractViolation("case 2 needs distinct outer neighbors w and x")
    if c.k < 5:
        raise ContractViolation(f"case 2 extension needs k >= 5, got {c.k}")
    c = c.copy()
    _extend_case2(g, c, u, v, w, x)
    return c


def _extend_case3(g: Graph, c: IncidenceColoring, u: int, v: int, w: int) -> None:
    alpha = c.get(Incidence(v, w))
    beta = c.get(Incidence(w, v))
    if alpha is None or beta is None:
        raise InvariantFailure(f"edge {v}-{w} is not fully colored")
    c.assign(Incidence(u, w), _pick(g, c, Incidence(u, w), within={alpha}))
    c.assign(Incidence(u, v), _pick(g, c, Incidence(u, v), within={beta}))
    c.assign(Incidence(v, u), _pick(g, c, Incidence(v, u)))
    c.assign(Incidence(w, u), _pick(g, c, Incidence(w, u)))


def extend_case3(g: Graph, c: IncidenceColoring, u: int, v: int, w: int) -> IncidenceColoring:
    """Extend a coloring of g - u to g where u's neighbors v, w are adjacent.

    With alpha = c(v, vw) and beta = c(w, wv), (u, uw) takes alpha and
    (u, uv) takes beta; both are already incoming at their heads. (v, vu)
    and (w, wu) then take any feasible colors, possibly the same one.

    Raises:
        ContractViolation: If the witness does not match g.
        InvariantFailure: If no admissible color exists.
    """
    _require_neighbors(g, u, (v, w))
    if not g.has_edge(v, w):
        raise ContractViolation(f"case 3 needs the edge {v}-{w}")
    c = c.copy()
    _extend_case3(g, c, u, v, w)
    return c


def avoiding_permutation(alpha: int, gamma: int, beta: int, delta: int, k: int) -> ColorPermutation:
    """Permutation of ``[0, k)`` sending beta and delta outside {alpha, gamma}.

    When both already avoid {alpha, gamma} the identity is returned. Otherwise
    beta and delta go to the smallest colors outside {alpha, gamma}; every
    other color stays fixed when its image is still free, and the leftovers
    are paired in ascending order.

    Raises:
        ContractViolation: If k < 4.
    """
    if k < 4:
        raise ContractViolation(f"avoiding permutation needs k >= 4, got {k}")
    blocked = {alpha, gamma}
    if beta not in blocked and delta not in blocked:
        return ColorPermutation.identity(k)

    targets = [color for color in range(k) if color not in blocked]
    mapping = {beta: targets[0]}
    if delta != beta:
        mapping[delta] = targets[1]

    taken = set(mapping.values())
    for color in range(k):
        if color not in mapping and color not in taken:
            mapping[color] = color
            taken.add(color)
    leftovers = [color for color in range(k) if color not in mapping]
    free = [color for color in range(k) if color not in taken]
    mapping.update(zip(leftovers, free))
    return ColorPermutation(tuple(mapping[color] for color in range(k)))


def apply_color_permutation(c: IncidenceColoring, p: ColorPermutation) -> IncidenceColoring:
    """Relabel every color x of c as p(x). Validity is preserved.

    Raises:
        ContractViolation: If c uses a color outside p's domain.
    """
    relabeled = IncidenceColoring(c.k, c.l)
    for inc, color in c.items():
        if not 0 <= color < p.size:
            raise ContractViolation(f"color {color} outside permutation domain [0, {p.size})")
        relabeled.assign(inc, p(color))
    return relabeled


def extend_case4(g: Graph, c_v: IncidenceColoring, c_w: IncidenceColoring,
                 u: int, v: int, w: int, notes: Optional[List[str]] = None) -> IncidenceColoring:
    """Join colorings of the two components of g - u through the cut vertex u.

    On the side of v, (v, vu) takes a feasible color alpha and (u, uv) a color
    gamma incoming at v; likewise beta and delta on the side of w. The w side
    is then relabeled so beta and delta avoid alpha and gamma, and the two
    sides are merged. When a side has no incoming color (a single vertex),
    the corresponding incidence takes any feasible color instead and a note
    is appended to ``notes``.

    Raises:
        ContractViolation: If u is not a degree-2 vertex with neighbors v, w or
            the palettes differ.
        InvariantFailure: If no admissible color exists.
    """
    _require_neighbors(g, u, (v, w))
    if c_v.k != c_w.k or c_v.l != c_w.l:
        raise ContractViolation("component colorings must share a palette")

    def attach(side: IncidenceColoring, near: int) -> Tuple[IncidenceColoring, int, int]:
        side = side.copy()
        outward = _pick(g, side, Incidence(near, u))
        side.assign(Incidence(near, u), outward)
        incoming = incoming_color_set(g, side, near)
        if not incoming:
            message = f"vertex {near} has no incoming color; ({u}, {near}) colored freely"
            logger.debug(message)
            if notes is not None:
                notes.append(message)
        inward = _pick(g, side, Incidence(u, near), within=incoming or None)
        side.assign(Incidence(u, near), inward)
        return side, outward, inward

    side_v, alpha, gamma = attach(c_v, v)
    side_w, beta, delta = attach(c_w, w)

    permutation = avoiding_permutation(alpha, gamma, beta, delta, c_v.k)
    if not permutation.is_identity:
        logger.debug(f"Relabeling side of {w} by {permutation.mapping}")
    return side_v.merged(apply_color_permutation(side_w, permutation))


# Solver

def _coloring_on(g: Graph, c: IncidenceColoring, vertices: FrozenSet[int]) -> IncidenceColoring:
    """Sub-coloring on the edges of g inside ``vertices``."""
    part = IncidenceColoring(c.k, c.l)
    for a in vertices:
        for b in g.neighbors(a):
            if b in vertices:
                color = c.get(Incidence(a, b))
                if color is not None:
                    part.assign(Incidence(a, b), color)
    return part


class IncidenceSolver:
    """Computes (Δ+2, 2)-incidence colorings of outerplanar graphs."""

    def __init__(self, metrics=None, verify: bool = True):
        """Initialize the solver.

        Args:
            metrics: Optional metrics collector notified of configurations and solves.
            verify: Run the verifier on the final coloring.
        """
        self.metrics = metrics
        self.verify = verify

    def solve(self, g: Graph) -> SolveResult:
        """Color g with palette max(Δ, 1) + 2.

        Raises:
            NotOuterplanarError: If a component breaks the edge bound.
            NotReducibleError: If a component has no reducible configuration.
        """
        started = time.perf_counter()
        try:
            result = self._solve(g)
        except (NotOuterplanarError, NotReducibleError):
            self._record_solve("rejected", started)
            raise
        except Exception:
            self._record_solve("error", started)
            raise
        self._record_solve("success", started)
        return result

    def _record_solve(self, status: str, started: float) -> None:
        if self.metrics:
            self.metrics.record_solve(status, time.perf_counter() - started)

    def _solve(self, g: Graph) -> SolveResult:
        cfg = SolverConfig.for_graph(g)
        trace: List[TraceStep] = []
        reductions: List[Configuration] = []
        base_pieces: List[Graph] = []
        debug = logger.isEnabledFor(logging.DEBUG)

        reducer = PieceReducer(g)
        work = list(reversed(reducer.pieces))
        while work:
            piece = work.pop()
            if piece.is_base:
                base = reducer.graph_of(piece)
                base_pieces.append(base)
                trace.append(TraceStep(component=base.vertices))
                continue

            if exceeds_edge_bound(piece.vertex_count, piece.edge_count):
                logger.warning(f"Component with n={piece.vertex_count}, m={piece.edge_count} "
                               f"fails the outerplanar edge bound")
                raise NotOuterplanarError(piece.vertex_count, piece.edge_count)

            config = reducer.next_configuration(piece)
            if config is None:
                logger.warning(f"No reducible configuration in component of {piece.vertex_count} vertices")
                raise NotReducibleError(frozenset(piece.vertices))

            if debug:
                logger.debug(f"Reducing {config}")
            reductions.append(config)
            trace.append(TraceStep(configuration=config))
            if self.metrics:
                self.metrics.record_configuration(config.case.value)

            split = reducer.remove(piece, config)
            work.append(piece)
            if split is not None:
                work.append(split)

        coloring = IncidenceColoring(cfg.k, cfg.l)
        present: Set[int] = set()
        for base in base_pieces:
            present.update(base.vertices)
            for inc, color in color_base_component(base, cfg).items():
                coloring.assign(inc, color)

        # Incidences at vertices not yet put back are uncolored, so every
        # feasibility check on g sees exactly what it would see on g[present].
        notes: List[str] = []
        for config in reversed(reductions):
            present.add(config.u)
            self._extend(g, present, coloring, config, notes)
        trace.extend(TraceStep(note=note) for note in notes)

        if self.verify:
            report = verify_coloring(g, coloring, require_total=True)
            if not report.is_valid:
                raise InvariantFailure(f"solver produced an invalid coloring: {report.describe()[:3]}")

        logger.info(f"Colored graph with n={g.vertex_count}, m={g.edge_count} using k={cfg.k} "
                    f"after {len(reductions)} reductions")
        return SolveResult(cfg.k, coloring, trace)

    def _extend(self, g: Graph, present: Set[int], c: IncidenceColoring,
                config: Configuration, notes: List[str]) -> None:
        u, v, w, x = config.u, config.v, config.w, config.x
        if config.case == ConfigurationCase.CASE1:
            _extend_case1(g, c, u, v)
        elif config.case == ConfigurationCase.CASE2:
            _extend_case2(g, c, u, v, w, x)
        elif config.case == ConfigurationCase.CASE3:
            _extend_case3(g, c, u, v, w)
        else:
            current = subgraph(g, present)
            side_v = reachable_from(current, v, blocked=u)
            side_w = reachable_from(current, w, blocked=u)
            joined = extend_case4(current, _coloring_on(current, c, side_v), _coloring_on(current, c, side_w),
                                  u, v, w, notes)
            for inc, color in joined.items():
                c.assign(inc, color)


def solve(g: Graph) -> Tuple[int, IncidenceColoring]:
    """(Δ+2, 2)-incidence coloring of an outerplanar graph as (k, coloring)."""
    result = IncidenceSolver().solve(g)
    return result.k, result.coloring
