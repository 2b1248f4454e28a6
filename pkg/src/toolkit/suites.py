"""
Acceptance suites.

Each suite runs one family of checks end to end and returns a
:class:`SuiteResult`. The CLI ``enumerate`` and ``selftest`` commands and the
slow tests are thin wrappers around these functions.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from src.core.config import OracleConfig, SuiteConfig
from src.core.exceptions import ContractViolation, NotOuterplanarError, NotReducibleError
from src.core.extension import IncidenceSolver, SolverConfig, color_base_component
from src.core.graph import Graph, build_graph
from src.core.incidence import (
    Incidence,
    IncidenceColoring,
    enumerate_incidences,
    incidences_adjacent,
    verify_coloring,
)
from src.core.reduction import find_configuration, outerplanar_screen
from src.oracle import enumerate_connected_graphs, is_outerplanar_exact, min_incidence_k
from src.oracle.enumeration import MAX_ENUMERATION_VERTICES, MIN_ENUMERATION_VERTICES
from src.toolkit.families import family
from src.toolkit.formats import emit_coloring
from src.toolkit.generators import GENERATOR_ID, GeneratorParams, gen_outerplanar

logger = logging.getLogger(__name__)

CHORD_KEEP_GRID = (0.0, 0.5, 1.0)
HULL_DELETE_GRID = (0.0, 0.2)

# min_incidence_k(g, 2) of small named graphs.
PINNED_MIN_K = {
    "star-4": (lambda: family("star", 4), 4),
    "cycle-3": (lambda: family("cycle", 3), 3),
    "cycle-5": (lambda: family("cycle", 5), 4),
    "path-2": (lambda: family("path", 2), 2),
}


@dataclass
class SuiteResult:
    """Outcome of one acceptance suite."""
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.passed else f"{len(self.failures)} failures"
        return f"{self.name}: {self.checked} checked, {status} ({self.duration:.2f}s)"


def _run(name: str, body: Callable[[SuiteResult], None], metrics=None) -> SuiteResult:
    result = SuiteResult(name)
    started = time.perf_counter()
    body(result)
    result.duration = time.perf_counter() - started
    if result.passed:
        logger.info(result.summary())
    else:
        logger.error(f"{result.summary()}; first failure: {result.failures[0]}")
    if metrics:
        metrics.record_suite(name, "passed" if result.passed else "failed", result.duration)
    return result


def _check_enumeration_limit(max_n: int) -> None:
    if not MIN_ENUMERATION_VERTICES <= max_n <= MAX_ENUMERATION_VERTICES:
        raise ContractViolation(
            f"exhaustive checks support {MIN_ENUMERATION_VERTICES} <= n <= {MAX_ENUMERATION_VERTICES}, got {max_n}")


def theorem_instances(count: int, max_n: int, seed: int) -> List[GeneratorParams]:
    """Seeded generator parameters cycling through the parameter grid."""
    rng = random.Random(seed)
    grid = [(keep, delete) for keep in CHORD_KEEP_GRID for delete in HULL_DELETE_GRID]
    params = []
    for i in range(count):
        keep, delete = grid[i % len(grid)]
        params.append(GeneratorParams(
            n=rng.randint(3, max(3, max_n)),
            chord_keep_probability=keep,
            hull_delete_probability=delete,
            seed=rng.getrandbits(63),
        ))
    return params


def _check_solution(g: Graph, solver: IncidenceSolver, label: str, result: SuiteResult) -> Optional[IncidenceColoring]:
    try:
        solved = solver.solve(g)
    except (NotOuterplanarError, NotReducibleError) as e:
        result.failures.append(f"{label}: rejected ({e})")
        return None
    if solved.k != max(g.max_degree, 1) + 2:
        result.failures.append(f"{label}: palette {solved.k} for max degree {g.max_degree}")
    report = verify_coloring(g, solved.coloring, require_total=True)
    if not report.is_valid:
        result.failures.append(f"{label}: {report.describe()[0]}")
    return solved.coloring


def run_theorem_property(count: int, max_n: int, seed: int = 0, metrics=None) -> SuiteResult:
    """Solve seeded random outerplanar graphs and verify every coloring."""
    def body(result: SuiteResult) -> None:
        solver = IncidenceSolver(metrics=metrics, verify=False)
        for params in theorem_instances(count, max_n, seed):
            g = gen_outerplanar(params)
            _check_solution(g, solver, f"n={params.n} seed={params.seed}", result)
            result.checked += 1

    return _run("theorem-property", body, metrics)


def run_lemma_check(max_n: int, oracle: Optional[OracleConfig] = None, metrics=None) -> SuiteResult:
    """Every connected outerplanar graph with max degree >= 3 has a configuration.

    The configuration search runs first; the minor test only runs on graphs
    where it comes back empty, which must then be non-outerplanar.

    Raises:
        InstanceTooLargeError: If a graph reaching the minor test exceeds
            ``oracle.max_minor_vertices``.
    """
    _check_enumeration_limit(max_n)
    limits = oracle or OracleConfig()

    def body(result: SuiteResult) -> None:
        for n in range(2, max_n + 1):
            for g in enumerate_connected_graphs(n):
                if g.max_degree < 3:
                    continue
                result.checked += 1
                config = find_configuration(g, assume_connected=True)
                if config is None:
                    if not outerplanar_screen(g, assume_connected=True):
                        continue
                    if is_outerplanar_exact(g, max_vertices=limits.max_minor_vertices):
                        result.failures.append(f"no configuration in outerplanar {g.edges()}")
                elif not config.holds_in(g):
                    result.failures.append(f"witness {config} does not hold in {g.edges()}")

    return _run("lemma-exhaustive", body, metrics)


def run_theorem_check(max_n: int, oracle: Optional[OracleConfig] = None, metrics=None) -> SuiteResult:
    """Compare the solver with the exact oracle on every small outerplanar graph."""
    _check_enumeration_limit(max_n)
    limits = oracle or OracleConfig()

    def body(result: SuiteResult) -> None:
        solver = IncidenceSolver(verify=False)
        for n in range(2, max_n + 1):
            for g in enumerate_connected_graphs(n):
                if not outerplanar_screen(g, assume_connected=True):
                    continue
                if not is_outerplanar_exact(g, max_vertices=limits.max_minor_vertices):
                    continue
                result.checked += 1
                label = f"{g.edges()}"
                optimum = min_incidence_k(g, 2, max_incidences=limits.max_incidences)
                if optimum > g.max_degree + 2:
                    result.failures.append(f"{label}: oracle needs {optimum} colors")
                _check_solution(g, solver, label, result)

    return _run("theorem-exhaustive", body, metrics)


def run_pinned_values(oracle: Optional[OracleConfig] = None, metrics=None) -> SuiteResult:
    limits = oracle or OracleConfig()

    def body(result: SuiteResult) -> None:
        for name, (build, expected) in PINNED_MIN_K.items():
            result.checked += 1
            actual = min_incidence_k(build(), 2, max_incidences=limits.max_incidences)
            if actual != expected:
                result.failures.append(f"{name}: min k {actual}, expected {expected}")

    return _run("pinned-values", body, metrics)


def run_negative_check(metrics=None) -> SuiteResult:
    """K4 and K2,3 must be refused; K4 already by the edge bound."""
    def body(result: SuiteResult) -> None:
        solver = IncidenceSolver()
        for name in ("complete4", "k23"):
            result.checked += 1
            try:
                solver.solve(family(name))
            except (NotOuterplanarError, NotReducibleError):
                continue
            result.failures.append(f"{name} was colored")
        result.checked += 1
        if outerplanar_screen(family("complete4")):
            result.failures.append("complete4 passed the edge bound")

    return _run("negative", body, metrics)


def _expected_violation(g: Graph, c: IncidenceColoring, neighbors: Dict[Incidence, List[Incidence]],
                        inc: Incidence, color: int) -> bool:
    if any(c[other] == color for other in neighbors[inc]):
        return True
    if c.l is None:
        return False
    incoming = {c[Incidence(y, inc.head)] for y in g.neighbors(inc.head) if y != inc.tail}
    incoming.add(color)
    return len(incoming) > c.l


def run_mutation_suite(count: int, max_n: int, seed: int = 0, metrics=None) -> SuiteResult:
    """Recolor single incidences of valid colorings and check the verifier's verdict.

    The expected verdict comes from a pairwise scan with
    :func:`incidences_adjacent`, independent of the verifier's per-vertex scan.
    """
    def body(result: SuiteResult) -> None:
        solver = IncidenceSolver(verify=False)
        for params in theorem_instances(count, max_n, seed):
            g = gen_outerplanar(params)
            c = _check_solution(g, solver, f"n={params.n} seed={params.seed}", result)
            if c is None:
                continue
            incidences = enumerate_incidences(g)
            neighbors = {
                a: [b for b in incidences if b != a and incidences_adjacent(a, b)]
                for a in incidences
            }
            for inc in incidences:
                original = c[inc]
                for color in range(c.k):
                    if color == original:
                        continue
                    result.checked += 1
                    expected = _expected_violation(g, c, neighbors, inc, color)
                    c.assign(inc, color)
                    report = verify_coloring(g, c)
                    c.assign(inc, original)
                    if report.is_valid == expected:
                        verdict = "missed" if expected else "false alarm"
                        result.failures.append(f"{verdict}: {inc} -> {color} at n={params.n} seed={params.seed}")
                    if metrics and not report.is_valid:
                        for kind, amount in report.counts().items():
                            metrics.record_violations(kind, amount)

    return _run("mutation", body, metrics)


def run_base_case_check(max_n: int, k: int = 4, metrics=None) -> SuiteResult:
    """Base colorer on every cycle and path up to ``max_n`` vertices."""
    def body(result: SuiteResult) -> None:
        cfg = SolverConfig(k=k)
        graphs = [(f"cycle-{n}", family("cycle", n)) for n in range(3, max_n + 1)]
        graphs += [(f"path-{n}", family("path", n)) for n in range(2, max_n + 1)]
        for name, g in graphs:
            result.checked += 1
            report = verify_coloring(g, color_base_component(g, cfg), require_total=True)
            if not report.is_valid:
                result.failures.append(f"{name}: {report.describe()[0]}")

    return _run("base-case", body, metrics)


def run_determinism_check(seed: int = 0, n: int = 200, metrics=None) -> SuiteResult:
    """Two solves of the same generated graph emit byte-identical documents."""
    def body(result: SuiteResult) -> None:
        params = GeneratorParams(n=n, chord_keep_probability=0.5, hull_delete_probability=0.2, seed=seed)
        outputs = []
        for _ in range(2):
            g = gen_outerplanar(params)
            solved = IncidenceSolver().solve(g)
            outputs.append(emit_coloring(g, solved.k, solved.coloring, seed=seed, generator=GENERATOR_ID))
        result.checked += 1
        if outputs[0] != outputs[1]:
            result.failures.append(f"output differs between runs for n={n} seed={seed}")
        rebuilt = build_graph(gen_outerplanar(params).edges())
        result.checked += 1
        if rebuilt != gen_outerplanar(params):
            result.failures.append(f"generator is not reproducible for n={n} seed={seed}")

    return _run("determinism", body, metrics)


def run_all(settings: SuiteConfig, oracle: Optional[OracleConfig] = None, metrics=None) -> List[SuiteResult]:
    """Run every suite at the scale given by ``settings`` under the ``oracle`` limits."""
    return [
        run_theorem_property(settings.theorem_instances, settings.theorem_max_n, settings.seed, metrics),
        run_lemma_check(settings.lemma_max_n, oracle, metrics),
        run_theorem_check(settings.exhaustive_theorem_max_n, oracle, metrics),
        run_pinned_values(oracle, metrics),
        run_negative_check(metrics),
        run_mutation_suite(settings.mutation_colorings, settings.mutation_max_n, settings.seed, metrics),
        run_base_case_check(settings.base_max_n, metrics=metrics),
        run_determinism_check(settings.seed, metrics=metrics),
    ]
