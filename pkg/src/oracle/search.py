import logging
from typing import List, Optional

from src.core.exceptions import ContractViolation, InstanceTooLargeError, InvariantFailure
from src.core.graph import Graph
from src.core.incidence import (
    Incidence,
    IncidenceColoring,
    adjacent_incidences,
    enumerate_incidences,
    feasible_colors,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_INCIDENCES = 40


def _search(g: Graph, c: IncidenceColoring, order: List[Incidence], index: int, ceiling: int) -> bool:
    # Colors are introduced in first-use order: a fresh color is always ceiling + 1.
    if index == len(order):
        return True
    inc = order[index]
    for color in sorted(feasible_colors(g, c, inc)):
        if color > ceiling + 1:
            break
        c.assign(inc, color)
        if _search(g, c, order, index + 1, max(ceiling, color)):
            return True
        c.unassign(inc)
    return False


def exists_kl_coloring(g: Graph, k: int, l: Optional[int] = 2,
                       max_incidences: int = DEFAULT_MAX_INCIDENCES) -> Optional[IncidenceColoring]:
    """Exact search for a total (k, l)-incidence coloring.

    Backtracks over incidences sorted by decreasing number of adjacent
    incidences, pruning with the feasible-color rule.

    Args:
        g: Graph to color.
        k: Palette size.
        l: Incoming bound, or None for no bound.
        max_incidences: Refuse graphs with more incidences than this.

    Returns:
        A valid coloring, or None when none exists.

    Raises:
        ContractViolation: If k or l is below 1.
        InstanceTooLargeError: If g has more than ``max_incidences`` incidences.
    """
    if k < 1 or (l is not None and l < 1):
        raise ContractViolation(f"need k >= 1 and l >= 1, got k={k}, l={l}")
    incidences = enumerate_incidences(g)
    if len(incidences) > max_incidences:
        raise InstanceTooLargeError(
            f"{len(incidences)} incidences exceed the oracle cap of {max_incidences}")

    order = sorted(incidences, key=lambda inc: (-len(adjacent_incidences(g, inc)), inc))
    c = IncidenceColoring(k, l)
    if _search(g, c, order, 0, -1):
        return c
    return None


def min_incidence_k(g: Graph, l: Optional[int] = 2,
                    max_incidences: int = DEFAULT_MAX_INCIDENCES) -> int:
    """Smallest k admitting a (k, l)-incidence coloring of g.

    The search ascends from Δ + 1, which every proper incidence coloring
    needs (a vertex's outgoing incidences and one incoming incidence are
    pairwise adjacent).

    Raises:
        ContractViolation: If g has no edges.
        InstanceTooLargeError: Under the same cap as :func:`exists_kl_coloring`.
    """
    if g.edge_count == 0:
        raise ContractViolation("min_incidence_k needs at least one edge")

    # Coloring every (u, v) by a distance-2 vertex coloring of v always works,
    # so the search stops by k = n.
    upper = max(g.vertex_count, g.max_degree + 1)
    for k in range(g.max_degree + 1, upper + 1):
        if exists_kl_coloring(g, k, l, max_incidences) is not None:
            logger.debug(f"min incidence k for {g!r} with l={l} is {k}")
            return k
    raise InvariantFailure(f"no (k, {l})-incidence coloring found up to k={upper}")
