from enum import Enum
from typing import Optional, Union

from src.core.exceptions import ContractViolation
from src.core.graph import Graph, build_graph


class GraphFamily(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    FAN = "fan"
    COMPLETE4 = "complete4"
    K23 = "k23"


# Smallest n each family accepts. K4 and K2,3 ignore n.
MIN_VERTICES = {
    GraphFamily.PATH: 1,
    GraphFamily.CYCLE: 3,
    GraphFamily.STAR: 2,
    GraphFamily.FAN: 3,
}


def family(name: Union[str, GraphFamily], n: Optional[int] = None) -> Graph:
    """Named test graph.

    * path: v0 - v1 - ... - v(n-1)
    * cycle: the n-cycle on 0..n-1
    * star: center 0 joined to leaves 1..n-1
    * fan: path 1..n-1 plus hub 0 joined to every path vertex
    * complete4: K4 on 0..3
    * k23: K2,3 with parts {0, 1} and {2, 3, 4}

    Raises:
        ContractViolation: On an unknown family or an n below the family minimum.
    """
    try:
        kind = GraphFamily(name)
    except ValueError:
        raise ContractViolation(f"unknown graph family {name!r}") from None

    if kind == GraphFamily.COMPLETE4:
        return build_graph([(a, b) for a in range(4) for b in range(a + 1, 4)])
    if kind == GraphFamily.K23:
        return build_graph([(a, b) for a in (0, 1) for b in (2, 3, 4)])

    minimum = MIN_VERTICES[kind]
    if n is None or n < minimum:
        raise ContractViolation(f"family {kind.value} needs n >= {minimum}, got {n}")

    if kind == GraphFamily.PATH:
        return build_graph([(i, i + 1) for i in range(n - 1)], vertices=range(n))
    if kind == GraphFamily.CYCLE:
        return build_graph([(i, (i + 1) % n) for i in range(n)])
    if kind == GraphFamily.STAR:
        return build_graph([(0, i) for i in range(1, n)])
    return build_graph([(i, i + 1) for i in range(1, n - 1)] + [(0, i) for i in range(1, n)])
