"""
Reducible configurations of connected outerplanar graphs.

Every connected outerplanar graph on at least two vertices contains one of:

* CASE1: a vertex u of degree 1 (neighbor v);
* CASE2: adjacent vertices u, v of degree 2 (u's other neighbor w, v's other neighbor x);
* CASE3: a vertex u of degree 2 whose neighbors v, w are adjacent;
* CASE4: a vertex u of degree 2 whose removal disconnects the graph (neighbors v, w).

A connected graph where none applies is therefore not outerplanar.
"""

import heapq
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from .exceptions import ContractViolation
from .graph import Graph, connected_components, cut_vertices, is_connected, remove_vertex

logger = logging.getLogger(__name__)


class ConfigurationCase(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"


@dataclass(frozen=True)
class Configuration:
    """A reducible configuration and its witness vertices.

    ``u`` is always the vertex removed by the reduction. ``w`` is unused for
    CASE1 and ``x`` is only set for CASE2.
    """

    case: ConfigurationCase
    u: int
    v: int
    w: Optional[int] = None
    x: Optional[int] = None

    @property
    def neighbors(self) -> Tuple[int, ...]:
        """Neighbors of u in the graph the configuration was found in."""
        if self.case == ConfigurationCase.CASE1:
            return (self.v,)
        return (self.v, self.w)

    def holds_in(self, g: Graph) -> bool:
        """Independently re-check the witnesses against g."""
        if self.u not in g or self.v not in g:
            return False
        if self.case == ConfigurationCase.CASE1:
            return g.neighbors(self.u) == frozenset((self.v,))

        if self.w is None or g.neighbors(self.u) != frozenset((self.v, self.w)):
            return False
        if self.case == ConfigurationCase.CASE2:
            return (
                self.x is not None
                and self.w != self.x
                and g.neighbors(self.v) == frozenset((self.u, self.x))
            )
        if self.case == ConfigurationCase.CASE3:
            return g.has_edge(self.v, self.w)

        partition = connected_components(remove_vertex(g, self.u))
        return partition.block_of(self.v) != partition.block_of(self.w)

    def __str__(self) -> str:
        witnesses = [f"u={self.u}", f"v={self.v}"]
        if self.w is not None:
            witnesses.append(f"w={self.w}")
        if self.x is not None:
            witnesses.append(f"x={self.x}")
        return f"{self.case.value}({', '.join(witnesses)})"


def exceeds_edge_bound(n: int, m: int) -> bool:
    """True when a connected graph with n vertices and m edges cannot be outerplanar."""
    return n >= 2 and m > 2 * n - 3


def outerplanar_screen(g: Graph, assume_connected: bool = False) -> bool:
    """Cheap necessary condition for outerplanarity.

    Returns False exactly when g is connected with n >= 2 and m > 2n - 3.
    A True result certifies nothing.
    """
    if not exceeds_edge_bound(g.vertex_count, g.edge_count):
        return True
    return not (assume_connected or is_connected(g))


def find_configuration(g: Graph, assume_connected: bool = False) -> Optional[Configuration]:
    """Locate a reducible configuration in a connected graph.

    Cases are tried in the order CASE1, CASE3, CASE2, CASE4 and, within a
    case, the witness with the smallest u (then smallest partner) wins.
    Checking CASE3 before CASE2 guarantees w != x in every CASE2 witness.

    Args:
        g: A connected graph.
        assume_connected: Skip the connectivity check when the caller
            already maintains connected pieces.

    Returns:
        The configuration, or None when no case applies.

    Raises:
        ContractViolation: If g is disconnected.
    """
    if not assume_connected and not is_connected(g):
        raise ContractViolation("find_configuration requires a connected graph")

    candidates = sorted(g.low_degree_vertices)
    degree_two = [u for u in candidates if g.degree(u) == 2]

    for u in candidates:
        if g.degree(u) == 1:
            (v,) = g.neighbors(u)
            return Configuration(ConfigurationCase.CASE1, u, v)

    for u in degree_two:
        v, w = g.sorted_neighbors(u)
        if g.has_edge(v, w):
            return Configuration(ConfigurationCase.CASE3, u, v, w)

    for u in degree_two:
        for v in g.sorted_neighbors(u):
            if g.degree(v) != 2:
                continue
            (w,) = g.neighbors(u) - {v}
            (x,) = g.neighbors(v) - {u}
            return Configuration(ConfigurationCase.CASE2, u, v, w, x)

    if degree_two:
        cuts = cut_vertices(g)
        for u in degree_two:
            if u in cuts:
                v, w = g.sorted_neighbors(u)
                return Configuration(ConfigurationCase.CASE4, u, v, w)

    return None


def separated_side(adjacency: Mapping[int, AbstractSet[int]], a: int, b: int) -> Optional[FrozenSet[int]]:
    """The component of a or b when the two are disconnected, else None.

    Searches from both ends in lockstep, so the cost is bounded by the
    smaller component or by the region explored before the searches meet.
    """
    seen_a, seen_b = {a}, {b}
    frontier_a, frontier_b = deque([a]), deque([b])
    while True:
        for seen, frontier, other in ((seen_a, frontier_a, seen_b), (seen_b, frontier_b, seen_a)):
            if not frontier:
                return frozenset(seen)
            for y in adjacency[frontier.popleft()]:
                if y in other:
                    return None
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)


# Candidate heaps of a piece, in the order find_configuration tries the cases.
_HEAP_CASES = (ConfigurationCase.CASE1, ConfigurationCase.CASE3, ConfigurationCase.CASE2)


@dataclass(eq=False)
class Piece:
    """A connected piece of a graph under reduction."""

    vertices: Set[int]
    edge_count: int
    high_degree: int
    candidates: Tuple[List[int], List[int], List[int]] = field(default_factory=lambda: ([], [], []))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def is_base(self) -> bool:
        """True once the piece has maximum degree at most 2."""
        return self.high_degree == 0


class PieceReducer:
    """Repeated configuration search and vertex removal on one mutable graph.

    The graph is held as connected pieces. Every piece keeps min-heaps of
    candidate vertices for CASE1, CASE3 and CASE2 that are re-checked when
    read, so :meth:`next_configuration` returns exactly what
    :func:`find_configuration` returns on the piece, while a removal only
    revisits the vertices next to the removed one.
    """

    def __init__(self, g: Graph):
        self._adjacency: Dict[int, Set[int]] = {v: set(g.neighbors(v)) for v in g.vertices}
        self._piece_of: Dict[int, Piece] = {}
        self.pieces: List[Piece] = [self._new_piece(block) for block in connected_components(g)]

    def _new_piece(self, vertices: Iterable[int]) -> Piece:
        members = set(vertices)
        degrees = [len(self._adjacency[v]) for v in members]
        piece = Piece(members, sum(degrees) // 2, sum(1 for d in degrees if d > 2))
        for v in members:
            self._piece_of[v] = piece
        for v in members:
            self._offer(v)
        return piece

    def _offer(self, v: int) -> None:
        piece = self._piece_of[v]
        nbrs = self._adjacency[v]
        if len(nbrs) == 1:
            heapq.heappush(piece.candidates[0], v)
        elif len(nbrs) == 2:
            a, b = nbrs
            if b in self._adjacency[a]:
                heapq.heappush(piece.candidates[1], v)
            if len(self._adjacency[a]) == 2 or len(self._adjacency[b]) == 2:
                heapq.heappush(piece.candidates[2], v)

    def _witness(self, case: ConfigurationCase, u: int, piece: Piece) -> Optional[Configuration]:
        if self._piece_of.get(u) is not piece:
            return None
        nbrs = self._adjacency[u]
        if case == ConfigurationCase.CASE1:
            if len(nbrs) != 1:
                return None
            (v,) = nbrs
            return Configuration(case, u, v)
        if len(nbrs) != 2:
            return None
        v, w = sorted(nbrs)
        if case == ConfigurationCase.CASE3:
            return Configuration(case, u, v, w) if w in self._adjacency[v] else None
        for partner, other in ((v, w), (w, v)):
            if len(self._adjacency[partner]) == 2:
                (x,) = self._adjacency[partner] - {u}
                return Configuration(case, u, partner, other, x)
        return None

    def graph_of(self, piece: Piece) -> Graph:
        """The piece as an immutable graph."""
        return Graph({v: self._adjacency[v] for v in piece.vertices})

    def next_configuration(self, piece: Piece) -> Optional[Configuration]:
        """The configuration :func:`find_configuration` picks in the piece."""
        for case, heap in zip(_HEAP_CASES, piece.candidates):
            while heap:
                config = self._witness(case, heap[0], piece)
                if config is not None:
                    return config
                heapq.heappop(heap)

        degree_two = sorted(v for v in piece.vertices if len(self._adjacency[v]) == 2)
        if not degree_two:
            return None
        cuts = cut_vertices(self.graph_of(piece))
        for u in degree_two:
            if u in cuts:
                v, w = sorted(self._adjacency[u])
                return Configuration(ConfigurationCase.CASE4, u, v, w)
        return None

    def remove(self, piece: Piece, config: Configuration) -> Optional[Piece]:
        """Delete ``config.u`` from its piece.

        Returns:
            The new piece split off when the removal separates the neighbors
            of u (only CASE2 and CASE4 removals can), otherwise None.
        """
        u = config.u
        nbrs = self._adjacency.pop(u)
        del self._piece_of[u]
        piece.vertices.discard(u)
        piece.edge_count -= len(nbrs)
        if len(nbrs) > 2:
            piece.high_degree -= 1

        touched = set(nbrs)
        for z in nbrs:
            remaining = self._adjacency[z]
            remaining.discard(u)
            if len(remaining) == 2:
                piece.high_degree -= 1
                touched.update(remaining)

        split = None
        if config.case in (ConfigurationCase.CASE2, ConfigurationCase.CASE4):
            a, b = config.neighbors
            side = separated_side(self._adjacency, a, b)
            if side is not None:
                piece.vertices -= side
                split = self._new_piece(side)
                piece.edge_count -= split.edge_count
                piece.high_degree -= split.high_degree

        for z in touched:
            self._offer(z)
        return split
