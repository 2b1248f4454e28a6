from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from src.core.exceptions import ContractViolation
from src.core.graph import Graph

MIN_ENUMERATION_VERTICES = 2
MAX_ENUMERATION_VERTICES = 7


def _mask_connected(n: int, neighbor_masks: List[int]) -> bool:
    reached = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        grown = 0
        bits = frontier
        while bits:
            low = bits & -bits
            grown |= neighbor_masks[low.bit_length() - 1]
            bits ^= low
        frontier = grown & ~reached
        reached |= frontier
    return reached == full


class EnumerationStream:
    """All connected simple graphs on the labeled vertex set ``0..n-1``.

    Graphs are produced once each, in ascending order of their edge subset
    read as a binary number over the pairs in lexicographic order. No
    isomorph rejection is done. The stream is a single-pass iterator.
    """

    def __init__(self, n: int):
        if not MIN_ENUMERATION_VERTICES <= n <= MAX_ENUMERATION_VERTICES:
            raise ContractViolation(
                f"enumeration supports {MIN_ENUMERATION_VERTICES} <= n <= "
                f"{MAX_ENUMERATION_VERTICES}, got {n}")
        self.n = n
        self._pairs: List[Tuple[int, int]] = list(combinations(range(n), 2))
        self._cursor = 0
        self._limit = 1 << len(self._pairs)

    def __iter__(self) -> Iterator[Graph]:
        return self

    def __next__(self) -> Graph:
        while self._cursor < self._limit:
            mask = self._cursor
            self._cursor += 1
            neighbor_masks = [0] * self.n
            adjacency: Dict[int, List[int]] = {v: [] for v in range(self.n)}
            for bit, (a, b) in enumerate(self._pairs):
                if mask >> bit & 1:
                    neighbor_masks[a] |= 1 << b
                    neighbor_masks[b] |= 1 << a
                    adjacency[a].append(b)
                    adjacency[b].append(a)
            if _mask_connected(self.n, neighbor_masks):
                return Graph(adjacency)
        raise StopIteration


def enumerate_connected_graphs(n: int) -> EnumerationStream:
    """Stream every connected labeled graph on n vertices (2 <= n <= 7)."""
    return EnumerationStream(n)
