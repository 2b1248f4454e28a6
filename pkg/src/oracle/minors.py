"""
Exact outerplanarity test for small graphs.

A graph is outerplanar exactly when it has neither a K4 nor a K2,3 minor.
Minors are found by searching for disjoint connected branch sets, encoded
as vertex bitmasks, with the required adjacencies between them.
"""

from typing import Dict, List, Sequence

from src.core.exceptions import InstanceTooLargeError
from src.core.graph import Graph

DEFAULT_MAX_MINOR_VERTICES = 10


class _BranchSets:
    """Connected vertex subsets of a graph and their closed neighborhoods."""

    def __init__(self, g: Graph):
        index = {v: i for i, v in enumerate(g.vertices)}
        self.n = len(index)
        self.neighbor_masks = [0] * self.n
        for v, i in index.items():
            for w in g.neighbors(v):
                self.neighbor_masks[i] |= 1 << index[w]

        self.sets: List[int] = []
        self.touching: Dict[int, int] = {}
        for mask in range(1, 1 << self.n):
            if self._connected(mask):
                self.sets.append(mask)
                self.touching[mask] = self._neighborhood(mask)
        self.sets.sort(key=lambda mask: ((mask & -mask).bit_length(), mask))

    def _neighborhood(self, mask: int) -> int:
        result = 0
        bits = mask
        while bits:
            low = bits & -bits
            result |= self.neighbor_masks[low.bit_length() - 1]
            bits ^= low
        return result

    def _connected(self, mask: int) -> bool:
        reached = mask & -mask
        while True:
            grown = (reached | self._neighborhood(reached)) & mask
            if grown == reached:
                return reached == mask
            reached = grown

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.touching[a] & b)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def _pairwise_adjacent_sets(branch: _BranchSets, candidates: Sequence[int], needed: int,
                            chosen: List[int], used: int) -> bool:
    if len(chosen) == needed:
        return True
    floor = _lowest(chosen[-1]) if chosen else 0
    for s in candidates:
        if s & used or _lowest(s) <= floor:
            continue
        if all(branch.adjacent(t, s) for t in chosen):
            chosen.append(s)
            if _pairwise_adjacent_sets(branch, candidates, needed, chosen, used | s):
                return True
            chosen.pop()
    return False


def _disjoint_sets(candidates: Sequence[int], needed: int, chosen: List[int], used: int) -> bool:
    if len(chosen) == needed:
        return True
    floor = _lowest(chosen[-1]) if chosen else 0
    for s in candidates:
        if s & used or _lowest(s) <= floor:
            continue
        chosen.append(s)
        if _disjoint_sets(candidates, needed, chosen, used | s):
            return True
        chosen.pop()
    return False


def _has_k4_minor(branch: _BranchSets) -> bool:
    return _pairwise_adjacent_sets(branch, branch.sets, 4, [], 0)


def _has_k23_minor(branch: _BranchSets) -> bool:
    sets = branch.sets
    for i, first in enumerate(sets):
        for second in sets[i + 1:]:
            if first & second or _lowest(second) <= _lowest(first):
                continue
            used = first | second
            shared = [
                s for s in sets
                if not s & used and branch.adjacent(first, s) and branch.adjacent(second, s)
            ]
            if len(shared) >= 3 and _disjoint_sets(shared, 3, [], 0):
                return True
    return False


def is_outerplanar_exact(g: Graph, max_vertices: int = DEFAULT_MAX_MINOR_VERTICES) -> bool:
    """Decide outerplanarity of a small graph by K4 / K2,3 minor search.

    Raises:
        InstanceTooLargeError: If g has more than ``max_vertices`` vertices.
    """
    if g.vertex_count > max_vertices:
        raise InstanceTooLargeError(
            f"exact outerplanarity test supports at most {max_vertices} vertices, "
            f"got {g.vertex_count}")
    if g.vertex_count < 4:
        return True
    branch = _BranchSets(g)
    return not (_has_k4_minor(branch) or _has_k23_minor(branch))
