import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from .exceptions import MalformedInputError, VertexNotFoundError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph over nonnegative integer vertex ids.

    Instances are immutable: every structural operation returns a new graph.
    Vertex ids are never renumbered, so removing vertices may leave holes.
    Iteration over vertices and neighbors is always in ascending id order.
    """

    __slots__ = ("_adjacency", "_edge_count", "_low_degree", "_max_degree", "_vertices", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        """Build a graph from an adjacency mapping.

        Args:
            adjacency: Mapping of vertex id to its neighbors. Must be symmetric.

        Raises:
            MalformedInputError: On negative ids, self-loops or asymmetric adjacency.
        """
        adj: Dict[int, FrozenSet[int]] = {}
        for v, nbrs in adjacency.items():
            _check_vertex_id(v)
            fs = frozenset(nbrs)
            if v in fs:
                raise MalformedInputError(f"self-loop at vertex {v}")
            adj[v] = fs

        for v, nbrs in adj.items():
            for w in nbrs:
                if w not in adj or v not in adj[w]:
                    raise MalformedInputError(f"asymmetric adjacency between {v} and {w}")

        edge_count = sum(len(nbrs) for nbrs in adj.values()) // 2
        low = frozenset(v for v, nbrs in adj.items() if len(nbrs) <= 2)
        self._set(adj, edge_count, low)

    @classmethod
    def _trusted(cls, adjacency: Dict[int, FrozenSet[int]], edge_count: int,
                 low_degree: FrozenSet[int]) -> "Graph":
        graph = cls.__new__(cls)
        graph._set(adjacency, edge_count, low_degree)
        return graph

    def _set(self, adjacency: Dict[int, FrozenSet[int]], edge_count: int,
             low_degree: FrozenSet[int]) -> None:
        self._adjacency = adjacency
        self._edge_count = edge_count
        self._low_degree = low_degree
        self._max_degree: Optional[int] = None
        self._vertices: Optional[Tuple[int, ...]] = None
        self._hash: Optional[int] = None

    @property
    def vertices(self) -> Tuple[int, ...]:
        """All vertex ids in ascending order."""
        if self._vertices is None:
            self._vertices = tuple(sorted(self._adjacency))
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def max_degree(self) -> int:
        """Maximum vertex degree; 0 for edgeless and empty graphs."""
        if self._max_degree is None:
            self._max_degree = max(map(len, self._adjacency.values()), default=0)
        return self._max_degree

    @property
    def low_degree_vertices(self) -> FrozenSet[int]:
        """Vertices of degree at most 2, maintained incrementally across removals."""
        return self._low_degree

    def neighbors(self, v: int) -> FrozenSet[int]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise VertexNotFoundError(v) from None

    def sorted_neighbors(self, v: int) -> List[int]:
        return sorted(self.neighbors(v))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: int, b: int) -> bool:
        nbrs = self._adjacency.get(a)
        return nbrs is not None and b in nbrs

    def edges(self) -> List[Edge]:
        """All edges as (smaller, larger) pairs in lexicographic order."""
        return [(v, w) for v in self.vertices for w in sorted(self._adjacency[v]) if v < w]

    def __contains__(self, v: object) -> bool:
        return v in self._adjacency

    def __len__(self) -> int:
        return len(self._adjacency)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adjacency.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count}, max_degree={self.max_degree})"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components as disjoint vertex sets, ordered by smallest member."""

    blocks: Tuple[FrozenSet[int], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[FrozenSet[int]]:
        return iter(self.blocks)

    def block_of(self, v: int) -> FrozenSet[int]:
        for block in self.blocks:
            if v in block:
                return block
        raise VertexNotFoundError(v)


def _check_vertex_id(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise MalformedInputError(f"vertex ids must be nonnegative integers, got {v!r}")


def build_graph(edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges are collapsed. Isolated vertices can be declared through
    ``vertices``.

    Args:
        edges: Unordered vertex pairs.
        vertices: Extra vertex ids to include even if no edge touches them.

    Returns:
        The graph containing exactly the given edges and vertices.

    Raises:
        MalformedInputError: On self-loops, negative ids or pairs of the wrong size.
    """
    adjacency: Dict[int, set] = {}
    for v in vertices:
        _check_vertex_id(v)
        adjacency.setdefault(v, set())

    for pair in edges:
        pair = tuple(pair)
        if len(pair) != 2:
            raise MalformedInputError(f"edge must have two endpoints, got {pair!r}")
        a, b = pair
        _check_vertex_id(a)
        _check_vertex_id(b)
        if a == b:
            raise MalformedInputError(f"self-loop at vertex {a}")
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    return Graph(adjacency)


def remove_vertex(g: Graph, u: int) -> Graph:
    """Return g - u. The input graph is left unchanged.

    Raises:
        VertexNotFoundError: If u is not a vertex of g.
    """
    nbrs = g.neighbors(u)
    adjacency = dict(g._adjacency)
    del adjacency[u]
    low = set(g.low_degree_vertices)
    low.discard(u)
    for w in nbrs:
        reduced = adjacency[w] - {u}
        adjacency[w] = reduced
        if len(reduced) <= 2:
            low.add(w)
    return Graph._trusted(adjacency, g.edge_count - len(nbrs), frozenset(low))


def subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``."""
    keep = frozenset(vertices)
    for v in keep:
        if v not in g:
            raise VertexNotFoundError(v)
    adjacency = {v: g.neighbors(v) & keep for v in keep}
    edge_count = sum(len(nbrs) for nbrs in adjacency.values()) // 2
    low = frozenset(v for v, nbrs in adjacency.items() if len(nbrs) <= 2)
    return Graph._trusted(adjacency, edge_count, low)


def reachable_from(g: Graph, source: int, blocked: Optional[int] = None) -> FrozenSet[int]:
    """Vertices reachable from ``source``, optionally treating ``blocked`` as deleted."""
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen and w != blocked:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def connected_components(g: Graph) -> ComponentPartition:
    """Partition the vertex set into connected components.

    Blocks are ordered by their smallest vertex id.
    """
    seen: set = set()
    blocks = []
    for v in g.vertices:
        if v in seen:
            continue
        block = reachable_from(g, v)
        seen.update(block)
        blocks.append(block)
    return ComponentPartition(tuple(blocks))


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return len(reachable_from(g, g.vertices[0])) == g.vertex_count


def cut_vertices(g: Graph) -> FrozenSet[int]:
    """Articulation points by the lowpoint method.

    The depth-first search runs on an explicit stack so deep graphs do not
    hit the interpreter's recursion limit.
    """
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    result = set()
    counter = 0

    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(g.sorted_neighbors(root)))]

        while stack:
            v, parent, pending = stack[-1]
            for w in pending:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.sorted_neighbors(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p == root:
                    root_children += 1
                elif low[v] >= disc[p]:
                    result.add(p)

        if root_children > 1:
            result.add(root)

    return frozenset(result)


def cut_vertices_by_removal(g: Graph) -> FrozenSet[int]:
    """Articulation points by deleting each vertex and recounting components.

    Quadratic; kept as an independent check on :func:`cut_vertices`.
    """
    base = len(connected_components(g))
    return frozenset(
        u for u in g.vertices
        if len(connected_components(remove_vertex(g, u))) > base
    )

