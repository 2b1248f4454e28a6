"""
Seeded generators of connected outerplanar graphs.

A maximal outerplanar graph on n vertices is a triangulated n-gon. The
triangulations of the polygon 0..n-1 correspond to binary trees with n - 2
internal nodes: leaf i stands for the hull edge (i, i+1), and an internal
node whose leaves span i..j stands for the chord (i, j+1). Trees are drawn
uniformly with Rémy's algorithm.
"""

import logging
import random
from typing import Dict, List, NamedTuple, Set, Tuple

from networkx.utils import UnionFind
from pydantic import BaseModel, Field

from src.core.exceptions import ContractViolation
from src.core.graph import Edge, Graph, build_graph

logger = logging.getLogger(__name__)

GENERATOR_ID = "remy-binary-tree/v1"

# Face label of the unbounded face; triangles are labeled by nonnegative tree nodes.
OUTER_FACE = -1


class GeneratorParams(BaseModel):
    """Parameters of the outerplanar generator."""
    n: int = Field(..., ge=3, description="Number of polygon vertices")
    chord_keep_probability: float = Field(default=1.0, ge=0.0, le=1.0,
                                          description="Probability of keeping each chord")
    hull_delete_probability: float = Field(default=0.0, ge=0.0, le=1.0,
                                           description="Probability of deleting each hull edge "
                                                       "when that keeps the graph connected")
    seed: int = Field(default=0, ge=0, lt=2 ** 64, description="Seed of the random generator")


class Triangulation(NamedTuple):
    """A triangulated polygon with the triangles on the inner side of each edge.

    Triangles are labeled by the internal nodes of the binary tree.
    ``hull_sides[i]`` is the triangle inside ``hull[i]`` and
    ``chord_sides[i]`` the two triangles meeting at ``chords[i]``.
    """
    hull: List[Edge]
    chords: List[Edge]
    hull_sides: List[int]
    chord_sides: List[Tuple[int, int]]


def _remy_tree(internal: int, rng: random.Random) -> Tuple[int, List[int], List[int], List[int]]:
    """Uniform random binary tree with ``internal`` internal nodes.

    Returns (root, left, right, parent); leaves have left = right = -1 and
    the root has parent -1.
    """
    size = 2 * internal + 1
    left = [-1] * size
    right = [-1] * size
    parent = [-1] * size
    root = 0
    for step in range(internal):
        target = rng.randrange(2 * step + 1)
        node, leaf = 2 * step + 1, 2 * step + 2
        above = parent[target]
        if above == -1:
            root = node
        elif left[above] == target:
            left[above] = node
        else:
            right[above] = node
        parent[node] = above
        if rng.getrandbits(1):
            left[node], right[node] = target, leaf
        else:
            left[node], right[node] = leaf, target
        parent[target] = parent[leaf] = node
    return root, left, right, parent


def _triangulation(n: int, rng: random.Random) -> Triangulation:
    """Random triangulation of the n-gon."""
    root, left, right, parent = _remy_tree(n - 2, rng)

    preorder = []
    stack = [root]
    while stack:
        node = stack.pop()
        preorder.append(node)
        if left[node] != -1:
            stack.append(right[node])
            stack.append(left[node])

    low: Dict[int, int] = {}
    high: Dict[int, int] = {}
    leaves = []
    for node in preorder:
        if left[node] == -1:
            low[node] = high[node] = len(leaves)
            leaves.append(node)
    for node in reversed(preorder):
        if left[node] != -1:
            low[node] = low[left[node]]
            high[node] = high[right[node]]

    hull = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    hull_sides = [parent[leaf] for leaf in leaves] + [root]
    inner = sorted(
        (low[node], high[node] + 1, node)
        for node in preorder
        if left[node] != -1 and node != root
    )
    chords = [(a, b) for a, b, _ in inner]
    chord_sides = [(node, parent[node]) for _, _, node in inner]
    return Triangulation(hull, chords, hull_sides, chord_sides)


def gen_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Random triangulated polygon on vertices 0..n-1 (2n - 3 edges).

    Raises:
        ContractViolation: If n < 3.
    """
    if n < 3:
        raise ContractViolation(f"maximal outerplanar generator needs n >= 3, got {n}")
    triangulation = _triangulation(n, random.Random(seed))
    return build_graph(triangulation.hull + triangulation.chords)


def gen_outerplanar(params: GeneratorParams) -> Graph:
    """Random connected outerplanar graph.

    Starts from the maximal graph drawn with the same seed, keeps each chord
    with ``chord_keep_probability`` and then, walking the hull in order,
    deletes each hull edge with ``hull_delete_probability`` unless that
    would disconnect the graph.

    A hull edge is a bridge exactly when the outer face also lies on its
    inner side. Faces are tracked as unions of triangles: a dropped chord
    merges its two triangles and a deleted hull edge merges its triangle
    with the outer face.
    """
    n = params.n
    rng = random.Random(params.seed)
    triangulation = _triangulation(n, rng)

    adjacency: Dict[int, Set[int]] = {v: set() for v in range(n)}

    def link(a: int, b: int) -> None:
        adjacency[a].add(b)
        adjacency[b].add(a)

    faces = UnionFind()
    for a, b in triangulation.hull:
        link(a, b)
    for (a, b), (inner, outer) in zip(triangulation.chords, triangulation.chord_sides):
        if rng.random() < params.chord_keep_probability:
            link(a, b)
        else:
            faces.union(inner, outer)

    deleted = 0
    for (a, b), inner in zip(triangulation.hull, triangulation.hull_sides):
        if rng.random() < params.hull_delete_probability and faces[inner] != faces[OUTER_FACE]:
            adjacency[a].discard(b)
            adjacency[b].discard(a)
            faces.union(inner, OUTER_FACE)
            deleted += 1

    logger.debug(f"Generated outerplanar graph n={n} seed={params.seed}, "
                 f"{deleted} hull edges deleted")
    return Graph(adjacency)
