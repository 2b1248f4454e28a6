"""
Incidences, partial incidence colorings and the (k, l) verifier.

An incidence (v, vw) is stored as the ordered pair ``Incidence(tail=v, head=w)``.
It is outgoing at its tail and counts toward the incoming color set of its head.
Two incidences a, b are adjacent when they share a tail, or when the head of
one is the tail of the other. Two incidences with the same head and different
tails are not adjacent; that is what lets the incoming bound ``l`` matter.
"""

import logging
from dataclasses import astuple, dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple, Union

from .exceptions import ContractViolation, MalformedInputError
from .graph import Graph

logger = logging.getLogger(__name__)


class Incidence(NamedTuple):
    tail: int
    head: int


class IncidenceColoring:
    """Partial map from incidences to colors in ``[0, k)``.

    ``l`` bounds the number of distinct colors on incidences pointing at any
    vertex; ``None`` means unbounded. Operations that build colorings copy
    before assigning, so a coloring handed to another function is never
    modified behind the caller's back.
    """

    __slots__ = ("k", "l", "_assignment")

    def __init__(self, k: int, l: Optional[int] = 2,
                 assignment: Optional[Mapping[Incidence, int]] = None,
                 validate: bool = True):
        """Create a coloring.

        Args:
            k: Palette size.
            l: Incoming color bound, or None for no bound.
            assignment: Initial incidence to color map.
            validate: Reject colors outside the palette. Disabled only when
                loading colorings that are about to be verified.
        """
        if k < 1:
            raise ContractViolation(f"palette size must be positive, got {k}")
        if l is not None and l < 1:
            raise ContractViolation(f"incoming bound must be positive, got {l}")
        self.k = k
        self.l = l
        self._assignment: Dict[Incidence, int] = {}
        for inc, color in (assignment or {}).items():
            inc = Incidence(*inc)
            if validate:
                self._check_color(color)
            self._assignment[inc] = color

    def _check_color(self, color: int) -> None:
        if not 0 <= color < self.k:
            raise ContractViolation(f"color {color} outside palette [0, {self.k})")

    def assign(self, inc: Incidence, color: int) -> None:
        """Set the color of ``inc`` in place."""
        self._check_color(color)
        self._assignment[Incidence(*inc)] = color

    def unassign(self, inc: Incidence) -> None:
        self._assignment.pop(Incidence(*inc), None)

    def get(self, inc: Incidence) -> Optional[int]:
        return self._assignment.get(inc)

    def __getitem__(self, inc: Incidence) -> int:
        return self._assignment[inc]

    def __contains__(self, inc: object) -> bool:
        return inc in self._assignment

    def __len__(self) -> int:
        return len(self._assignment)

    def __iter__(self) -> Iterator[Incidence]:
        return iter(sorted(self._assignment))

    def items(self) -> List[Tuple[Incidence, int]]:
        """Assigned (incidence, color) pairs in incidence order."""
        return sorted(self._assignment.items())

    def colors_used(self) -> FrozenSet[int]:
        return frozenset(self._assignment.values())

    def copy(self) -> "IncidenceColoring":
        clone = IncidenceColoring(self.k, self.l)
        clone._assignment = dict(self._assignment)
        return clone

    def with_palette(self, k: int) -> "IncidenceColoring":
        """Same assignment viewed under a different palette size."""
        clone = IncidenceColoring(k, self.l)
        for inc, color in self._assignment.items():
            clone.assign(inc, color)
        return clone

    def merged(self, other: "IncidenceColoring") -> "IncidenceColoring":
        """Union of two colorings over the same palette.

        Raises:
            ContractViolation: On palette mismatch or a conflicting shared incidence.
        """
        if other.k != self.k or other.l != self.l:
            raise ContractViolation(
                f"cannot merge ({self.k},{self.l}) and ({other.k},{other.l}) colorings")
        clone = self.copy()
        for inc, color in other._assignment.items():
            existing = clone._assignment.get(inc)
            if existing is not None and existing != color:
                raise ContractViolation(f"incidence {tuple(inc)} colored {existing} and {color}")
            clone._assignment[inc] = color
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceColoring):
            return NotImplemented
        return (self.k, self.l, self._assignment) == (other.k, other.l, other._assignment)

    def __repr__(self) -> str:
        return f"IncidenceColoring(k={self.k}, l={self.l}, assigned={len(self._assignment)})"


# Violation records

@dataclass(frozen=True)
class AdjacencyConflict:
    first: Incidence
    second: Incidence
    color: int

    def describe(self) -> str:
        return (f"adjacent incidences {tuple(self.first)} and {tuple(self.second)} "
                f"share color {self.color}")


@dataclass(frozen=True)
class PaletteOverflow:
    incidence: Incidence
    color: int

    def describe(self) -> str:
        return f"incidence {tuple(self.incidence)} has color {self.color} outside the palette"


@dataclass(frozen=True)
class IncomingOverflow:
    vertex: int
    colors: Tuple[int, ...]

    def describe(self) -> str:
        return f"vertex {self.vertex} has {len(self.colors)} incoming colors {list(self.colors)}"


@dataclass(frozen=True)
class Uncolored:
    incidence: Incidence

    def describe(self) -> str:
        return f"incidence {tuple(self.incidence)} is uncolored"


@dataclass(frozen=True)
class UnknownIncidence:
    incidence: Incidence

    def describe(self) -> str:
        return f"incidence {tuple(self.incidence)} is not an incidence of the graph"


Violation = Union[AdjacencyConflict, PaletteOverflow, IncomingOverflow, Uncolored, UnknownIncidence]


@dataclass(frozen=True)
class VerificationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def of_kind(self, kind: type) -> List[Violation]:
        return [v for v in self.violations if isinstance(v, kind)]

    def counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for violation in self.violations:
            name = type(violation).__name__
            counts[name] = counts.get(name, 0) + 1
        return counts

    def describe(self) -> List[str]:
        return [violation.describe() for violation in self.violations]


def _violation_key(violation: Violation) -> Tuple:
    return (type(violation).__name__, astuple(violation))


# Operations

def enumerate_incidences(g: Graph) -> List[Incidence]:
    """Both orientations of every edge, ordered by (tail, head)."""
    return [Incidence(v, w) for v in g.vertices for w in g.sorted_neighbors(v)]


def incidences_adjacent(a: Incidence, b: Incidence) -> bool:
    return a.tail == b.tail or a.head == b.tail or a.tail == b.head


def adjacent_incidences(g: Graph, inc: Incidence) -> Set[Incidence]:
    """Every incidence of g adjacent to ``inc``."""
    tail, head = inc
    result = {Incidence(tail, y) for y in g.neighbors(tail)}
    result.update(Incidence(y, tail) for y in g.neighbors(tail))
    result.update(Incidence(head, y) for y in g.neighbors(head))
    result.discard(inc)
    return result


def incoming_color_set(g: Graph, c: IncidenceColoring, v: int) -> Set[int]:
    """Colors on the assigned incidences whose head is ``v``."""
    colors = set()
    for y in g.neighbors(v):
        color = c.get(Incidence(y, v))
        if color is not None:
            colors.add(color)
    return colors


def outgoing_color_set(g: Graph, c: IncidenceColoring, v: int) -> Set[int]:
    """Colors on the assigned incidences whose tail is ``v``."""
    colors = set()
    for y in g.neighbors(v):
        color = c.get(Incidence(v, y))
        if color is not None:
            colors.add(color)
    return colors


def feasible_colors(g: Graph, c: IncidenceColoring, inc: Incidence) -> Set[int]:
    """Colors that can be put on ``inc`` without breaking the partial coloring.

    A color is feasible when no assigned adjacent incidence carries it and,
    once the head already sees ``l`` incoming colors, it is one of them. The
    tail needs no incoming check since ``inc`` is outgoing there.

    Raises:
        ContractViolation: If ``inc`` is already colored or not an incidence of g.
    """
    inc = Incidence(*inc)
    if inc in c:
        raise ContractViolation(f"incidence {tuple(inc)} is already colored")
    if not g.has_edge(inc.tail, inc.head):
        raise ContractViolation(f"{tuple(inc)} is not an incidence of the graph")

    tail, head = inc
    prohibited = outgoing_color_set(g, c, tail)
    prohibited |= incoming_color_set(g, c, tail)
    prohibited |= outgoing_color_set(g, c, head)

    allowed = set(range(c.k)) - prohibited
    if c.l is not None:
        incoming = incoming_color_set(g, c, head)
        if len(incoming) >= c.l:
            allowed &= incoming
    return allowed


def verify_coloring(g: Graph, c: IncidenceColoring, require_total: bool = False) -> VerificationReport:
    """Check a (possibly partial) coloring against the (k, l) rules.

    Args:
        g: The graph the coloring claims to color.
        c: The coloring.
        require_total: Also report every uncolored incidence.

    Returns:
        A report with one entry per violation, in a canonical order. It is
        empty exactly when the coloring is valid (and total, if requested).
    """
    violations: List[Violation] = []

    for inc, color in c.items():
        if not g.has_edge(inc.tail, inc.head):
            violations.append(UnknownIncidence(inc))
        elif not 0 <= color < c.k:
            violations.append(PaletteOverflow(inc, color))

    seen_pairs: Set[Tuple[Incidence, Incidence]] = set()

    def conflict(a: Incidence, b: Incidence, color: int) -> None:
        pair = (a, b) if a < b else (b, a)
        if pair not in seen_pairs:
            seen_pairs.add(pair)
            violations.append(AdjacencyConflict(pair[0], pair[1], color))

    for v in g.vertices:
        nbrs = g.sorted_neighbors(v)
        outgoing: Dict[int, List[Incidence]] = {}
        incoming: Dict[int, List[Incidence]] = {}
        for y in nbrs:
            for inc, side in ((Incidence(v, y), outgoing), (Incidence(y, v), incoming)):
                color = c.get(inc)
                if color is not None:
                    side.setdefault(color, []).append(inc)

        for color, leaving in outgoing.items():
            clashing = leaving + incoming.get(color, [])
            for i, a in enumerate(leaving):
                for b in clashing[i + 1:]:
                    conflict(a, b, color)

        if c.l is not None and len(incoming) > c.l:
            violations.append(IncomingOverflow(v, tuple(sorted(incoming))))

    if require_total:
        for inc in enumerate_incidences(g):
            if inc not in c:
                violations.append(Uncolored(inc))

    violations.sort(key=_violation_key)
    return VerificationReport(tuple(violations))


def coloring_from_pairs(k: int, l: Optional[int],
                        entries: Iterable[Tuple[int, int, int]], validate: bool = True) -> IncidenceColoring:
    """Build a coloring from (tail, head, color) triples.

    Raises:
        MalformedInputError: If an incidence is listed twice.
    """
    assignment: Dict[Incidence, int] = {}
    for tail, head, color in entries:
        inc = Incidence(tail, head)
        if inc in assignment:
            raise MalformedInputError(f"incidence {tuple(inc)} listed twice")
        assignment[inc] = color
    return IncidenceColoring(k, l, assignment, validate=validate)
