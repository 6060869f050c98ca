"""Shared machinery for simple expansion systems.

An expansion system supplies *elements*, each carrying a support region
inside a fixed space X and, optionally, a *basin*: an ordered list of at
least two child elements whose supports partition the parent's support.
A *vertex* is a finite set of elements with pairwise disjoint supports;
a vertex is *full-support* when the supports cover all of X.  Moves
replace an element by its basin (expand) or a basin by its parent
(contract).  Everything here is instance-generic; the concrete element
types live in `thompson` and `houghton`.

All values are immutable after construction and every operation is
pure, so they can be shared freely across workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class InputError(Exception):
    """Malformed or inconsistent input value."""


class OverlappingSupports(InputError):
    def __init__(self, i, j):
        super().__init__(f"elements {i} and {j} have overlapping supports")
        self.indices = (i, j)


class DuplicateElement(InputError):
    def __init__(self, i, j):
        super().__init__(f"elements {i} and {j} are equal")
        self.indices = (i, j)


class MoveNotApplicable(InputError):
    pass


class DomainMismatch(InputError):
    pass


class NotABijection(InputError):
    pass


class CapExceeded(Exception):
    """An exploration hit its resource cap; `partial` holds what was built."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Vertex:
    """A finite set of elements with pairwise disjoint supports.

    Elements are stored sorted by their canonical serialization, so equal
    vertices compare and serialize identically.  The height of a vertex
    is its number of elements.
    """

    elements: tuple

    @property
    def height(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, b):
        return b in self.elements

    def key(self):
        return "|".join(b.key() for b in self.elements)

    def as_set(self):
        return frozenset(self.elements)


def validate_vertex(elements):
    """Build a Vertex, checking disjointness and rejecting duplicates.

    Raises OverlappingSupports or DuplicateElement naming the offending
    pair of positions in the *input* order.
    """
    elements = list(elements)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if elements[i] == elements[j]:
                raise DuplicateElement(i, j)
            if not elements[i].support().is_disjoint(elements[j].support()):
                raise OverlappingSupports(i, j)
    return Vertex(tuple(sorted(elements, key=lambda b: b.key())))


def induced_partition(v):
    """The supports of v's elements, in vertex order."""
    return [b.support() for b in v]


def restrict(v, b):
    """All elements of v whose support nests inside b's support."""
    region = b.support()
    return [b2 for b2 in v if b2.support().is_subset(region)]


@dataclass(frozen=True)
class Move:
    """An expand or contract move.

    kind "expand": replace `target` (which must have children) by its basin.
    kind "contract": replace the basin (= children of `target`) by `target`.
    """

    kind: str
    target: object

    @classmethod
    def expand(cls, b):
        return cls("expand", b)

    @classmethod
    def contract(cls, target):
        return cls("contract", target)

    @property
    def basin(self):
        """The set of v-elements this move consumes."""
        if self.kind == "expand":
            return frozenset((self.target,))
        return frozenset(self.target.children())

    def sort_key(self):
        return (self.kind, self.target.key())


def apply_move(v, m):
    """Apply a move to a vertex, returning the neighboring vertex."""
    if m.kind == "expand":
        kids = m.target.children()
        if m.target not in v:
            raise MoveNotApplicable("expansion target not in vertex")
        if kids is None:
            raise MoveNotApplicable("element has no expansion")
        rest = [b for b in v if b != m.target]
        return validate_vertex(rest + list(kids))
    if m.kind == "contract":
        kids = m.target.children()
        if kids is None:
            raise MoveNotApplicable("contraction target has no basin")
        if not all(c in v for c in kids):
            raise MoveNotApplicable("basin not contained in vertex")
        rest = [b for b in v if b not in set(kids)]
        return validate_vertex(rest + [m.target])
    raise MoveNotApplicable(f"unknown move kind {m.kind!r}")


@dataclass(frozen=True)
class AscendingPath:
    """An edge path along which height strictly increases.

    vertices[0] is the start; moves[i] (always an expansion) carries
    vertices[i] to vertices[i+1].
    """

    vertices: tuple
    moves: tuple

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self):
        return len(self.moves)

    def __add__(self, other):
        if self.end != other.start:
            raise InputError("paths do not concatenate")
        return AscendingPath(
            self.vertices + other.vertices[1:], self.moves + other.moves
        )

    def check(self):
        """Verify every edge is an expansion that strictly raises height."""
        if len(self.vertices) != len(self.moves) + 1:
            return False
        for i, m in enumerate(self.moves):
            if m.kind != "expand":
                return False
            if apply_move(self.vertices[i], m) != self.vertices[i + 1]:
                return False
            if self.vertices[i + 1].height <= self.vertices[i].height:
                return False
        return True


class ExpansionSystem:
    """Operations a concrete expansion system must supply.

    Elements are opaque values with a total order given by `key()`,
    hash-equality matching class equality, `support()` returning the
    system's region type, and `children()` returning the ordered basin
    (length >= 2) or None when the element admits no proper expansion.
    Generic code never assumes basins have size two.
    """

    name = "?"

    # -- required instance operations ------------------------------------

    def coexpansions(self, elements):
        """All elements whose basin equals the given set."""
        raise NotImplementedError

    def covers_space(self, regions):
        """True iff the union of the regions is the whole space."""
        raise NotImplementedError

    def base_vertex(self):
        """A canonical full-support vertex to start explorations from."""
        raise NotImplementedError

    def standardize(self, v):
        """Ascending path from v to a partition-type vertex."""
        raise NotImplementedError

    def join_standard(self, s1, s2):
        """Common refinement of two standard vertices, with paths from each."""
        raise NotImplementedError

    def transfer(self, b1, b2):
        """The unique partial-map piece carrying b1's support onto b2's so
        that any group element extending it maps b1 to b2; None if no such
        piece exists."""
        raise NotImplementedError

    def assemble(self, pieces):
        """Combine transfer pieces into a group element (NotABijection if
        the pieces do not tile the space on both sides)."""
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def act(self, g, b):
        """Left action of a group element on an element."""
        raise NotImplementedError

    def parse_element(self, obj):
        raise NotImplementedError

    def element_to_obj(self, b):
        raise NotImplementedError

    def parse_group(self, obj):
        raise NotImplementedError

    def group_to_obj(self, g):
        raise NotImplementedError

    # -- generic derived operations --------------------------------------

    def contraction_candidates(self, v):
        """Subsets of v worth testing for a contraction.

        Default: all 2-subsets, which is exhaustive for any system whose
        basins have size two.  Systems with larger basins override this.
        """
        return itertools.combinations(v, 2)

    def is_full_support(self, v):
        return self.covers_space([b.support() for b in v])

    def act_vertex(self, g, v):
        return validate_vertex([self.act(g, b) for b in v])
