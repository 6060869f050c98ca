"""Prefix-substitution classes over the binary Cantor set.

The space X is the set of infinite binary sequences; `B_w` denotes the
ball of sequences starting with the finite word w.  A basic partial map
sends `B_w1 -> B_w2` by replacing the prefix w1 with w2, and elements
here are classes of finite disjoint unions of such maps, up to
precomposition with a prefix substitution of the domain.  Each class has
a unique canonical representative: a reduced table over domain X whose
domain words form a complete prefix code and whose image words are
pairwise incomparable.  Full-support vertices built from these classes
generate the cubical complex on which Thompson's group V acts.

Tables are tuples of (domain word, image word) pairs, sorted by domain
word; the reduced form merges any sibling pair (d0 -> g0), (d1 -> g1)
into (d -> g) until no merge applies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AscendingPath,
    DomainMismatch,
    ExpansionSystem,
    InputError,
    Move,
    NotABijection,
    OverlappingSupports,
    Vertex,
    apply_move,
    validate_vertex,
)


class IncompleteDomainCode(InputError):
    pass


class OverlappingImages(InputError):
    pass


# -- words ----------------------------------------------------------------


def check_word(w):
    if not isinstance(w, str) or any(c not in "01" for c in w):
        raise InputError(f"not a binary word: {w!r}")
    return w


def comparable(u, w):
    return u.startswith(w) or w.startswith(u)


def check_antichain(words, exc=OverlappingImages):
    ws = sorted(words)
    for a, b in zip(ws, ws[1:]):
        if b.startswith(a):
            raise exc(f"words {a!r} and {b!r} are nested")


def is_complete_code(words):
    """True iff the balls named by `words` partition the whole space."""
    ws = sorted(words)
    if len(ws) != len(set(ws)):
        return False
    for a, b in zip(ws, ws[1:]):
        if b.startswith(a):
            return False
    top = max((len(w) for w in ws), default=0)
    return sum(1 << (top - len(w)) for w in ws) == 1 << top


def _normalize_words(words):
    """Reduced antichain naming the union of the given balls."""
    ws = set(words)
    while True:
        nested = {w for w in ws for u in ws if u != w and w.startswith(u)}
        if nested:
            ws -= nested
            continue
        for w in sorted(ws):
            if w and w[-1] == "0" and w[:-1] + "1" in ws:
                ws.discard(w)
                ws.discard(w[:-1] + "1")
                ws.add(w[:-1])
                break
        else:
            return tuple(sorted(ws))


@dataclass(frozen=True)
class BallRegion:
    """A region of the Cantor set: a reduced antichain of ball names."""

    words: tuple

    @classmethod
    def make(cls, words):
        return cls(_normalize_words(words))

    @classmethod
    def whole(cls):
        return cls(("",))

    def is_whole(self):
        return self.words == ("",)

    def is_disjoint(self, other):
        return not any(
            comparable(u, w) for u in self.words for w in other.words
        )

    def is_subset(self, other):
        # A reduced antichain covers B_w iff it contains a prefix of w.
        return all(
            any(w.startswith(u) for u in other.words) for w in self.words
        )

    def union(self, other):
        return BallRegion.make(self.words + other.words)


# -- tables ---------------------------------------------------------------


def _merge_sorted(entries):
    """Merge sibling (d0->g0),(d1->g1) pairs in a domain-sorted table."""
    stack = []
    for entry in entries:
        stack.append(entry)
        while len(stack) >= 2:
            (d1, g1), (d2, g2) = stack[-2], stack[-1]
            if (
                d1
                and d2
                and g1
                and g2
                and d1[:-1] == d2[:-1]
                and d1[-1] == "0"
                and d2[-1] == "1"
                and g1[:-1] == g2[:-1]
                and g1[-1] == "0"
                and g2[-1] == "1"
            ):
                stack.pop()
                stack.pop()
                stack.append((d1[:-1], g1[:-1]))
            else:
                break
    return tuple(stack)


def reduce_table(entries):
    """Validate a raw table and return its unique reduced, sorted form.

    The domain words must form a complete prefix code (the table is total
    on X) and the image words must be pairwise incomparable.
    """
    entries = tuple((check_word(d), check_word(g)) for d, g in entries)
    if not is_complete_code([d for d, _ in entries]):
        raise IncompleteDomainCode(
            "domain words do not partition the space"
        )
    check_antichain([g for _, g in entries])
    return _merge_sorted(sorted(entries))


def invert_entries(entries):
    return tuple(sorted((g, d) for d, g in entries))


def compose_entries(outer, inner):
    """Table of outer∘inner, composing partial prefix maps on overlaps."""
    out = []
    for a, b in inner:
        for c, d in outer:
            if b.startswith(c):
                out.append((a, d + b[len(c):]))
            elif c.startswith(b) and len(c) > len(b):
                out.append((a + c[len(b):], d))
    return _merge_sorted(sorted(out))


@dataclass(frozen=True)
class VElement:
    """Canonical class of a finite prefix-map with domain transported to X."""

    table: tuple

    @classmethod
    def from_table(cls, entries):
        return cls(reduce_table(entries))

    def support(self):
        return BallRegion.make([g for _, g in self.table])

    def children(self):
        """The two halves: restrictions to B_0 and B_1, canonicalized."""
        t = self.table
        if len(t) == 1:
            ((_, g),) = t
            return (VElement((("", g + "0"),)), VElement((("", g + "1"),)))
        left = tuple((d[1:], g) for d, g in t if d[0] == "0")
        right = tuple((d[1:], g) for d, g in t if d[0] == "1")
        return (VElement(_merge_sorted(left)), VElement(_merge_sorted(right)))

    def key(self):
        return self.text()

    def text(self):
        return ",".join(f"{d}->{g}" for d, g in self.table)

    def __str__(self):
        return self.text()


def canonicalize(entries, domain=""):
    """Canonical class of a raw table whose domain code partitions B_domain.

    Transports the domain to X by stripping the `domain` prefix, then
    reduces.  Raises DomainMismatch when an entry does not live inside
    the stated domain ball.
    """
    check_word(domain)
    stripped = []
    for d, g in entries:
        check_word(d)
        if not d.startswith(domain):
            raise DomainMismatch(
                f"domain word {d!r} is not inside ball {domain!r}"
            )
        stripped.append((d[len(domain):], g))
    return VElement.from_table(stripped)


def parse_table_text(text):
    """Parse the `"00->1, 01->01, 1->00"` table grammar."""
    entries = []
    for part in text.split(","):
        part = part.strip()
        if "->" not in part:
            raise InputError(f"bad table entry {part!r}")
        d, g = part.split("->", 1)
        entries.append((check_word(d.strip()), check_word(g.strip())))
    return tuple(entries)


def expand(b):
    """The basin of b: its left and right halves, in that order."""
    return b.children()


def glue(b1, b2):
    """The element whose basin is (b1, b2), with b1 under the left half."""
    if not b1.support().is_disjoint(b2.support()):
        raise OverlappingSupports(0, 1)
    entries = tuple(("0" + d, g) for d, g in b1.table) + tuple(
        ("1" + d, g) for d, g in b2.table
    )
    return VElement(_merge_sorted(entries))


# -- the group ------------------------------------------------------------


@dataclass(frozen=True)
class VGroupElement:
    """A table that is a bijection of X: both word columns complete codes."""

    table: tuple

    @classmethod
    def from_table(cls, entries):
        table = reduce_table(entries)
        if not is_complete_code([g for _, g in table]):
            raise NotABijection("image words do not partition the space")
        return cls(table)

    def inverse(self):
        return VGroupElement(_merge_sorted(invert_entries(self.table)))

    def __mul__(self, other):
        return VGroupElement(compose_entries(self.table, other.table))

    def key(self):
        return ",".join(f"{d}->{g}" for d, g in self.table)

    def __str__(self):
        return self.key()


def group_identity():
    return VGroupElement((("", ""),))


def act(g, b):
    """g·b: compose the bijection after the class representative."""
    return VElement(compose_entries(g.table, b.table))


def apply_group_to_region(g, region):
    """Image of a region under a group element."""
    words = []
    for w in region.words:
        for c, d in g.table:
            if w.startswith(c):
                words.append(d + w[len(c):])
            elif c.startswith(w):
                words.append(d)
    return BallRegion.make(words)


def transfer(b1, b2):
    """The unique partial map carrying supp(b1) to supp(b2) with g·b1 = b2.

    Always exists here; returned as a partial table (a transfer piece).
    """
    return compose_entries(b2.table, invert_entries(b1.table))


class VSystem(ExpansionSystem):
    """The prefix-substitution expansion system (Thompson's group V)."""

    name = "v"

    def coexpansions(self, elements):
        els = sorted(elements, key=lambda b: b.key())
        if len(els) != 2:
            return []
        b1, b2 = els
        if not b1.support().is_disjoint(b2.support()):
            return []
        return [glue(b1, b2), glue(b2, b1)]

    def covers_space(self, regions):
        union = BallRegion.make(
            [w for r in regions for w in r.words]
        )
        return union.is_whole()

    def base_vertex(self):
        return Vertex((VElement((("", ""),)),))

    def standardize(self, v):
        vertices = [v]
        moves = []
        cur = v
        while True:
            target = next(
                (b for b in cur if len(b.table) > 1), None
            )
            if target is None:
                break
            m = Move.expand(target)
            cur = apply_move(cur, m)
            moves.append(m)
            vertices.append(cur)
        return AscendingPath(tuple(vertices), tuple(moves))

    def join_standard(self, s1, s2):
        code1 = self._standard_code(s1)
        code2 = self._standard_code(s2)
        joined = set()
        for u in code1:
            for w in code2:
                if w.startswith(u):
                    joined.add(w)
                elif u.startswith(w):
                    joined.add(u)
        target = validate_vertex(
            [VElement((("", w),)) for w in sorted(joined)]
        )
        return target, self._refine_path(s1, joined), self._refine_path(
            s2, joined
        )

    def _standard_code(self, s):
        words = []
        for b in s:
            if len(b.table) != 1 or b.table[0][0] != "":
                raise InputError("vertex is not standard")
            words.append(b.table[0][1])
        return words

    def _refine_path(self, s, code):
        vertices = [s]
        moves = []
        cur = s
        while True:
            target = next(
                (b for b in cur if b.table[0][1] not in code), None
            )
            if target is None:
                break
            m = Move.expand(target)
            cur = apply_move(cur, m)
            moves.append(m)
            vertices.append(cur)
        return AscendingPath(tuple(vertices), tuple(moves))

    def transfer(self, b1, b2):
        return transfer(b1, b2)

    def assemble(self, pieces):
        entries = tuple(
            sorted(entry for piece in pieces for entry in piece)
        )
        try:
            return VGroupElement.from_table(entries)
        except IncompleteDomainCode as err:
            raise NotABijection(str(err)) from err

    def identity(self):
        return group_identity()

    def act(self, g, b):
        return act(g, b)

    def parse_element(self, obj):
        if isinstance(obj, str):
            return canonicalize(parse_table_text(obj))
        if isinstance(obj, dict):
            entries = obj.get("table")
            if entries is None:
                raise InputError("element object needs a 'table' field")
            if isinstance(entries, str):
                entries = parse_table_text(entries)
            return canonicalize(
                [tuple(e) for e in entries], obj.get("domain", "")
            )
        return canonicalize([tuple(e) for e in obj])

    def element_to_obj(self, b):
        return [list(e) for e in b.table]

    def parse_group(self, obj):
        if isinstance(obj, str):
            return VGroupElement.from_table(parse_table_text(obj))
        if isinstance(obj, dict):
            return self.parse_group(obj["table"])
        return VGroupElement.from_table([tuple(e) for e in obj])

    def group_to_obj(self, g):
        return [list(e) for e in g.table]
