"""Point and ray classes over n copies of the natural numbers.

The space X is the disjoint union of branches N_1, ..., N_n, each a copy
of {1, 2, 3, ...}.  The basic partial maps are within-branch translations
of rays [k, oo) and arbitrary singleton maps {x} -> {y}; elements here
are classes of finite disjoint unions of those maps whose domain is a
single point or a single ray, up to transport of the domain.

A point class is determined by its image point alone.  A ray class has
a well-defined domain branch (rays only transport within a branch); its
canonical form records the finitely many exceptional images followed by
a translation onto a tail [tail, oo) of the same branch, reduced so the
last exception never sits immediately below the tail.  These classes
carry the cubical complex on which Houghton's group H_n acts; expanding
a ray peels off its first point.
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
    apply_move,
    validate_vertex,
)


class CrossBranchTail(InputError):
    pass


class NoExpansion(InputError):
    pass


def check_point(p):
    if (
        not isinstance(p, tuple)
        or len(p) != 2
        or not all(isinstance(c, int) for c in p)
        or p[0] < 1
        or p[1] < 1
    ):
        raise InputError(f"not a point (branch, position >= 1): {p!r}")
    return p


@dataclass(frozen=True)
class SparseRegion:
    """A region of X: finitely many points plus at most one tail per branch.

    Normalized so no point lies inside or immediately below a tail; the
    descriptor is then a unique name for the region.
    """

    points: frozenset
    tails: tuple  # ((branch, start), ...) sorted, one entry per branch

    @classmethod
    def make(cls, points, tails):
        pts = set(points)
        starts = {}
        for i, k in tails:
            starts[i] = min(starts.get(i, k), k)
        changed = True
        while changed:
            changed = False
            for i in list(starts):
                k = starts[i]
                while k > 1 and (i, k - 1) in pts:
                    pts.discard((i, k - 1))
                    k -= 1
                    changed = True
                starts[i] = k
            absorbed = {
                p for p in pts if p[0] in starts and p[1] >= starts[p[0]]
            }
            if absorbed:
                pts -= absorbed
                changed = True
        return cls(frozenset(pts), tuple(sorted(starts.items())))

    @classmethod
    def whole(cls, n):
        return cls(frozenset(), tuple((i, 1) for i in range(1, n + 1)))

    def _tail_covers(self, p):
        return any(i == p[0] and p[1] >= k for i, k in self.tails)

    def is_disjoint(self, other):
        mine = {i for i, _ in self.tails}
        theirs = {i for i, _ in other.tails}
        if mine & theirs:
            return False
        if self.points & other.points:
            return False
        if any(other._tail_covers(p) for p in self.points):
            return False
        if any(self._tail_covers(p) for p in other.points):
            return False
        return True

    def is_subset(self, other):
        starts = dict(other.tails)
        for i, k in self.tails:
            if i not in starts or starts[i] > k:
                return False
        return all(
            p in other.points or other._tail_covers(p) for p in self.points
        )

    def union(self, other):
        return SparseRegion.make(
            self.points | other.points, self.tails + other.tails
        )


@dataclass(frozen=True)
class HPointClass:
    """Class of a singleton map, determined by the image point."""

    image: tuple

    def support(self):
        return SparseRegion(frozenset((self.image,)), ())

    def children(self):
        return None

    def key(self):
        return f"p{self.image[0]}.{self.image[1]}"

    def __str__(self):
        return self.key()


@dataclass(frozen=True)
class HRayClass:
    """Class of a ray map: exceptional images, then a same-branch tail."""

    branch: int
    exceptions: tuple
    tail: int

    @classmethod
    def make(cls, branch, exceptions, tail, tail_branch=None):
        """Validate and reduce ray data into the canonical form."""
        if tail_branch is not None and tail_branch != branch:
            raise CrossBranchTail(
                f"ray in branch {branch} cannot translate onto branch"
                f" {tail_branch}"
            )
        if not isinstance(branch, int) or branch < 1:
            raise InputError(f"bad branch {branch!r}")
        if not isinstance(tail, int) or tail < 1:
            raise InputError(f"bad tail start {tail!r}")
        exceptions = tuple(check_point(tuple(p)) for p in exceptions)
        if len(set(exceptions)) != len(exceptions):
            raise InputError("exceptional images must be distinct")
        if any(i == branch and m >= tail for i, m in exceptions):
            raise InputError("exceptional image inside the tail")
        while exceptions and exceptions[-1] == (branch, tail - 1):
            exceptions = exceptions[:-1]
            tail -= 1
        return cls(branch, exceptions, tail)

    def support(self):
        # make(), not the raw constructor: an exceptional image sitting
        # just below the tail (legal unless it is the last exception)
        # must be absorbed into the tail in the region descriptor.
        return SparseRegion.make(
            self.exceptions, ((self.branch, self.tail),)
        )

    def children(self):
        """Peel the first point: (point class, shifted ray class)."""
        if self.exceptions:
            first = self.exceptions[0]
            rest = HRayClass.make(self.branch, self.exceptions[1:], self.tail)
        else:
            first = (self.branch, self.tail)
            rest = HRayClass(self.branch, (), self.tail + 1)
        return (HPointClass(first), rest)

    def key(self):
        exc = ";".join(f"{i}.{m}" for i, m in self.exceptions)
        return f"r{self.branch}:{exc}:{self.tail}"

    def __str__(self):
        return self.key()


def canonicalize_point(image):
    return HPointClass(check_point(tuple(image)))


def canonicalize_ray(branch, images, tail, start=1, tail_branch=None):
    """Canonical ray class of a raw ray map.

    The raw map has domain [start, oo) in `branch`, sends its first
    positions to `images`, and translates the rest onto [tail, oo).
    Transporting the domain to [1, oo) only relabels positions, so the
    class is independent of `start`.
    """
    if not isinstance(start, int) or start < 1:
        raise DomainMismatch(f"not a ray domain start: {start!r}")
    return HRayClass.make(branch, images, tail, tail_branch=tail_branch)


def expand_h(b):
    if b.children() is None:
        raise NoExpansion("point classes admit no expansion")
    return b.children()


@dataclass(frozen=True)
class HGroupElement:
    """An eventually-translation bijection of X.

    `offsets[i-1]` is the eventual translation amount on branch i;
    `exceptions` lists the finitely many points whose image deviates
    from that translation (or whose translation image would fall below
    position 1), sorted by domain point.
    """

    n: int
    offsets: tuple
    exceptions: tuple  # ((domain point, image point), ...)

    @classmethod
    def make(cls, n, offsets, exceptions):
        offsets = tuple(int(t) for t in offsets)
        if len(offsets) != n:
            raise InputError("need one offset per branch")
        exc = {}
        pairs = exceptions.items() if isinstance(exceptions, dict) else exceptions
        for x, y in pairs:
            x = check_point(tuple(x))
            y = check_point(tuple(y))
            if x[0] > n or y[0] > n:
                raise InputError(f"branch out of range in {x} -> {y}")
            if exc.setdefault(x, y) != y:
                raise NotABijection(f"point {x} mapped twice")
        # drop entries that agree with the eventual translation
        for x in list(exc):
            i, p = x
            if p + offsets[i - 1] >= 1 and exc[x] == (i, p + offsets[i - 1]):
                del exc[x]
        g = cls(n, offsets, tuple(sorted(exc.items())))
        g._check_bijection()
        return g

    def _check_bijection(self):
        exc = dict(self.exceptions)
        for i, t in enumerate(self.offsets, start=1):
            # with a negative offset the lowest positions cannot translate
            for p in range(1, 1 - t):
                if (i, p) not in exc:
                    raise NotABijection(f"point ({i}, {p}) has no valid image")
        values = [y for _, y in self.exceptions]
        if len(set(values)) != len(values):
            raise NotABijection("two points share an image")
        uncovered = set()
        for i, t in enumerate(self.offsets, start=1):
            for q in range(1, t + 1):
                uncovered.add((i, q))
        for (i, p) in exc:
            q = p + self.offsets[i - 1]
            if q >= 1:
                uncovered.add((i, q))
        if set(values) != uncovered:
            raise NotABijection(
                "exceptional images do not tile the uncovered points"
            )

    def apply(self, x):
        exc = dict(self.exceptions)
        if x in exc:
            return exc[x]
        i, p = x
        return (i, p + self.offsets[i - 1])

    def preimage(self, y):
        for x, v in self.exceptions:
            if v == y:
                return x
        i, q = y
        return (i, q - self.offsets[i - 1])

    def inverse(self):
        return HGroupElement.make(
            self.n,
            tuple(-t for t in self.offsets),
            tuple((y, x) for x, y in self.exceptions),
        )

    def __mul__(self, other):
        if self.n != other.n:
            raise InputError("group elements over different spaces")
        offsets = tuple(
            a + b for a, b in zip(self.offsets, other.offsets)
        )
        candidates = {x for x, _ in other.exceptions}
        candidates |= {other.preimage(x) for x, _ in self.exceptions}
        exc = {x: self.apply(other.apply(x)) for x in candidates}
        return HGroupElement.make(self.n, offsets, exc.items())

    def key(self):
        exc = ";".join(
            f"{x[0]}.{x[1]}>{y[0]}.{y[1]}" for x, y in self.exceptions
        )
        return f"g{','.join(map(str, self.offsets))}:{exc}"

    def __str__(self):
        return self.key()


@dataclass(frozen=True)
class HPiece:
    """A transfer piece: finitely many point maps plus at most one
    within-branch tail translation."""

    point_pairs: tuple
    tail_pair: object  # ((branch, start), (branch, start)) or None


class HoughtonSystem(ExpansionSystem):
    """The point/ray expansion system over n branches (Houghton's H_n)."""

    name = "houghton"

    def __init__(self, n=2):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"branch count must be a positive int: {n!r}")
        self.n = n

    def _check_element(self, b):
        branches = (
            [b.image[0]]
            if isinstance(b, HPointClass)
            else [b.branch] + [i for i, _ in b.exceptions]
        )
        if any(i > self.n for i in branches):
            raise InputError(f"branch out of range for n={self.n}")
        return b

    def coexpansions(self, elements):
        els = list(elements)
        if len(els) != 2:
            return []
        points = [b for b in els if isinstance(b, HPointClass)]
        rays = [b for b in els if isinstance(b, HRayClass)]
        if len(points) != 1 or len(rays) != 1:
            return []
        p, r = points[0], rays[0]
        y = p.image
        if y in r.exceptions:
            return []
        if y[0] == r.branch and y[1] >= r.tail:
            return []
        return [HRayClass.make(r.branch, (y,) + r.exceptions, r.tail)]

    def covers_space(self, regions):
        union = SparseRegion(frozenset(), ())
        for r in regions:
            union = union.union(r)
        return union == SparseRegion.whole(self.n)

    def base_vertex(self):
        return validate_vertex(
            [HRayClass(i, (), 1) for i in range(1, self.n + 1)]
        )

    def standardize(self, v):
        vertices = [v]
        moves = []
        cur = v
        while True:
            target = next(
                (
                    b
                    for b in cur
                    if isinstance(b, HRayClass) and b.exceptions
                ),
                None,
            )
            if target is None:
                break
            m = Move.expand(target)
            cur = apply_move(cur, m)
            moves.append(m)
            vertices.append(cur)
        return AscendingPath(tuple(vertices), tuple(moves))

    def _standard_tails(self, s):
        starts = {}
        for b in s:
            if isinstance(b, HRayClass):
                if b.exceptions:
                    raise InputError("vertex is not standard")
                starts[b.branch] = b.tail
        if sorted(starts) != list(range(1, self.n + 1)):
            raise InputError("vertex does not cover every branch")
        return starts

    def join_standard(self, s1, s2):
        t1 = self._standard_tails(s1)
        t2 = self._standard_tails(s2)
        target_tails = {i: max(t1[i], t2[i]) for i in t1}
        elements = [
            HRayClass(i, (), k) for i, k in target_tails.items()
        ]
        elements += [
            HPointClass((i, q))
            for i, k in target_tails.items()
            for q in range(1, k)
        ]
        target = validate_vertex(elements)
        return (
            target,
            self._grow_path(s1, target_tails),
            self._grow_path(s2, target_tails),
        )

    def _grow_path(self, s, target_tails):
        vertices = [s]
        moves = []
        cur = s
        while True:
            target = next(
                (
                    b
                    for b in cur
                    if isinstance(b, HRayClass)
                    and b.tail < target_tails[b.branch]
                ),
                None,
            )
            if target is None:
                break
            m = Move.expand(target)
            cur = apply_move(cur, m)
            moves.append(m)
            vertices.append(cur)
        return AscendingPath(tuple(vertices), tuple(moves))

    def transfer(self, b1, b2):
        if isinstance(b1, HPointClass) and isinstance(b2, HPointClass):
            return HPiece(((b1.image, b2.image),), None)
        if isinstance(b1, HRayClass) and isinstance(b2, HRayClass):
            if b1.branch != b2.branch:
                return None
            m1 = len(b1.exceptions) + 1
            m2 = len(b2.exceptions) + 1
            top = max(m1, m2)

            def image(b, m, q):
                if q < m:
                    return b.exceptions[q - 1]
                return (b.branch, b.tail + q - m)

            pairs = tuple(
                (image(b1, m1, q), image(b2, m2, q)) for q in range(1, top)
            )
            tail_pair = (
                (b1.branch, b1.tail + top - m1),
                (b2.branch, b2.tail + top - m2),
            )
            return HPiece(pairs, tail_pair)
        return None

    def assemble(self, pieces):
        point_map = {}
        tail_domains = {}
        offsets = [None] * self.n
        for piece in pieces:
            for x, y in piece.point_pairs:
                if point_map.setdefault(x, y) != y:
                    raise NotABijection(f"point {x} mapped twice")
            if piece.tail_pair is not None:
                (i, k), (j, l) = piece.tail_pair
                if i != j:
                    raise CrossBranchTail(
                        "tail piece must stay within its branch"
                    )
                if i in tail_domains:
                    raise NotABijection(
                        f"branch {i} covered by two tail pieces"
                    )
                tail_domains[i] = k
                offsets[i - 1] = l - k
        if sorted(tail_domains) != list(range(1, self.n + 1)):
            raise NotABijection("every branch needs one tail piece")
        for i, k in tail_domains.items():
            for p in range(1, k):
                if (i, p) not in point_map:
                    raise NotABijection(
                        f"point ({i}, {p}) not covered by any piece"
                    )
        for (i, p) in point_map:
            if p >= tail_domains[i]:
                raise NotABijection(
                    f"point ({i}, {p}) covered twice (tail and point piece)"
                )
        return HGroupElement.make(self.n, offsets, point_map.items())

    def identity(self):
        return HGroupElement(self.n, (0,) * self.n, ())

    def act(self, g, b):
        if isinstance(b, HPointClass):
            return HPointClass(g.apply(b.image))
        exc_positions = [
            p for (i, p), _ in g.exceptions if i == b.branch
        ]
        top = max(exc_positions, default=0)
        t = g.offsets[b.branch - 1]
        peel = max(0, top - b.tail + 1, 1 - t - b.tail)
        images = [g.apply(y) for y in b.exceptions]
        images += [
            g.apply((b.branch, b.tail + j)) for j in range(peel)
        ]
        return HRayClass.make(b.branch, images, b.tail + peel + t)

    def parse_element(self, obj):
        if isinstance(obj, (list, tuple)):
            return self._check_element(canonicalize_point(obj))
        if isinstance(obj, dict):
            if "point" in obj:
                return self._check_element(canonicalize_point(obj["point"]))
            tail = obj["tail"]
            tail_branch = None
            if isinstance(tail, (list, tuple)):
                tail_branch, tail = tail
            ray = canonicalize_ray(
                obj["branch"],
                [tuple(p) for p in obj.get("exceptions", [])],
                tail,
                start=obj.get("start", 1),
                tail_branch=tail_branch,
            )
            return self._check_element(ray)
        raise InputError(f"bad element literal: {obj!r}")

    def element_to_obj(self, b):
        if isinstance(b, HPointClass):
            return list(b.image)
        return {
            "branch": b.branch,
            "exceptions": [list(p) for p in b.exceptions],
            "tail": b.tail,
        }

    def parse_group(self, obj):
        return HGroupElement.make(
            self.n,
            obj.get("offsets", [0] * self.n),
            [
                (tuple(x), tuple(y))
                for x, y in obj.get("exceptions", [])
            ],
        )

    def group_to_obj(self, g):
        return {
            "offsets": list(g.offsets),
            "exceptions": [
                [list(x), list(y)] for x, y in g.exceptions
            ],
        }
