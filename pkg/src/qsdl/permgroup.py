"""Permutation groups: parsing, deterministic Schreier-Sims, orbits of points,
sets and flags.

Points are 0-based internally and 1-based in generator files.  The stabilizer
chain is built by the classic deterministic Schreier-Sims procedure: new base
points are always the smallest point moved by the residue at hand, orbits are
breadth-first in queue order with generators applied in list order, so
identical input yields an identical base, identical transversals and hence an
identical order on every run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce


class ParseError(ValueError):
    """Generator file rejected; message carries the 1-based line number."""


class GroupDomainError(ValueError):
    pass


class Perm:
    """A permutation of {0..n-1}; ``images[i]`` is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Perm":
        """Build from 0-based cycles, e.g. [(0,1,2),(3,4)]."""
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """self then other: (p * q)(x) = q(p(x))."""
        q = other.images
        return Perm(tuple(q[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def min_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def apply_to_set(self, block) -> tuple[int, ...]:
        return tuple(sorted(self.images[x] for x in block))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({list(self.images)})"


def _validate_images(images, degree: int) -> None:
    if len(images) != degree:
        raise ValueError(f"expected {degree} images, got {len(images)}")
    seen = [False] * degree
    for x in images:
        if not 0 <= x < degree:
            raise ValueError(f"point {x + 1} out of range 1..{degree}")
        if seen[x]:
            raise ValueError(f"repeated image {x + 1}")
        seen[x] = True


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: Perm.identity(degree)}


@dataclass(frozen=True)
class ActionOrbit:
    representative: int
    elements: tuple[int, ...]
    stabilizer_order: int


class Group:
    """A permutation group given by generators, with a cached stabilizer chain.

    Immutable once built: every query after construction is read-only.
    """

    def __init__(self, degree: int, generators, base_hint=()):
        if degree < 1:
            raise GroupDomainError("degree must be positive")
        gens = [g if isinstance(g, Perm) else Perm(g) for g in generators]
        for g in gens:
            if g.degree != degree:
                raise GroupDomainError(
                    f"generator degree {g.degree} != declared degree {degree}")
            _validate_images(g.images, degree)
        if not gens:
            raise GroupDomainError("at least one generator required")
        self.degree = degree
        self.generators = tuple(gens)
        self._levels: list[_Level] | None = None
        self._base_hint = tuple(base_hint)
        self._order: int | None = None

    # -- stabilizer chain ---------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._schreier_sims()
        return self._levels

    def _schreier_sims(self) -> list[_Level]:
        degree = self.degree
        levels: list[_Level] = [_Level(p, degree) for p in self._base_hint]
        # strong generators tagged with the deepest base prefix they fix:
        # a generator tagged j fixes base[0..j-1] and so generates at levels <= j
        strong: list[tuple[Perm, int]] = []

        def level_gens(i: int) -> list[Perm]:
            return [g for g, tag in strong if tag >= i]

        def rebuild_orbit(i: int) -> None:
            lvl = levels[i]
            gens = level_gens(i)
            trans = {lvl.point: Perm.identity(degree)}
            queue = deque([lvl.point])
            while queue:
                p = queue.popleft()
                u = trans[p]
                for g in gens:
                    q = g.images[p]
                    if q not in trans:
                        trans[q] = u * g
                        queue.append(q)
            lvl.transversal = trans

        def strip(g: Perm, start: int) -> tuple[Perm, int]:
            i = start
            while i < len(levels):
                x = g.images[levels[i].point]
                u = levels[i].transversal.get(x)
                if u is None:
                    return g, i
                g = g * u.inverse()
                i += 1
            return g, i

        def add_at(g: Perm, j: int) -> None:
            if j == len(levels):
                levels.append(_Level(g.min_moved(), degree))
            strong.append((g, j))
            lvl = levels[j]
            lvl.gens = level_gens(j)
            for i in range(j + 1):
                rebuild_orbit(i)

        for g in self.generators:
            residue, j = strip(g, 0)
            if not residue.is_identity():
                add_at(residue, j)

        i = len(levels) - 1
        while i >= 0:
            lvl = levels[i]
            gens = level_gens(i)
            dirty = False
            for p in sorted(lvl.transversal):
                up = lvl.transversal[p]
                for h in gens:
                    q = h.images[p]
                    schreier = up * h * lvl.transversal[q].inverse()
                    residue, j = strip(schreier, i + 1)
                    if not residue.is_identity():
                        add_at(residue, j)
                        i = j
                        dirty = True
                        break
                if dirty:
                    break
            if not dirty:
                i -= 1
        for i, lvl in enumerate(levels):
            lvl.gens = level_gens(i)
        return levels

    def order(self) -> int:
        """Exact group order: the product of fundamental orbit lengths."""
        if self._order is None:
            self._order = reduce(
                lambda acc, lvl: acc * len(lvl.transversal), self._chain(), 1)
        return self._order

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._chain())

    def fundamental_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(lvl.transversal)) for lvl in self._chain())

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        levels = self._chain()
        for i in range(len(levels)):
            x = g.images[levels[i].point]
            u = levels[i].transversal.get(x)
            if u is None:
                return False
            g = g * u.inverse()
        return g.is_identity()

    def elements(self, limit: int = 2_000_000) -> list[Perm]:
        """Every element by closure; only sensible for small groups."""
        seen = {Perm.identity(self.degree)}
        frontier = list(seen)
        while frontier:
            new = []
            for p in frontier:
                for g in self.generators:
                    q = p * g
                    if q not in seen:
                        seen.add(q)
                        new.append(q)
                        if len(seen) > limit:
                            raise GroupDomainError(
                                f"element enumeration exceeds limit {limit}")
            frontier = new
        return sorted(seen, key=lambda p: p.images)

    # -- orbits -------------------------------------------------------------

    def orbit(self, point: int) -> ActionOrbit:
        """Breadth-first orbit of a point, with the stabilizer order attached."""
        if not 0 <= point < self.degree:
            raise GroupDomainError(f"point {point} outside degree {self.degree}")
        seen = {point}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = g.images[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        elems = tuple(sorted(seen))
        return ActionOrbit(point, elems, self.order() // len(elems))

    def set_orbit(self, block) -> list[tuple[int, ...]]:
        """All distinct images of a point set, sorted lexicographically."""
        blk = tuple(sorted(block))
        if not blk:
            raise GroupDomainError("empty block")
        if not all(0 <= x < self.degree for x in blk):
            raise GroupDomainError("block contains out-of-range points")
        seen = {blk}
        queue = deque([blk])
        while queue:
            cur = queue.popleft()
            for g in self.generators:
                img = g.apply_to_set(cur)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return sorted(seen)

    def flag_orbit_size(self, point: int, block, blocks) -> int:
        """Orbit size of an incident (point, block) pair under the joint action.

        ``blocks`` must be closed under the group; the action is flag-transitive
        on the structure exactly when the result equals (number of blocks) * k.
        """
        blk = tuple(sorted(block))
        if point not in blk:
            raise GroupDomainError("flag must be incident: point not in block")
        block_set = {tuple(sorted(b)) for b in blocks}
        if blk not in block_set:
            raise GroupDomainError("block not among the supplied blocks")
        start = (point, blk)
        seen = {start}
        queue = deque([start])
        while queue:
            p, cur = queue.popleft()
            for g in self.generators:
                img = (g.images[p], g.apply_to_set(cur))
                if img[1] not in block_set:
                    raise GroupDomainError("block list not closed under the group")
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return len(seen)


def parse_generators(text: str) -> Group:
    """Parse the generator file format.

    Line 1 is ``degree N``; every following non-comment line is one
    permutation given as N whitespace-separated 1-based images.  ``#`` starts
    a comment.  Malformed input raises ParseError with the line number.
    """
    degree = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError(f"line {lineno}: expected 'degree N'")
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad degree {parts[1]!r}") from None
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive")
            continue
        try:
            images = [int(tok) - 1 for tok in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer image") from None
        try:
            _validate_images(images, degree)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        gens.append(Perm(images))
    if degree is None:
        raise ParseError("line 1: missing 'degree N' header")
    if not gens:
        raise ParseError("no generators in file")
    return Group(degree, gens)


def load_group(path) -> Group:
    with open(path, "r", encoding="ascii") as fh:
        return parse_generators(fh.read())
