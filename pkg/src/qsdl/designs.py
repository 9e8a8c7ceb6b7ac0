"""Block designs from base-block orbits: 2-design verification, intersection
profiles, exhaustive orbit search and flag-transitivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .permgroup import Group, GroupDomainError


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    """Point set {0..v-1} plus a lexicographically sorted list of k-subsets."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_blocks(v: int, blocks) -> "Design":
        norm = sorted(tuple(sorted(b)) for b in blocks)
        if not norm:
            raise DesignError("a design needs at least one block")
        k = len(norm[0])
        if any(len(b) != k for b in norm):
            raise DesignError("blocks must all have the same size")
        if any(len(set(b)) != k for b in norm):
            raise DesignError("block contains a repeated point")
        if any(b[0] < 0 or b[-1] >= v for b in norm):
            raise DesignError("block contains an out-of-range point")
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise DesignError("duplicate block")
        return Design(v, tuple(norm))

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    def replication_numbers(self) -> dict[int, int]:
        counts = dict.fromkeys(range(self.v), 0)
        for blk in self.blocks:
            for p in blk:
                counts[p] += 1
        return counts

    def serialize(self) -> str:
        """Header `v b k`, then one block per line as sorted 1-based points."""
        lines = [f"{self.v} {self.b} {self.k}"]
        lines += [" ".join(str(p + 1) for p in blk) for blk in self.blocks]
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> "Design":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise DesignError("empty design file")
        head = lines[0].split()
        if len(head) != 3:
            raise DesignError("design header must be 'v b k'")
        v, b, k = map(int, head)
        blocks = []
        for ln in lines[1:]:
            blk = tuple(int(tok) - 1 for tok in ln.split())
            if len(blk) != k:
                raise DesignError(f"block {ln!r} does not have {k} points")
            blocks.append(blk)
        if len(blocks) != b:
            raise DesignError(f"expected {b} blocks, found {len(blocks)}")
        return Design.from_blocks(v, blocks)


def pair_coverage(d: Design) -> tuple[bool, int | None]:
    """(True, lambda) iff every unordered point pair lies in the same number
    of blocks; otherwise (False, None)."""
    counts: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for pair in combinations(blk, 2):
            counts[pair] = counts.get(pair, 0) + 1
    total_pairs = comb(d.v, 2)
    if len(counts) != total_pairs:
        return False, None
    values = set(counts.values())
    if len(values) != 1:
        return False, None
    return True, values.pop()


def first_uneven_pair(d: Design) -> tuple[int, int] | None:
    """The lexicographically first pair whose coverage deviates, for debugging."""
    counts: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for pair in combinations(blk, 2):
            counts[pair] = counts.get(pair, 0) + 1
    all_counts = [counts.get(p, 0) for p in combinations(range(d.v), 2)]
    ref = max(set(all_counts), key=all_counts.count)
    for pair, c in zip(combinations(range(d.v), 2), all_counts):
        if c != ref:
            return pair
    return None


def intersection_numbers(d: Design) -> frozenset[int]:
    """The exact set of pairwise block intersection sizes."""
    if d.b < 2:
        raise DesignError("intersection profile needs at least two blocks")
    sets = [frozenset(b) for b in d.blocks]
    profile = set()
    for i in range(len(sets)):
        si = sets[i]
        for j in range(i + 1, len(sets)):
            profile.add(len(si & sets[j]))
    return frozenset(profile)


def is_quasi_symmetric(d: Design) -> tuple[bool, int | None, int | None]:
    """(True, x, y) iff the design has exactly two intersection numbers."""
    prof = sorted(intersection_numbers(d))
    if len(prof) == 2:
        return True, prof[0], prof[1]
    return False, None, None


def _profile_within(blocks: tuple[tuple[int, ...], ...], allowed: frozenset[int]
                    ) -> frozenset[int] | None:
    """Pairwise intersection sizes, bailing out as soon as one falls outside
    ``allowed``; large non-quasi-symmetric orbits die within a few pairs."""
    sets = [frozenset(b) for b in blocks]
    profile = set()
    for i in range(len(sets)):
        si = sets[i]
        for j in range(i + 1, len(sets)):
            size = len(si & sets[j])
            if size not in allowed:
                return None
            profile.add(size)
    return frozenset(profile)


def base_block_search(g: Group, k: int, y_max: int = 10,
                      cap: int = 1_000_000) -> list[Design]:
    """Every orbit of k-subsets that forms a 2-design with profile {0, y}, y <= y_max.

    Sweeps the full lexicographic enumeration of k-subsets, classifying each
    subset into its orbit exactly once; orbits are reported in order of their
    lexicographically least block, independent of generator order.
    """
    n_subsets = comb(g.degree, k)
    if n_subsets > cap:
        raise DesignError(
            f"{n_subsets} k-subsets exceeds the cap {cap}; "
            f"raise cap to at least {n_subsets} to search this action")
    allowed = frozenset(range(y_max + 1))  # {0..y_max}; x = 0 demanded below
    found: list[Design] = []
    visited: set[tuple[int, ...]] = set()
    for subset in combinations(range(g.degree), k):
        if subset in visited:
            continue
        orbit = g.set_orbit(subset)
        visited.update(orbit)
        if len(orbit) < 2:
            continue
        # exact-integrality precheck: b k(k-1) = lambda v(v-1) for a 2-design
        lam2 = len(orbit) * k * (k - 1)
        if lam2 % (g.degree * (g.degree - 1)):
            continue
        profile = _profile_within(tuple(orbit), allowed)
        if profile is None or len(profile) != 2 or 0 not in profile:
            continue
        y = max(profile)
        if y < 2:
            continue
        d = Design(g.degree, tuple(orbit))
        ok, lam = pair_coverage(d)
        if not ok:
            continue
        found.append(d)
    return found


def verify_flag_transitive(g: Group, d: Design) -> bool:
    """True iff the joint orbit of one incident pair has size b*k.

    Requires the block set to be closed under the group; a non-closed block
    list raises, it is not a False.
    """
    blk = d.blocks[0]
    size = g.flag_orbit_size(blk[0], blk, d.blocks)
    return size == d.b * d.k
