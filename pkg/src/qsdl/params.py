"""Parameter arithmetic for quasi-symmetric 2-designs with intersection numbers 0 and y.

A candidate parameter set (v, b, r, k, lambda) together with the intersection
profile {0, y} must satisfy a stack of exact integer conditions:

  * the 2-design identities   r(k-1) = lambda(v-1)  and  vr = bk,
  * the quasi-symmetric identity  (y-1)(r-1) = (k-1)(lambda-1),
  * divisibilities  y | k  and  y | (r - lambda),
  * the window  k < v < (k^2 - k)/(y - 1),
  * Fisher-type and non-triviality bounds.

``enumerate_for_v`` searches all such tuples for a fixed v: for every (y, k)
in the admissible window the two linear identities determine (r, lambda)
uniquely, so the sieve never loops over r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .arith import divisors


class DomainError(ValueError):
    """Raised when an operation is called outside its stated domain."""


def gcd_ratio(r: int, lam: int) -> int:
    """r / gcd(r, lambda): the part of r that must divide every subdegree."""
    if r < 1 or lam < 1:
        raise DomainError(f"gcd_ratio needs positive integers, got ({r}, {lam})")
    return r // gcd(r, lam)


@dataclass(frozen=True)
class DesignParams:
    """A (v, b, r, k, lambda) tuple; arbitrary-precision throughout."""

    v: int
    b: int
    r: int
    k: int
    lam: int

    def __post_init__(self):
        for name in ("v", "b", "r", "k", "lam"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive")
        if self.r * (self.k - 1) != self.lam * (self.v - 1):
            raise DomainError("r(k-1) = lambda(v-1) violated")
        if self.v * self.r != self.b * self.k:
            raise DomainError("vr = bk violated")

    @property
    def ratio(self) -> int:
        return gcd_ratio(self.r, self.lam)

    def validate(self) -> None:
        """Assert the full invariant set expected of an admissible tuple."""
        if not (2 < self.k < self.v - 1):
            raise DomainError("non-triviality 2 < k < v-1 violated")
        if self.b < self.v or self.k > self.r:
            raise DomainError("Fisher bounds violated")
        if self.b == self.v or self.k == self.r:
            raise DomainError("symmetric tuple where a proper design is required")


@dataclass(frozen=True)
class QsProfile:
    """Intersection profile {x, y} with x pinned to 0."""

    y: int
    x: int = 0

    def __post_init__(self):
        if self.x != 0:
            raise DomainError("only the x = 0 profile is supported")
        if self.y < 2:
            raise DomainError("y must be at least 2")


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    entries: tuple[CheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def failed(self, name: str) -> bool:
        return any(e.name == name and not e.passed for e in self.entries)

    def names(self) -> set[str]:
        return {e.name for e in self.entries}


@dataclass(frozen=True)
class Candidate:
    """A parameter tuple plus its per-check ledger."""

    params: DesignParams
    profile: QsProfile
    ledger: tuple[CheckEntry, ...] = ()

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.ledger)

    @property
    def tuple(self) -> tuple[int, int, int, int, int, int]:
        p = self.params
        return (self.profile.y, p.v, p.b, p.r, p.k, p.lam)

    def validate(self) -> None:
        self.params.validate()
        y, p = self.profile.y, self.params
        if (y - 1) * (p.r - 1) != (p.k - 1) * (p.lam - 1):
            raise DomainError("(y-1)(r-1) = (k-1)(lambda-1) violated")
        if p.k % y or (p.r - p.lam) % y:
            raise DomainError("y | k and y | (r - lambda) violated")
        if not (y < p.lam <= p.k - 1):
            raise DomainError("y < lambda <= k-1 violated")
        if p.v * (y - 1) >= p.k * p.k - p.k:
            raise DomainError("v < (k^2 - k)/(y-1) violated")

    def tsv_row(self) -> str:
        """One row `y v b r k lambda ratio status reason`, tab-separated."""
        status = "ok" if self.passed else "rejected"
        reasons = "; ".join(f"{e.name}: {e.detail}" if e.detail else e.name
                            for e in self.ledger if not e.passed) or "-"
        p = self.params
        return "\t".join(map(str, (self.profile.y, p.v, p.b, p.r, p.k, p.lam,
                                   p.ratio, status, reasons)))


@dataclass(frozen=True)
class SearchBox:
    """Search space for one v: a y interval plus optional ratio constraints."""

    v: int
    y_min: int = 2
    y_max: int = 10
    ratio_divides: int | None = None
    ratio_equals: int | None = None

    def __post_init__(self):
        if self.v < 5:
            raise DomainError("v must be at least 5")
        if self.y_max < self.y_min:
            raise DomainError("empty y range")
        if self.y_min < 2:
            raise DomainError("y range must start at 2 or above")


# Names of the ledger checks that go beyond the plain search conditions:
# the quasi-symmetric bounds lambda <= k-1 / block-count bound, the strict
# ordering k > lambda, and the properness requirement b > v.  Case scans
# that need to surface a tuple rejected only by these (the way symmetric
# tuples are surfaced with a named rejection) test against this set.
QS_BOUND_CHECKS = frozenset({"lambda-max", "block-bound", "k-gt-lambda", "proper"})


def check_admissible(c: Candidate, y_cap: int | None = None) -> CheckReport:
    """Evaluate every admissibility condition; failures are entries, not errors.

    A pass requires all of: the y floor (and optional cap), the k window,
    both linear identities, both y-divisibilities, exact block count, the
    orderings r > k > lambda > 1, the quasi-symmetric bounds
    y < lambda <= k-1 and b <= v(v-1)/k, the ratio bound
    v <= 2(y-1)(r/(r,lambda))^2, non-triviality and the strict Fisher
    inequalities.  b = v is reported as the named failure "proper"
    (symmetric tuples are surfaced, not silently dropped).
    """
    p, y = c.params, c.profile.y
    entries: list[CheckEntry] = []

    def chk(name: str, ok: bool, detail: str = ""):
        entries.append(CheckEntry(name, bool(ok), detail if not ok else ""))

    chk("nontrivial", 2 < p.k < p.v - 1, f"need 2 < k < v-1, k={p.k}, v={p.v}")
    chk("y-floor", y >= 2, f"y={y} < 2")
    if y_cap is not None:
        chk("y-cap", y <= y_cap, f"y={y} > {y_cap}")
    chk("window", p.k < p.v and p.v * (y - 1) < p.k * p.k - p.k,
        f"need k < v < (k^2-k)/(y-1)")
    chk("replication", p.r * (p.k - 1) == p.lam * (p.v - 1),
        "r(k-1) != lambda(v-1)")
    chk("qs-identity", (y - 1) * (p.r - 1) == (p.k - 1) * (p.lam - 1),
        "(y-1)(r-1) != (k-1)(lambda-1)")
    chk("y-divides-k", p.k % y == 0, f"{y} does not divide k={p.k}")
    chk("y-divides-r-lambda", (p.r - p.lam) % y == 0,
        f"{y} does not divide r-lambda={p.r - p.lam}")
    chk("block-count", p.v * p.r == p.b * p.k, "b != vr/k")
    chk("r-gt-k", p.r > p.k, f"r={p.r} <= k={p.k}")
    chk("k-gt-lambda", p.k > p.lam, f"k={p.k} <= lambda={p.lam}")
    chk("lambda-gt-1", p.lam > 1, f"lambda={p.lam} <= 1")
    chk("lambda-gt-y", p.lam > y, f"lambda={p.lam} <= y={y}")
    chk("lambda-max", p.lam <= p.k - 1, f"lambda={p.lam} > k-1={p.k - 1}")
    chk("block-bound", p.b * p.k <= p.v * (p.v - 1),
        f"b={p.b} > v(v-1)/k")
    chk("ratio-bound", p.v <= 2 * (y - 1) * p.ratio ** 2,
        f"v={p.v} > 2(y-1)(r/(r,l))^2")
    chk("fisher", p.b >= p.v and p.k <= p.r, "b >= v, k <= r violated")
    if p.b == p.v:
        chk("proper", False, "symmetric: b = v, rejected")
    else:
        chk("proper", p.b > p.v, f"b={p.b} < v={p.v}")
    return CheckReport(tuple(entries))


def _solve_rk(v: int, y: int, k: int) -> tuple[int, int] | None:
    """Unique (r, lambda) solving the two linear identities, if integral."""
    den = (k - 1) ** 2 - (y - 1) * (v - 1)
    if den <= 0:
        return None
    num = (v - 1) * (k - y)
    if num <= 0 or num % den:
        return None
    r = num // den
    lam_num = r * (k - 1)
    if lam_num % (v - 1):
        return None
    return r, lam_num // (v - 1)


def _k_window(v: int, y: int) -> range:
    """k values satisfying k < v < (k^2 - k)/(y - 1)."""
    # smallest k with k^2 - k > v(y-1)
    t = v * (y - 1)
    k_lo = (1 + isqrt(1 + 4 * t)) // 2 + 1
    while k_lo * (k_lo - 1) <= t:
        k_lo += 1
    return range(max(3, k_lo), v)


def _constrained_ks(v: int, ratio: int) -> list[int]:
    """All k with gcd_ratio(r, lambda) forced to `ratio`.

    r/lambda = (v-1)/(k-1) in lowest terms has numerator
    (v-1)/gcd(v-1, k-1), so the ratio equals R exactly when
    k - 1 = L(v-1)/R with gcd(L, R) = 1, 1 <= L < R.
    """
    if ratio < 2 or (v - 1) % ratio:
        return []
    w = (v - 1) // ratio
    return [1 + w * ell for ell in range(1, ratio) if gcd(ell, ratio) == 1]


def enumerate_for_v(box: SearchBox, include_rejected: bool = False,
                    y_cap: int | None = None) -> list[Candidate]:
    """All admissible candidates for box.v, ascending by (y, k).

    By default only tuples passing every check are returned.  With
    ``include_rejected`` every tuple with integral (r, lambda, b) solving the
    two linear identities is returned, each carrying its full ledger; this is
    how symmetric (b = v) tuples and bound-violating tuples are surfaced for
    the case scans instead of disappearing silently.
    """
    out: list[Candidate] = []
    for y in range(box.y_min, box.y_max + 1):
        if box.ratio_equals is not None:
            ks: list[int] | range = sorted(
                k for k in _constrained_ks(box.v, box.ratio_equals) if k < box.v)
        elif box.ratio_divides is not None:
            g = gcd(box.ratio_divides, box.v - 1)
            seen: set[int] = set()
            for d in divisors(g):
                seen.update(k for k in _constrained_ks(box.v, d) if k < box.v)
            ks = sorted(seen)
        else:
            ks = _k_window(box.v, y)
        for k in ks:
            sol = _solve_rk(box.v, y, k)
            if sol is None:
                continue
            r, lam = sol
            if lam < 1 or (box.v * r) % k:
                continue
            b = box.v * r // k
            cand = Candidate(DesignParams(box.v, b, r, k, lam), QsProfile(y))
            report = check_admissible(cand, y_cap=y_cap)
            cand = Candidate(cand.params, cand.profile, report.entries)
            if cand.passed:
                cand.validate()
                out.append(cand)
            elif include_rejected:
                out.append(cand)
    return out


def brute_force_for_v(v: int, y_min: int = 2, y_max: int = 10) -> list[tuple]:
    """Independent oracle: direct enumeration over the (k, lambda) box.

    For every k and lambda the replication identity admits exactly one r,
    and the quasi-symmetric identity exactly one y; each surviving tuple is
    tested against every condition verbatim.  Shares no code with
    enumerate_for_v's windowed, ratio-driven search.
    """
    found = []
    for k in range(3, v):
        for lam in range(2, k):
            if (lam * (v - 1)) % (k - 1):
                continue
            r = lam * (v - 1) // (k - 1)
            if r <= k:
                continue
            if ((k - 1) * (lam - 1)) % (r - 1):
                continue
            y = 1 + (k - 1) * (lam - 1) // (r - 1)
            if y < y_min or y > y_max:
                continue
            if k % y or (r - lam) % y:
                continue
            if not k < v or v * (y - 1) >= k * k - k:
                continue
            if (v * r) % k:
                continue
            b = v * r // k
            if b <= v:
                continue
            if not (y < lam <= k - 1):
                continue
            if b * k > v * (v - 1):
                continue
            if v > 2 * (y - 1) * gcd_ratio(r, lam) ** 2:
                continue
            found.append((y, v, b, r, k, lam))
    return sorted(found)


def subdegree_filter(c: Candidate, subdegrees: list[int]) -> bool:
    """True iff r/(r,lambda) divides every supplied subdegree."""
    if not subdegrees:
        raise DomainError("subdegree list must be nonempty")
    if any(d < 1 for d in subdegrees):
        raise DomainError("subdegrees must be positive")
    ratio = c.params.ratio
    return all(d % ratio == 0 for d in subdegrees)


def stabilizer_filter(c: Candidate, stab_order: int,
                      group_order: int | None = None) -> CheckReport:
    """Point-stabilizer divisibility tests for a flag-transitive action.

    (a) r | lambda * gcd(v-1, |G_a|); (b) r | |G_a| (the stabilizer is
    transitive on the r blocks through its point); (c) if the group order is
    supplied, |G_a|^3 > lambda |G|.
    """
    if stab_order < 1:
        raise DomainError("stabilizer order must be positive")
    p = c.params
    entries = [
        CheckEntry("r-divides-lambda-gcd",
                   (p.lam * gcd(p.v - 1, stab_order)) % p.r == 0,
                   f"r={p.r}, lambda*gcd={p.lam * gcd(p.v - 1, stab_order)}"),
        CheckEntry("r-divides-stab", stab_order % p.r == 0,
                   f"r={p.r} does not divide |G_a|={stab_order}"),
    ]
    if group_order is not None:
        entries.append(CheckEntry(
            "stab-cube", stab_order ** 3 > p.lam * group_order,
            f"|G_a|^3={stab_order ** 3} <= lambda|G|={p.lam * group_order}"))
    return CheckReport(tuple(entries))
