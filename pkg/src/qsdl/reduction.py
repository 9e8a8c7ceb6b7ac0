"""Eliminators for the twisted-wreath, simple-diagonal and product-action
primitive types.

Each operation turns one case of the O'Nan-Scott reduction into exact integer
arithmetic: a lower bound on y that explodes (twisted wreath), order bounds
against a catalog of small simple groups (simple diagonal), or a finite
divisor-driven enumeration feeding the parameter sieve (product action).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd, isqrt

from .arith import linear_divisor_arguments, linfrac_integer_arguments
from .params import (Candidate, CheckEntry, DesignParams, DomainError,
                     QsProfile, SearchBox, check_admissible, enumerate_for_v)


@dataclass(frozen=True)
class SimpleGroupRecord:
    name: str
    order: int
    out_order: int

    def __post_init__(self):
        if self.order < 60:
            raise DomainError("non-abelian simple groups have order >= 60")
        if self.out_order < 1:
            raise DomainError("outer automorphism order must be positive")


@dataclass(frozen=True)
class ProductActionRow:
    """One surviving parameter row of the two-factor product action case."""

    y: int
    a1: int
    omega: int
    params: DesignParams
    soc_names: tuple[str, ...] = ()

    def __post_init__(self):
        p = self.params
        if self.a1 * p.r != 2 * p.lam * (self.omega - 1):
            raise DomainError("a1 * r = 2 lambda (omega - 1) violated")
        if 2 * (p.k - 1) != self.a1 * (self.omega + 1):
            raise DomainError("k - 1 = a1 (omega + 1)/2 violated")
        if p.v != self.omega ** 2:
            raise DomainError("v = omega^2 violated")


@dataclass
class EliminationReport:
    """One elimination step: what was tried, what survived, and why the rest died."""

    case: str
    bounds: dict = field(default_factory=dict)
    survivors: list = field(default_factory=list)
    rejections: list = field(default_factory=list)  # (item, reason)
    notes: list = field(default_factory=list)

    def reject(self, item, reason: str):
        self.rejections.append((item, reason))


def load_simple_group_catalog(path) -> list[SimpleGroupRecord]:
    """TSV `name order out_order`; PSL(2,q) orders are cross-checked against
    q(q^2-1)/gcd(2,q-1) at load time."""
    records = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise DomainError(f"{path}:{lineno}: expected 3 tab-separated fields")
            name, order, out = parts[0], int(parts[1]), int(parts[2])
            if name.startswith("PSL(2,") and name.endswith(")"):
                q = int(name[6:-1])
                expect = q * (q * q - 1) // gcd(2, q - 1)
                if order != expect:
                    raise DomainError(
                        f"{path}:{lineno}: {name} order {order} != {expect}")
            records.append(SimpleGroupRecord(name, order, out))
    if not records:
        raise DomainError(f"{path}: empty catalog")
    return records


# ---------------------------------------------------------------- twisted wreath

def twisted_wreath_y_min(t_order: int, m: int) -> Fraction:
    """Exact lower bound |T|^m / (2 m^2 (|T|-1)^2) + 1 for y in the
    twisted-wreath case (regular socle T^m, m >= 6)."""
    if t_order < 60:
        raise DomainError("|T| must be at least 60")
    if m < 6:
        raise DomainError("twisted wreath type requires m >= 6")
    return Fraction(t_order ** m, 2 * m * m * (t_order - 1) ** 2) + 1


# ---------------------------------------------------------------- simple diagonal

def diagonal_catalog_filter(catalog: list[SimpleGroupRecord]) -> list[SimpleGroupRecord]:
    """Simple groups with |T| <= 400 |Out(T)|^2."""
    return [rec for rec in catalog if rec.order <= 400 * rec.out_order ** 2]


def diagonal_feasible(y_max: int, catalog: list[SimpleGroupRecord]
                      ) -> list[tuple[SimpleGroupRecord, int]]:
    """(record, m) pairs surviving both diagonal-type bounds for m in {2,3,4}:

        |T|^(m-1) <= 2(y-1) m^2 (|T|-1)^2      (subdegree bound)
        |T|^(m-1) <= 2(y-1) |Out(T)|^2 (m!)^2  (stabilizer divisibility bound)

    m <= 4 is forced by the first bound once |T| >= 60.
    """
    if y_max < 2:
        raise DomainError("y_max must be at least 2")
    if not catalog:
        raise DomainError("catalog must be nonempty")
    c = 2 * (y_max - 1)
    out = []
    for rec in catalog:
        for m in (2, 3, 4):
            v = rec.order ** (m - 1)
            if v > c * m * m * (rec.order - 1) ** 2:
                continue
            if v > c * rec.out_order ** 2 * factorial(m) ** 2:
                continue
            out.append((rec, m))
    return out


def diagonal_report(y_max: int, catalog: list[SimpleGroupRecord]) -> EliminationReport:
    """Feasible (T, m) pairs plus the sieve outcome at each resulting v."""
    rep = EliminationReport("simple diagonal")
    pairs = diagonal_feasible(y_max, catalog)
    rep.bounds["catalog_filter"] = [r.name for r in diagonal_catalog_filter(catalog)]
    rep.bounds["pairs"] = [(r.name, m) for r, m in pairs]
    for rec, m in pairs:
        v = rec.order ** (m - 1)
        hits = enumerate_for_v(SearchBox(v, 2, y_max))
        if hits:
            rep.survivors.extend(hits)
        else:
            rep.reject((rec.name, m, v), "parameter sieve empty")
    rep.notes.append(
        "the printed stabilizer bound excludes every |T| at m = 3, 4; the sieve "
        "at v = 60^2 and 60^3 is empty regardless, so the case closes either way")
    return rep


# ---------------------------------------------------------------- product action

def product_action_omega_bound(m: int, a: int, y: int) -> int | None:
    """Largest omega >= 5 with a^2 omega^m <= 2(y-1) m^2 (omega-1)^2, or None.

    The ratio omega^m/(omega-1)^2 is increasing for omega >= 5 and m >= 3, so
    the bound is found by the first failure.
    """
    if not 3 <= m <= 5:
        raise DomainError("the high-rank product action case covers m in 3..5")
    if a < 1 or y < 2:
        raise DomainError("need a >= 1 and y >= 2")
    rhs = 2 * (y - 1) * m * m
    omega = 5
    if a * a * omega ** m > rhs * (omega - 1) ** 2:
        return None
    while a * a * (omega + 1) ** m <= rhs * omega ** 2:
        omega += 1
    return omega


def product_action_high_m(y_max: int, omega_cap: int = 200) -> EliminationReport:
    """Exhaust the product action case with 3 <= m <= 5 factors.

    For every (m, a, omega, y) inside the subdegree bound, the ratio
    r/(r,lambda) is pinned to m(omega-1)/a and the sieve runs at v = omega^m;
    the expected survivor set is empty.
    """
    if y_max > 10:
        raise DomainError("the search is calibrated for y <= 10")
    if omega_cap < 5:
        raise DomainError("omega_cap must be at least 5")
    rep = EliminationReport("product action, m in 3..5")
    tuples = 0
    for m in (3, 4, 5):
        for y in range(2, y_max + 1):
            a = 1
            while True:
                top = product_action_omega_bound(m, a, y)
                if top is None:
                    break
                if top > omega_cap:
                    rep.notes.append(f"omega capped at {omega_cap} for (m={m}, a={a}, y={y})")
                    top = omega_cap
                for omega in range(5, top + 1):
                    tuples += 1
                    target = m * (omega - 1)
                    if target % a:
                        rep.reject((m, a, omega, y), "m(omega-1)/a not an integer")
                        continue
                    box = SearchBox(omega ** m, y, y, ratio_equals=target // a)
                    hits = enumerate_for_v(box)
                    if hits:
                        rep.survivors.extend(hits)
                    else:
                        rep.reject((m, a, omega, y), "parameter sieve empty")
                a += 1
    rep.bounds["tuples_examined"] = tuples
    return rep


def _m2_candidate_omegas(y: int, a1: int) -> list[int]:
    """Finitely many omega compatible with integrality of lambda (or of b when
    the lambda condition degenerates to a congruence)."""
    # lambda(omega) = (p1*omega + p0) / (q1*omega + q0)
    p1, p0 = -a1 * a1, a1 * (2 * (y - 1) - a1)
    q1, q0 = 4 * (y - 1) - a1 * a1, -4 * (y - 1) - a1 * a1
    cands = linfrac_integer_arguments(p1, p0, q1, q0, lo=5)
    if cands is not None:
        return cands
    # degenerate: lambda is linear/constant, drive off b = v*r/k instead:
    # b = 4 omega^2 (omega-1)(p1 omega + p0) / (a1 q0 (a1 omega + a1 + 2))
    got = linear_divisor_arguments(_quartic(p1, p0), a1, a1 + 2, lo=5)
    if got is None:
        raise DomainError(
            f"no finite integrality condition for (y={y}, a1={a1})")
    return got


def _quartic(p1: int, p0: int) -> list[int]:
    """Coefficients of 4 w^2 (w - 1)(p1 w + p0), ascending."""
    # (w - 1)(p1 w + p0) = p1 w^2 + (p0 - p1) w - p0
    return [0, 0, -4 * p0, 4 * (p0 - p1), 4 * p1]


def product_action_m2_report(y: int, soc_table: dict[int, tuple[str, ...]] | None = None
                             ) -> EliminationReport:
    """Two-factor product action: solve the linear system symbolically in omega
    and keep the finitely many integral solutions.

    For each multiplier a1 with (8/3)(y-1) < a1^2 < 8(y-1) the identities
    k - 1 = a1(omega+1)/2, a1 r = 2 lambda (omega-1) and the quasi-symmetric
    identity express (k, r, lambda, b) as rational functions of omega; clearing
    denominators turns integrality into a divisor condition with finitely many
    omega, each verified exactly.
    """
    if not 2 <= y <= 10:
        raise DomainError("y must lie in 2..10")
    rep = EliminationReport(f"product action, m = 2, y = {y}")
    a1_values = [a1 for a1 in range(2, 12)
                 if 8 * (y - 1) < 3 * a1 * a1 and a1 * a1 < 8 * (y - 1)]
    rep.bounds["a1"] = a1_values
    for a1 in a1_values:
        omegas = _m2_candidate_omegas(y, a1)
        rep.bounds[f"omega_candidates_a1={a1}"] = omegas
        for omega in omegas:
            if (a1 * (omega + 1)) % 2:
                rep.reject((a1, omega), "k = a1(omega+1)/2 + 1 not an integer")
                continue
            k = a1 * (omega + 1) // 2 + 1
            num = a1 * (2 * (y - 1) - a1 * (omega + 1))
            den = 4 * (y - 1) * (omega - 1) - a1 * a1 * (omega + 1)
            if den == 0 or num % den:
                rep.reject((a1, omega), "lambda not an integer")
                continue
            lam = num // den
            if lam < 1:
                rep.reject((a1, omega), "lambda not positive")
                continue
            if (2 * lam * (omega - 1)) % a1:
                rep.reject((a1, omega), "r = 2 lambda (omega-1)/a1 not an integer")
                continue
            r = 2 * lam * (omega - 1) // a1
            v = omega * omega
            if (v * r) % k:
                rep.reject((a1, omega, v, r, k, lam), "b = vr/k not an integer")
                continue
            b = v * r // k
            cand = Candidate(DesignParams(v, b, r, k, lam), QsProfile(y))
            report = check_admissible(cand)
            cand = Candidate(cand.params, cand.profile, report.entries)
            if not report.passed:
                reasons = ", ".join(e.name for e in report.failures())
                rep.reject(cand.tuple, reasons)
                continue
            cand.validate()
            socs = (soc_table or {}).get(omega, ())
            rep.survivors.append(ProductActionRow(y, a1, omega, cand.params, socs))
    return rep


def product_action_m2(y: int, soc_table: dict[int, tuple[str, ...]] | None = None
                      ) -> list[ProductActionRow]:
    """Surviving rows of the two-factor product action case for one y."""
    return product_action_m2_report(y, soc_table).survivors


def product_socle_divisor_filter(t_order: int, out_order: int, omega: int,
                                 r: int) -> bool:
    """Block-stabilizer divisibility for the two-factor product action:
    r must divide 2 |T|^2 |Out(T)|^2 / omega^2.

    When omega^2 does not divide 2 |T|^2 |Out(T)|^2 the right side is not an
    integer and the condition is treated as failed.
    """
    total = 2 * t_order * t_order * out_order * out_order
    if total % (omega * omega):
        return False
    return total // (omega * omega) % r == 0


def alt_product_exclusion(a1: int, omega: int, lam: int) -> bool:
    """True ("excluded") iff 2 <= a1 < lambda <= omega - 2.

    For a natural alternating socle of degree omega the base-block geometry
    forces omega - 2 <= a1, so any row inside this bracket is contradictory.
    """
    if omega < 5:
        raise DomainError("omega must be at least 5")
    return 2 <= a1 < lam <= omega - 2
