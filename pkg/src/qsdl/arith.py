"""Small exact-arithmetic helpers shared by the sieve and case scans.

Everything here works on arbitrary-precision Python ints; nothing is
allowed to round through floats.
"""

from __future__ import annotations

from math import gcd, isqrt


def divisors(n: int) -> list[int]:
    """All positive divisors of n > 0, ascending."""
    if n <= 0:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    """Trial-division primality, fine for the small catalog degrees used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def poly_eval(coeffs: list[int], x: int) -> int:
    """Evaluate a polynomial given as [c0, c1, ...] (ascending powers)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def linear_divisor_arguments(
    coeffs: list[int], a: int, b: int, lo: int, hi: int | None = None
) -> list[int] | None:
    """Integers x >= lo with (a*x + b) dividing P(x), P given by ``coeffs``.

    Returns a superset of the exact solution set (callers re-verify each
    candidate), or None when a*x + b divides P(x) as a polynomial, in which
    case every x qualifies and a different constraint must bound the search.

    Method: a^deg * P(x) = Q(x) * (a*x + b) + c with Q integral and
    c = a^deg * P(-b/a) an integer, so any solution has (a*x + b) | c.
    """
    if a == 0:
        raise ValueError("linear divisor must be non-constant")
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    # c = a^deg * P(-b/a), exact since every term clears the denominator
    c = 0
    for i, cf in enumerate(coeffs[: deg + 1]):
        c += cf * (-b) ** i * a ** (deg - i)
    if c == 0:
        return None
    out = []
    for d in divisors(abs(c)):
        for s in (d, -d):
            num = s - b
            if num % a:
                continue
            x = num // a
            if x < lo or (hi is not None and x > hi):
                continue
            if poly_eval(coeffs, x) % (a * x + b) == 0:
                out.append(x)
    return sorted(set(out))


def linfrac_integer_arguments(
    p1: int, p0: int, q1: int, q0: int, lo: int, hi: int | None = None
) -> list[int] | None:
    """Integers x >= lo where (p1*x + p0)/(q1*x + q0) is a (nonzero-den) integer.

    Returns None when q1 == 0 or the fraction is a constant: the condition is
    then a congruence with infinitely many solutions and the caller must fall
    back to a different integrality constraint.
    """
    if q1 == 0:
        return None
    if p1 * q0 == p0 * q1:  # constant fraction
        return None
    cands = linear_divisor_arguments([p0, p1], q1, q0, lo, hi)
    if cands is None:
        return None
    out = []
    for x in cands:
        den = q1 * x + q0
        if den != 0 and (p1 * x + p0) % den == 0:
            out.append(x)
    return out
