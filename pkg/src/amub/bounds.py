"""Closed-form bounds: Welch bounds on gamma, real-MUB caps, Delta(m, n)."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .algebra import factorize
from .errors import BadParameters, BadRange


def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def welch_set_bound(d: int, t: int, tag: str) -> Fraction:
    """Lower bound on (1/N^2) sum |(u, v)|^{2t} over a unit-vector set in F^d."""
    if tag == "C":
        return Fraction(1, math.comb(d + t - 1, t))
    if tag == "R":
        return Fraction(_double_factorial(2 * t - 1), math.prod(d + 2 * k for k in range(t)))
    raise BadParameters(f"field tag must be 'C' or 'R', got {tag!r}")


def welch_bound(d: int, n: int, t: int, tag: str) -> Fraction:
    """W_F(d, n; t): exact lower bound on gamma^{2t} for n orthonormal bases."""
    if d < 2 or n < 2 or t < 1:
        raise BadParameters(f"need d >= 2, n >= 2, t >= 1; got d={d}, n={n}, t={t}")
    return n * welch_set_bound(d, t, tag) / (n - 1) - Fraction(1, d * (n - 1))


class RealCap(NamedTuple):
    cap: int
    reason: str


def real_mub_upper_bound(d: int) -> RealCap:
    """Largest possible size of a real MUB in R^d."""
    if d < 2:
        raise BadParameters("d must be >= 2")
    if d == 2:
        return RealCap(2, "d = 2")
    if d % 4:
        return RealCap(1, "4 does not divide d")
    m = d // 4
    if math.isqrt(m) ** 2 != m:
        return RealCap(2, "d = 4m with m not a square")
    s = math.isqrt(m)
    if s % 2:
        return RealCap(3, "d = 4m^2 with m odd")
    return RealCap(d // 2 + 1, "Welch t = 2 cap d/2 + 1")


def complex_mub_lower_bound(d: int) -> int:
    """Size of the tensor-product MUB: min over prime-power factors of p^e + 1."""
    if d < 2:
        raise BadParameters("d must be >= 2")
    return min(p**e + 1 for p, e in factorize(d).items())


def delta_bound(m: int, n: int) -> int:
    """max gcd(4m, l) over 1 <= l <= n - 2."""
    if m < 1 or n < 3:
        raise BadRange(f"need m >= 1 and n >= 3, got m={m}, n={n}")
    return max(math.gcd(4 * m, l) for l in range(1, n - 1))
