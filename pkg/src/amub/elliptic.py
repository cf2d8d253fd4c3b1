"""Elliptic curves y^2 = x^3 + ax + b over F_p at desk scale.

Points are ``(A, B)`` tuples; the point at infinity is ``INF`` (``None``).
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import factorize, is_prime, unit_root, unit_roots
from .errors import (
    BadDegreeRange,
    BadPrime,
    BoundViolated,
    PointNotOnCurve,
    SingularCurve,
    TooLarge,
    TrivialCharacter,
)

INF = None
MAX_CURVE_PRIME = 10000


@dataclass(frozen=True)
class Curve:
    p: int
    a: int
    b: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 5:
            raise BadPrime(f"need a prime p >= 5, got {self.p}")
        if self.p > MAX_CURVE_PRIME:
            raise TooLarge(f"p = {self.p} exceeds {MAX_CURVE_PRIME}")
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise SingularCurve(f"4a^3 + 27b^2 = 0 mod {self.p} for a={self.a}, b={self.b}")

    def rhs(self, x: int) -> int:
        return (x**3 + self.a * x + self.b) % self.p

    def contains(self, P) -> bool:
        if P is INF:
            return True
        A, B = P
        return 0 <= A < self.p and 0 <= B < self.p and (B * B - self.rhs(A)) % self.p == 0

    def add(self, P, Q):
        """Chord-and-tangent addition."""
        if P is INF:
            return Q
        if Q is INF:
            return P
        p = self.p
        (x1, y1), (x2, y2) = P, Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return INF
            s = (3 * x1 * x1 + self.a) * pow(2 * y1, p - 2, p) % p
        else:
            s = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
        x3 = (s * s - x1 - x2) % p
        return (x3, (s * (x1 - x3) - y1) % p)

    def neg(self, P):
        if P is INF:
            return INF
        return (P[0], (-P[1]) % self.p)

    def mul(self, k: int, P):
        result, addend = INF, P
        if k < 0:
            k, addend = -k, self.neg(P)
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result


def curve_create(p: int, a: int, b: int) -> Curve:
    return Curve(p, a, b)


def curve_points(c: Curve) -> list:
    """Affine points sorted by (A, B), then INF."""
    p = c.p
    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    pts = [(A, B) for A in range(p) for B in sorted(roots.get(c.rhs(A), []))]
    return pts + [INF]


def hasse_weil_window(p: int) -> tuple[float, float]:
    """Hasse's interval |d - (p + 1)| <= 2 sqrt(p) for d = |E(F_p)|."""
    r = 2.0 * math.sqrt(p)
    return p + 1 - r, p + 1 + r


def shifted_window(p: int) -> tuple[float, float]:
    """The interval p - 2 sqrt(p) <= d <= p + 2 sqrt(p), without the +1.

    Its upper end is one short of Hasse's; curves with d = p + 1 + t and
    2 sqrt(p) - 1 < t <= 2 sqrt(p) fall outside it.
    """
    r = 2.0 * math.sqrt(p)
    return p - r, p + r


@dataclass(frozen=True, eq=False)
class CurveGroup:
    """E(F_p) with invariant factors n1 | n2 and generators g1, g2."""

    curve: Curve
    points: tuple
    n1: int
    n2: int
    g1: object
    g2: object
    coords: dict = field(repr=False)
    index: dict = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.points)

    def characters(self) -> list[tuple[int, int]]:
        return [(s1, s2) for s1 in range(self.n1) for s2 in range(self.n2)]

    @functools.cached_property
    def character_table(self) -> np.ndarray:
        """Row k is character k (``characters()`` order) on every point."""
        e = np.array([self.coords[P] for P in self.points], dtype=np.int64)
        ch = np.array(self.characters(), dtype=np.int64)
        # zeta_{n1}^{s1 e1} zeta_{n2}^{s2 e2} = zeta_{n2}^{(n2/n1) s1 e1 + s2 e2}
        expo = (self.n2 // self.n1) * np.outer(ch[:, 0], e[:, 0]) + np.outer(ch[:, 1], e[:, 1])
        table = unit_roots(expo, self.n2)
        table.setflags(write=False)
        return table


def _order(c: Curve, P, d: int) -> int:
    n = d
    for r in factorize(d):
        while n % r == 0 and c.mul(n // r, P) is INF:
            n //= r
    return n


@functools.lru_cache(maxsize=None)
def enumerate_group(c: Curve) -> CurveGroup:
    pts = curve_points(c)
    d = len(pts)
    lo, hi = hasse_weil_window(c.p)
    if not lo <= d <= hi:
        raise AssertionError(f"point count {d} outside the Hasse-Weil window")
    orders = {P: _order(c, P, d) for P in pts}
    n2 = math.lcm(*orders.values())
    n1 = d // n2
    g2 = next(P for P in pts if orders[P] == n2)
    span2 = set()
    Q = INF
    for _ in range(n2):
        span2.add(Q)
        Q = c.add(Q, g2)
    g1 = INF
    if n1 > 1:
        for P in pts:
            if orders[P] != n1:
                continue
            Q, ok = P, True
            for _ in range(n1 - 1):
                if Q in span2:
                    ok = False
                    break
                Q = c.add(Q, P)
            if ok:
                g1 = P
                break
        else:
            raise AssertionError("no complement for the maximal cyclic subgroup")
    coords = {}
    row = INF
    for e1 in range(n1):
        Q = row
        for e2 in range(n2):
            coords[Q] = (e1, e2)
            Q = c.add(Q, g2)
        row = c.add(row, g1)
    if len(coords) != d or set(coords) != set(pts):
        raise AssertionError("coordinate map is not a bijection")
    index = {P: k for k, P in enumerate(pts)}
    return CurveGroup(c, tuple(pts), n1, n2, g1, g2, coords, index)


def curve_char_eval(G: CurveGroup, chi: tuple[int, int], P) -> complex:
    if P not in G.index:
        raise PointNotOnCurve(f"{P} is not on {G.curve}")
    e1, e2 = G.coords[P]
    return unit_root(chi[0] * e1, G.n1) * unit_root(chi[1] * e2, G.n2)


@dataclass(frozen=True)
class CurveFunction:
    """f = u(x) + v(x) y with coefficient tuples low-to-high."""

    u: tuple[int, ...]
    v: tuple[int, ...] = ()

    @staticmethod
    def _deg(poly) -> int:
        nz = [i for i, c in enumerate(poly) if c]
        return nz[-1] if nz else -1

    @property
    def deg(self) -> int:
        """max(2 deg u, 3 + 2 deg v); 0 for constants."""
        du, dv = self._deg(self.u), self._deg(self.v)
        terms = []
        if du >= 0:
            terms.append(2 * du)
        if dv >= 0:
            terms.append(3 + 2 * dv)
        return max(terms, default=0)

    @property
    def is_constant(self) -> bool:
        return self._deg(self.u) <= 0 and self._deg(self.v) < 0

    def __call__(self, P, p: int) -> int:
        return function_eval(self, P, p)


def function_eval(f: CurveFunction, P, p: int) -> int:
    if P is INF:
        return 0
    A, B = P
    u = sum(c * pow(A, i, p) for i, c in enumerate(f.u))
    v = sum(c * pow(A, i, p) for i, c in enumerate(f.v))
    return (u + v * B) % p


def sigma_m_enumerate(c: Curve, m: int, d: int | None = None) -> list[CurveFunction]:
    """All f = u + v y with Deg(f) <= m and u(0) = 0; p^(m-1) of them."""
    if d is None:
        d = len(curve_points(c))
    if not 2 <= m <= d - 1:
        raise BadDegreeRange(f"need 2 <= m <= {d - 1}, got {m}")
    nu = m // 2
    nv = (m - 3) // 2 + 1 if m >= 3 else 0
    out = []
    for coeffs in itertools.product(range(c.p), repeat=nu + nv):
        out.append(CurveFunction((0,) + coeffs[:nu], coeffs[nu:]))
    return out


def function_values(G: CurveGroup, f: CurveFunction) -> np.ndarray:
    return np.array([function_eval(f, P, G.curve.p) for P in G.points], dtype=np.int64)


def curve_char_sum(G: CurveGroup, f: CurveFunction, chi: tuple[int, int]) -> complex:
    """sum over P of zeta_p^{f(P)} chi(P), checked against 2 Deg(f) sqrt(p)."""
    k = G.characters().index((chi[0] % G.n1, chi[1] % G.n2))
    trivial = k == 0
    if f.is_constant and trivial:
        raise TrivialCharacter("constant function with the trivial character")
    table = G.character_table[k]
    s = complex(np.sum(unit_roots(function_values(G, f), G.curve.p) * table))
    if not f.is_constant:
        bound = 2 * f.deg * math.sqrt(G.curve.p)
        if abs(s) > bound + 1e-9 * max(1.0, bound):
            raise BoundViolated(f"|S| = {abs(s)} exceeds {bound} for {f}, chi={chi}")
    return s
