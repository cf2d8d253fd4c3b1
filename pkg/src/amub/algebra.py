"""Finite fields F_{p^m}, their characters, and the Galois ring GR(4, m).

Field elements are canonical integer indices: the polynomial
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` is stored as ``sum(c_i * p**i)``.
Canonical element order is ascending index.  All arithmetic is table driven
(discrete log / antilog), so the vectorised methods accept numpy arrays.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPrime, NotPrimePower, TooLarge, TrivialCharacter, ZeroArgument

MAX_FIELD_ORDER = 2**20
MAX_RING_DEGREE = 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    out: dict[int, int] = {}
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, m),) = f.items()
    return p, m


def unit_root(k: int, n: int) -> complex:
    """exp(2 pi i k / n), built from the reduced angle so |z| == 1."""
    theta = 2.0 * math.pi * (k % n) / n
    return complex(math.cos(theta), math.sin(theta))


def unit_roots(k: np.ndarray, n: int) -> np.ndarray:
    theta = 2.0 * np.pi * (np.asarray(k) % n) / n
    return np.cos(theta) + 1j * np.sin(theta)


# -- polynomials over Z/nZ, coefficient lists low-to-high --------------------

def _poly_mul(a, b, n):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % n
    return out


def _poly_rem(a, mod, n):
    """Remainder of ``a`` modulo the monic polynomial ``mod`` over Z/nZ."""
    a = [x % n for x in a]
    dm = len(mod) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * mod[j]) % n
    out = a[:dm] + [0] * (dm - len(a))
    return out


def _poly_rem_field(a, b, p):
    """Remainder of ``a`` by an arbitrary nonzero ``b`` over F_p (p prime)."""
    a = [x % p for x in a]
    while len(b) > 1 and b[-1] % p == 0:
        b = b[:-1]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p) if p > 2 else 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return a[:db]


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of
    degree 1..deg/2."""
    m = len(coeffs) - 1
    for k in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not any(_poly_rem_field(list(coeffs), list(low) + [1], p)):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


def _poly_pow_mod(a, e, mod, n):
    result = [1] + [0] * (len(mod) - 2)
    base = _poly_rem(a, mod, n)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, n), mod, n)
        base = _poly_rem(_poly_mul(base, base, n), mod, n)
        e >>= 1
    return result


@dataclass(frozen=True, eq=False)
class Field:
    """The finite field F_q, q = p^m, with lookup tables.

    ``log[0]`` is -1; every other entry is the discrete log base ``generator``.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    generator: int
    digits: np.ndarray
    exp: np.ndarray
    log: np.ndarray
    traces: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, modulus={self.modulus}, generator={self.generator})"

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digits[x])

    def element(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _from_digits(self, dg: np.ndarray) -> np.ndarray:
        return dg @ (self.p ** np.arange(self.m, dtype=np.int64))

    def add(self, x, y):
        r = self._from_digits((self.digits[x] + self.digits[y]) % self.p)
        return int(r) if np.ndim(r) == 0 else r

    def neg(self, x):
        r = self._from_digits((-self.digits[x]) % self.p)
        return int(r) if np.ndim(r) == 0 else r

    def sub(self, x, y):
        r = self._from_digits((self.digits[x] - self.digits[y]) % self.p)
        return int(r) if np.ndim(r) == 0 else r

    def mul(self, x, y):
        x = np.asarray(x)
        y = np.asarray(y)
        r = np.where((x == 0) | (y == 0), 0,
                     self.exp[(self.log[x] + self.log[y]) % (self.q - 1)])
        return int(r) if r.ndim == 0 else r

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[x]) * e) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroArgument("0 has no inverse")
        return int(self.exp[(-int(self.log[x])) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)


@functools.lru_cache(maxsize=None)
def field_create(p: int, m: int = 1) -> Field:
    """Build F_{p^m} with the lexicographically smallest monic irreducible
    modulus (coefficients low-to-high) and the smallest primitive element."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise NotPrimePower(f"extension degree must be >= 1, got {m}")
    q = p**m
    if q > MAX_FIELD_ORDER:
        raise TooLarge(f"q = {q} exceeds {MAX_FIELD_ORDER}")

    modulus = _smallest_irreducible(p, m)
    powers = p ** np.arange(m, dtype=np.int64)
    idx = np.arange(q, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p

    def as_poly(x: int) -> list[int]:
        return [int(c) for c in digits[x]]

    one = [1] + [0] * (m - 1)
    odd_parts = [(q - 1) // r for r in factorize(q - 1)]
    generator = None
    for cand in range(1, q):
        if all(_poly_pow_mod(as_poly(cand), e, modulus, p) != one for e in odd_parts):
            generator = cand
            break
    if generator is None:
        raise AssertionError(f"no primitive element in F_{q}")

    # column i of mul_g holds generator * x^i reduced
    g = as_poly(generator)
    mul_g = np.array(
        [_poly_rem(_poly_mul(g, [0] * i + [1], p), modulus, p) for i in range(m)],
        dtype=np.int64,
    ).T
    perm = (((digits @ mul_g.T) % p) @ powers).tolist()
    exp = np.empty(q - 1, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = perm[x]
    if x != 1 or (q > 1 and np.any(log[1:] < 0)):
        raise AssertionError("generator does not have order q - 1")

    def fpow(x: int, e: int) -> int:
        return int(exp[(int(log[x]) * e) % (q - 1)]) if x else 0

    # Tr(x^i) = sum_k (x^i)^(p^k); the result lies in the prime field
    basis_traces = []
    for i in range(m):
        acc = np.zeros(m, dtype=np.int64)
        mono = p**i
        for k in range(m):
            acc = (acc + digits[fpow(mono, p**k)]) % p
        if np.any(acc[1:]):
            raise AssertionError("trace left the prime field")
        basis_traces.append(int(acc[0]))
    traces = (digits @ np.array(basis_traces, dtype=np.int64)) % p

    for arr in (digits, exp, log, traces):
        arr.setflags(write=False)
    return Field(p, m, modulus, generator, digits, exp, log, traces)


def trace(f: Field, x):
    """Absolute trace F_q -> F_p as an integer in 0..p-1."""
    r = f.traces[x]
    return int(r) if np.ndim(r) == 0 else r


def char_eval_additive(f: Field, a: int, x: int) -> complex:
    return unit_root(int(f.traces[f.mul(a, x)]), f.p)


def char_eval_multiplicative(f: Field, j: int, x: int) -> complex:
    if x == 0:
        raise ZeroArgument("multiplicative character evaluated at 0")
    return unit_root(j * int(f.log[x]), f.q - 1)


def additive_character(f: Field, a: int) -> np.ndarray:
    """lambda_a evaluated at every element, canonical order."""
    return unit_roots(f.traces[f.mul(a, np.arange(f.q))], f.p)


def multiplicative_character(f: Field, j: int) -> np.ndarray:
    """chi_j evaluated at the nonzero elements 1..q-1, canonical order."""
    return unit_roots(j * f.log[1:], f.q - 1)


def gauss_sum(f: Field, j: int, a: int) -> complex:
    """sum over x != 0 of chi_j(x) lambda_a(x), both characters nontrivial."""
    if j % (f.q - 1) == 0 or a == 0:
        raise TrivialCharacter("Gauss sum needs nontrivial characters")
    return complex(np.sum(multiplicative_character(f, j) * additive_character(f, a)[1:]))


def jacobi_sum(f: Field, j: int, k: int) -> complex:
    """sum over x not in {0, 1} of chi_j(x) chi_k(1 - x)."""
    xs = np.arange(2, f.q)
    one_minus = f.sub(np.ones_like(xs), xs)
    return complex(np.sum(unit_roots(j * f.log[xs], f.q - 1)
                          * unit_roots(k * f.log[one_minus], f.q - 1)))


# -- Galois ring GR(4, m) ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class GaloisRing:
    """GR(4, m) = Z_4[x] / (modulus), elements as coefficient tuples mod 4.

    ``teichmuller[k]`` is the Teichmuller lift of the F_{2^m} element with
    canonical index ``k``; so ``teichmuller[0] == 0``.
    """

    m: int
    modulus: tuple[int, ...]
    teichmuller: tuple[tuple[int, ...], ...]
    basis_traces: tuple[int, ...]

    @property
    def order(self) -> int:
        return 4**self.m

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.m

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.m - 1)

    def add(self, r, s):
        return tuple((a + b) % 4 for a, b in zip(r, s))

    def sub(self, r, s):
        return tuple((a - b) % 4 for a, b in zip(r, s))

    def scale(self, c: int, r):
        return tuple((c * a) % 4 for a in r)

    def mul(self, r, s):
        return tuple(_poly_rem(_poly_mul(list(r), list(s), 4), list(self.modulus), 4))

    def pow(self, r, e: int):
        return tuple(_poly_pow_mod(list(r), e, list(self.modulus), 4))

    def elements(self):
        return itertools.product(range(4), repeat=self.m)

    def lift(self, k: int):
        """Teichmuller representative of the F_{2^m} element with index k."""
        return self.teichmuller[k]

    def reduce(self, r) -> int:
        """Canonical F_{2^m} index of r mod 2."""
        return sum((c % 2) << i for i, c in enumerate(r))

    def decompose(self, r):
        """Unique (a, b) in T x T with r = a + 2b."""
        a = self.teichmuller[self.reduce(r)]
        diff = self.sub(r, a)
        b = self.teichmuller[sum(((c // 2) % 2) << i for i, c in enumerate(diff))]
        return a, b

    def frobenius(self, r):
        a, b = self.decompose(r)
        return self.add(self.mul(a, a), self.scale(2, self.mul(b, b)))

    def trace(self, r) -> int:
        """Generalised trace: sum of the m Frobenius iterates, an element of Z_4."""
        acc = self.zero()
        cur = tuple(r)
        for _ in range(self.m):
            acc = self.add(acc, cur)
            cur = self.frobenius(cur)
        if any(acc[1:]):
            raise AssertionError("Galois ring trace left Z_4")
        return acc[0]

    def trace_linear(self, r) -> int:
        """Same trace via Z_4-linearity on the monomial basis."""
        return sum(c * t for c, t in zip(r, self.basis_traces)) % 4


def hensel_lift(f2_modulus: tuple[int, ...]) -> tuple[int, ...]:
    """Graeffe lift of a monic F_2 polynomial to the basic monic Z_4
    polynomial whose roots are Teichmuller elements."""
    m = len(f2_modulus) - 1
    even = [c if i % 2 == 0 else 0 for i, c in enumerate(f2_modulus)]
    odd = [c if i % 2 == 1 else 0 for i, c in enumerate(f2_modulus)]
    e2 = _poly_mul(even, even, 4)
    o2 = _poly_mul(odd, odd, 4)
    sign = 1 if m % 2 == 0 else -1
    diff = [sign * (a - b) % 4 for a, b in zip(e2, o2)]
    # diff only has even-degree terms: substitute x^2 -> x
    lifted = tuple(diff[2 * i] for i in range(m + 1))
    if lifted[-1] != 1 or any((a - b) % 2 for a, b in zip(lifted, f2_modulus)):
        raise AssertionError("Hensel lift does not reduce to the F_2 modulus")
    return lifted


@functools.lru_cache(maxsize=None)
def galois_ring_create(m: int) -> GaloisRing:
    if m < 1:
        raise NotPrimePower(f"degree must be >= 1, got {m}")
    if m > MAX_RING_DEGREE:
        raise TooLarge(f"GR(4, {m}) exceeds degree {MAX_RING_DEGREE}")
    base = field_create(2, m)
    modulus = hensel_lift(base.modulus)
    mod = list(modulus)

    x = [0, 1]
    if tuple(_poly_pow_mod(x, 2**m, mod, 4)) != tuple(_poly_rem(x, mod, 4)):
        raise AssertionError("lifted modulus root is not Teichmuller")

    teich = []
    for k in range(2**m):
        r = [(k >> i) & 1 for i in range(m)]
        for _ in range(m):
            r = _poly_rem(_poly_mul(r, r, 4), mod, 4)
        teich.append(tuple(r))
    if len(set(teich)) != 2**m:
        raise AssertionError("Teichmuller set has wrong size")

    ring = GaloisRing(m, modulus, tuple(teich), ())
    basis_traces = tuple(ring.trace(tuple(1 if j == i else 0 for j in range(m))) for i in range(m))
    return GaloisRing(m, modulus, tuple(teich), basis_traces)
