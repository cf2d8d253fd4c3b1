"""Latin squares, MOLS families and Hadamard matrices."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import factorize, field_create, is_prime, prime_power
from .errors import (
    BadOrder,
    EmptyFamily,
    NotHadamard,
    NotHadamardInput,
    OrderMismatch,
    TooLarge,
)

# A pair of orthogonal Latin squares of order 3 used as a reference example.
ORDER3_L1 = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
ORDER3_L2 = ((1, 2, 3), (3, 1, 2), (2, 3, 1))


@dataclass(frozen=True)
class LatinSquare:
    """d x d grid over the symbols 1..d."""

    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(int(x) for x in row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        d = len(grid)
        symbols = set(range(1, d + 1))
        if any(len(row) != d or set(row) != symbols for row in grid):
            raise ValueError("every row must be a permutation of 1..d")
        if any({grid[i][j] for i in range(d)} != symbols for j in range(d)):
            raise ValueError("every column must be a permutation of 1..d")

    @property
    def order(self) -> int:
        return len(self.grid)

    def __getitem__(self, ij):
        i, j = ij
        return self.grid[i][j]


def mols_check(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff the superposition of ``a`` and ``b`` hits all d^2 ordered pairs."""
    if a.order != b.order:
        raise OrderMismatch(f"orders {a.order} and {b.order} differ")
    d = a.order
    pairs = {(a.grid[i][j], b.grid[i][j]) for i in range(d) for j in range(d)}
    return len(pairs) == d * d


def family_is_mols(family) -> bool:
    return all(mols_check(family[i], family[j])
               for i in range(len(family)) for j in range(i + 1, len(family)))


def mols_prime_power(q: int) -> list[LatinSquare]:
    """The q - 1 squares L_a(i, j) = a*i + j over F_q, a != 0."""
    p, m = prime_power(q)
    f = field_create(p, m)
    idx = np.arange(q)
    out = []
    for a in range(1, q):
        ai = f.mul(a, idx)
        grid = f.add(ai[:, None], idx[None, :])
        out.append(LatinSquare(tuple(tuple(int(x) + 1 for x in row) for row in grid)))
    return out


def mols_macneish(first: list[LatinSquare], second: list[LatinSquare]) -> list[LatinSquare]:
    """Direct-product family of order d1*d2 and size min(len(first), len(second))."""
    if not first or not second:
        raise EmptyFamily("both families must be non-empty")
    d1, d2 = first[0].order, second[0].order
    out = []
    for la, lb in zip(first, second):
        grid = [[0] * (d1 * d2) for _ in range(d1 * d2)]
        for i1 in range(d1):
            for i2 in range(d2):
                for j1 in range(d1):
                    for j2 in range(d2):
                        e1, e2 = la.grid[i1][j1], lb.grid[i2][j2]
                        grid[i1 * d2 + i2][j1 * d2 + j2] = (e1 - 1) * d2 + e2
        out.append(LatinSquare(tuple(tuple(r) for r in grid)))
    return out


def mols_lower_bound(d: int) -> int:
    """Guaranteed number of MOLS of order d from prime-power factors."""
    if d < 2:
        raise BadOrder("order must be >= 2")
    bound = min(p**e - 1 for p, e in factorize(d).items())
    if d in (2, 6):
        return 1
    if d % 4 == 2:
        return max(bound, 2)
    return bound


# -- Hadamard matrices -------------------------------------------------------

def _gram(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float64 products of integer matrices are exact while every partial sum
    # stays below 2**53, which holds for all orders accepted here
    return np.rint(a.astype(np.float64) @ b.astype(np.float64).T).astype(np.int64)


def is_hadamard(h: np.ndarray) -> bool:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    if not np.all(np.abs(h) == 1):
        return False
    d = h.shape[0]
    return bool(np.array_equal(_gram(h, h), d * np.eye(d, dtype=np.int64)))


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    entries: np.ndarray

    def __post_init__(self):
        h = np.array(self.entries, dtype=np.int64)
        if not is_hadamard(h):
            raise NotHadamard("entries are not +-1 or H H^T != d I")
        h.setflags(write=False)
        object.__setattr__(self, "entries", h)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


H2 = np.array([[1, 1], [1, -1]], dtype=np.int64)


def hadamard_sylvester(k: int) -> HadamardMatrix:
    if not 0 <= k <= 14:
        raise TooLarge(f"Sylvester order 2^{k} outside 2^0..2^14")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.kron(H2, h)
    if k > 12:
        # checking H H^T directly costs O(d^3); H2 tensor powers are
        # Hadamard by (A x B)(A x B)^T = AA^T x BB^T
        obj = object.__new__(HadamardMatrix)
        h.setflags(write=False)
        object.__setattr__(obj, "entries", h)
        return obj
    return HadamardMatrix(h)


def quadratic_character(x: int, q: int) -> int:
    x %= q
    if x == 0:
        return 0
    return 1 if pow(x, (q - 1) // 2, q) == 1 else -1


def hadamard_paley(q: int) -> HadamardMatrix:
    """Paley type-I matrix of order q + 1 for a prime q = 3 mod 4."""
    if not is_prime(q) or q % 4 != 3 or q > 4095:
        raise BadOrder(f"Paley I needs a prime q = 3 mod 4, q <= 4095; got {q}")
    chi = np.array([quadratic_character(k, q) for k in range(q)], dtype=np.int64)
    i = np.arange(q)
    jacobsthal = chi[(i[None, :] - i[:, None]) % q]
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jacobsthal
    return HadamardMatrix(np.eye(q + 1, dtype=np.int64) + s)


def real_mub_hadamard_criterion(*matrices) -> bool:
    """Whether H_1..H_{n-1} yield a real MUB of size n together with the
    standard basis: every H_i H_j^T / sqrt(d) must again be Hadamard."""
    if not matrices:
        raise NotHadamardInput("need at least one matrix")
    hs = []
    for h in matrices:
        arr = h.entries if isinstance(h, HadamardMatrix) else np.asarray(h)
        if not is_hadamard(arr):
            raise NotHadamardInput("input is not a Hadamard matrix")
        hs.append(arr.astype(np.int64))
    d = hs[0].shape[0]
    if any(h.shape[0] != d for h in hs):
        raise OrderMismatch("all matrices must share one order")
    if len(hs) == 1:
        return True
    s = math.isqrt(d)
    if s * s != d:
        return False
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            prod = _gram(hs[i], hs[j])
            if not np.all(np.abs(prod) == s):
                return False
            if not is_hadamard(prod // s):
                return False
    return True
