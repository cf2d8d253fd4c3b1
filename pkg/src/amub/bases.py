"""Orthonormal basis collections and their certificates.

A collection is stored as one array of shape ``(n, d, d)``: basis, vector,
coordinate.  Complex collections use ``complex128``, real ones ``float64``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import welch_bound, welch_set_bound
from .errors import (
    AlreadyReal,
    BadParameters,
    DimensionMismatch,
    FieldMismatch,
    NotOrthonormal,
    SingleBasis,
    TooFewVectors,
)

DEFAULT_TOL = 1e-9


def tolerance(d: int, base: float = DEFAULT_TOL) -> float:
    """tau(d) = base * max(1, sqrt(d))."""
    return base * max(1.0, math.sqrt(d))


def _tag_of(v: np.ndarray) -> str:
    return "C" if np.iscomplexobj(v) else "R"


def inner(v, u):
    """(v, u) = sum_i v_i conj(u_i)."""
    v = np.asarray(v)
    u = np.asarray(u)
    if _tag_of(v) != _tag_of(u):
        raise FieldMismatch("cannot pair a complex vector with a real one")
    if v.shape != u.shape:
        raise DimensionMismatch(f"shapes {v.shape} and {u.shape} differ")
    r = np.vdot(u, v)
    return complex(r) if np.iscomplexobj(r) else float(r)


def is_unit(v, tol: float | None = None) -> bool:
    v = np.asarray(v)
    tol = tolerance(v.shape[-1]) if tol is None else tol
    return abs(float(np.real(np.vdot(v, v))) - 1.0) <= tol


def orthonormality_error(basis: np.ndarray) -> float:
    gram = basis @ basis.conj().T
    return float(np.max(np.abs(gram - np.eye(basis.shape[0]))))


@dataclass(frozen=True, eq=False)
class BasisCollection:
    field: str
    vectors: np.ndarray
    construction: dict = field(default_factory=dict)
    tol_base: float = DEFAULT_TOL

    def __post_init__(self):
        if self.field not in ("C", "R"):
            raise BadParameters(f"field tag must be 'C' or 'R', got {self.field!r}")
        dtype = np.complex128 if self.field == "C" else np.float64
        if self.field == "R" and np.iscomplexobj(self.vectors):
            raise FieldMismatch("real collection given complex entries")
        vecs = np.array(self.vectors, dtype=dtype)
        if vecs.ndim != 3 or vecs.shape[1] != vecs.shape[2] or vecs.shape[0] < 1:
            raise DimensionMismatch(f"expected shape (n, d, d), got {vecs.shape}")
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)
        for k, basis in enumerate(vecs):
            err = orthonormality_error(basis)
            if err > self.tau:
                raise NotOrthonormal(f"basis {k} deviates from orthonormal by {err:.3e}")

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def d(self) -> int:
        return self.vectors.shape[1]

    @property
    def tau(self) -> float:
        return tolerance(self.d, self.tol_base)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k) -> np.ndarray:
        return self.vectors[k]

    def all_vectors(self) -> np.ndarray:
        return self.vectors.reshape(self.n * self.d, self.d)


@dataclass(frozen=True)
class WelchRow:
    t: int
    bound: Fraction
    gamma_power: float
    slack: float

    @property
    def bound_float(self) -> float:
        return float(self.bound)


@dataclass(frozen=True)
class GammaReport:
    field: str
    d: int
    n: int
    gamma: float
    witness: tuple[tuple[int, int], tuple[int, int]]
    min_cross: float
    welch: dict
    design_sums: dict
    design: dict
    verdict: str
    tol: float

    @property
    def c(self) -> float:
        """gamma * sqrt(d), the constant of a c/sqrt(d) approximate MUB."""
        return self.gamma * math.sqrt(self.d)

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "dimension": self.d,
            "basis_count": self.n,
            "gamma": self.gamma,
            "c": self.c,
            "min_cross": self.min_cross,
            "witness": [list(self.witness[0]), list(self.witness[1])],
            "welch": {
                str(t): {
                    "bound": f"{row.bound.numerator}/{row.bound.denominator}",
                    "bound_float": row.bound_float,
                    "gamma_power": row.gamma_power,
                    "slack": row.slack,
                }
                for t, row in sorted(self.welch.items())
            },
            "design": {
                str(t): {"lhs": lhs, "rhs": rhs, "equal": self.design[t]}
                for t, (lhs, rhs) in sorted(self.design_sums.items())
            },
            "verdict": self.verdict,
            "tolerance": self.tol,
        }

    def to_text(self) -> str:
        (i, a), (j, b) = self.witness
        lines = [
            f"field        {self.field}",
            f"dimension    {self.d}",
            f"bases        {self.n}",
            f"gamma        {self.gamma:.10f}",
            f"1/sqrt(d)    {1 / math.sqrt(self.d):.10f}",
            f"c            {self.c:.4f}",
            f"witness      basis {i} vector {a} / basis {j} vector {b}",
        ]
        for t, row in sorted(self.welch.items()):
            lines.append(f"welch t={t}    bound {row.bound} ({row.bound_float:.10f})"
                         f"  gamma^{2 * t} {row.gamma_power:.10f}  slack {row.slack:.3e}")
        for t, (lhs, rhs) in sorted(self.design_sums.items()):
            flag = "yes" if self.design[t] else "no"
            lines.append(f"{t}-design     {flag}  (lhs {lhs:.12f}, rhs {rhs:.12f})")
        lines.append(f"verdict      {self.verdict}")
        return "\n".join(lines)


def _scan(coll: BasisCollection):
    """One pass over the Gram matrix in basis-row blocks."""
    n, d = coll.n, coll.d
    allv = coll.all_vectors()
    conj_all = allv.conj().T
    gamma, min_cross = 0.0, math.inf
    block_max = []
    sums = {1: 0.0, 2: 0.0}
    for i in range(n):
        g = np.abs(coll.vectors[i] @ conj_all)
        sq = g * g
        sums[1] += float(np.sum(sq))
        sums[2] += float(np.sum(sq * sq))
        cross = g[:, (i + 1) * d:]
        if cross.size:
            block_max.append(float(cross.max()))
            gamma = max(gamma, block_max[-1])
            min_cross = min(min_cross, float(cross.min()))
        else:
            block_max.append(-1.0)
    return gamma, min_cross, block_max, sums


def _witness(coll: BasisCollection, gamma: float, block_max, tau: float):
    for i, bm in enumerate(block_max):
        if bm < gamma - tau:
            continue
        rest = coll.vectors[i + 1:]  # (n-i-1, d, d)
        vals = np.abs(np.einsum("ak,jbk->jab", coll.vectors[i], rest.conj()))
        hits = np.argwhere(vals >= gamma - tau)
        j, a, b = (int(x) for x in hits[0])
        return (i, a), (i + 1 + j, b)
    raise AssertionError("gamma has no witness")


def gamma(coll: BasisCollection, tol: float | None = None) -> GammaReport:
    """Maximum cross-basis |inner product| with Welch table and verdict."""
    if coll.n < 2:
        raise SingleBasis("gamma needs at least two bases")
    tau = coll.tau if tol is None else tol
    n, d = coll.n, coll.d
    g, min_cross, block_max, sums = _scan(coll)
    witness = _witness(coll, g, block_max, tau)
    welch = {}
    for t in (1, 2):
        w = welch_bound(d, n, t, coll.field)
        welch[t] = WelchRow(t, w, g ** (2 * t), g ** (2 * t) - float(w))
    total = float((n * d) ** 2)
    design_sums = {t: (sums[t] / total, float(welch_set_bound(d, t, coll.field))) for t in (1, 2)}
    design = {t: abs(lhs - rhs) <= tau for t, (lhs, rhs) in design_sums.items()}
    target = 1.0 / math.sqrt(d)
    if abs(g - target) <= tau and abs(min_cross - target) <= tau:
        verdict = "MUB"
    elif g < 1.0 - tau:
        verdict = "AMUB"
    else:
        verdict = "plain"
    return GammaReport(coll.field, d, n, g, witness, min_cross, welch, design_sums,
                       design, verdict, tau)


def welch_collection_sum(vectors, t: int, tag: str | None = None) -> tuple[float, float]:
    """Both sides of the Welch inequality for a finite set of unit vectors."""
    vecs = np.asarray(vectors)
    N, d = vecs.shape
    if N <= d:
        raise TooFewVectors(f"need more than d = {d} vectors, got {N}")
    tag = _tag_of(vecs) if tag is None else tag
    g = np.abs(vecs @ vecs.conj().T) ** 2
    lhs = float(np.sum(g**t)) / N**2
    return lhs, float(welch_set_bound(d, t, tag))


def is_spherical_design(vectors, t: int, tol: float | None = None) -> bool:
    lhs, rhs = welch_collection_sum(vectors, t)
    tol = tolerance(np.asarray(vectors).shape[1]) if tol is None else tol
    return abs(lhs - rhs) <= tol


def realify_vector(v) -> tuple[np.ndarray, np.ndarray]:
    """v -> (Re v1, Im v1, ...), (-Im v1, Re v1, ...) in R^{2d}."""
    v = np.asarray(v, dtype=np.complex128)
    v1 = np.empty(2 * v.shape[-1])
    v2 = np.empty(2 * v.shape[-1])
    v1[0::2], v1[1::2] = v.real, v.imag
    v2[0::2], v2[1::2] = -v.imag, v.real
    return v1, v2


def realify_collection(coll: BasisCollection) -> BasisCollection:
    """Each complex basis a_1..a_d becomes a_1', a_1'', a_2', a_2'', ... in R^{2d}."""
    if coll.field != "C":
        raise AlreadyReal("collection is already real")
    n, d = coll.n, coll.d
    v = coll.vectors
    out = np.empty((n, 2 * d, 2 * d))
    out[:, 0::2, 0::2] = v.real
    out[:, 0::2, 1::2] = v.imag
    out[:, 1::2, 0::2] = -v.imag
    out[:, 1::2, 1::2] = v.real
    return BasisCollection("R", out, {"id": "realify", "params": {"inner": coll.construction}},
                           coll.tol_base)


def tensor_collections(first: BasisCollection, second: BasisCollection) -> BasisCollection:
    """Kronecker products of matching bases; keeps min(n1, n2) bases."""
    if first.field != second.field:
        raise FieldMismatch("tensor factors must share a field tag")
    k = min(first.n, second.n)
    d1, d2 = first.d, second.d
    out = np.einsum("kai,kbj->kabij", first.vectors[:k], second.vectors[:k])
    out = out.reshape(k, d1 * d2, d1 * d2)
    return BasisCollection(first.field, out,
                           {"id": "tensor", "params": {"left": first.construction,
                                                       "right": second.construction}},
                           first.tol_base)


def apply_unitary(coll: BasisCollection, u: np.ndarray) -> BasisCollection:
    """Right-multiply every vector by the same unitary / orthogonal matrix."""
    return BasisCollection(coll.field, coll.vectors @ u, coll.construction, coll.tol_base)
