"""Builders for the character-sum, elliptic-curve and Hadamard families.

Every builder returns a :class:`BasisCollection` whose ``construction``
field (``{"id": ..., "params": {...}}``) is enough to rebuild it with
:func:`build`.  The standard basis is always appended last.
"""
from __future__ import annotations

import math

import numpy as np

from .algebra import field_create, galois_ring_create, prime_power, unit_roots
from .bases import DEFAULT_TOL, BasisCollection, realify_collection, tensor_collections
from .combinatorics import HadamardMatrix, hadamard_paley, hadamard_sylvester
from .elliptic import curve_create, enumerate_group, function_values, sigma_m_enumerate
from .errors import BadParameters, TooLarge, TooSmall

MAX_MUB_Q = 256
MAX_EC_BASES = 2048


def standard_basis(d: int, tag: str = "C") -> np.ndarray:
    if d < 1:
        raise BadParameters("d must be >= 1")
    return np.eye(d, dtype=np.complex128 if tag == "C" else np.float64)


def standard_collection(d: int, tag: str = "C") -> BasisCollection:
    return BasisCollection(tag, standard_basis(d, tag)[None], _prov("standard", d=d, field=tag))


def _prov(cid: str, **params) -> dict:
    return {"id": cid, "params": params}


def _with_standard(bases: list[np.ndarray], d: int) -> np.ndarray:
    return np.stack(bases + [standard_basis(d)])


def mub_prime_power(q: int) -> BasisCollection:
    """q + 1 mutually unbiased bases of C^q."""
    p, m = prime_power(q)
    if q > MAX_MUB_Q:
        raise TooLarge(f"q = {q} exceeds {MAX_MUB_Q}")
    scale = 1.0 / math.sqrt(q)
    bases = []
    if p == 2:
        ring = galois_ring_create(m)
        T = ring.teichmuller
        tt = np.array([[ring.trace_linear(ring.mul(s, x)) for x in T] for s in T], dtype=np.int64)
        for a in range(q):
            # tr((a + 2b) x) = tr(ax) + 2 tr(bx)
            bases.append(unit_roots(tt[a][None, :] + 2 * tt, 4) * scale)
    else:
        f = field_create(p, m)
        x = np.arange(q)
        tr_bx = f.traces[f.mul(x[:, None], x[None, :])]
        x_sq = f.mul(x, x)
        for a in range(q):
            tr_ax2 = f.traces[f.mul(a, x_sq)]
            bases.append(unit_roots(tr_ax2[None, :] + tr_bx, p) * scale)
    return BasisCollection("C", _with_standard(bases, q), _prov("mub-pp", q=q))


def amub_gauss(q: int) -> BasisCollection:
    """Bases B_lambda = {lambda(x) chi(x) / sqrt(q-1)} over F_q*, plus B*."""
    p, m = prime_power(q)
    if q < 3:
        raise TooSmall("need q >= 3")
    f = field_create(p, m)
    d = q - 1
    x = np.arange(1, q)
    chi = unit_roots(np.outer(np.arange(d), f.log[x]), d)  # row j is chi_j
    bases = []
    for a in range(q):
        lam = unit_roots(f.traces[f.mul(a, x)], p)
        bases.append(chi * lam[None, :] / math.sqrt(d))
    return BasisCollection("C", _with_standard(bases, d), _prov("amub-gauss", q=q))


def amub_jacobi(q: int) -> BasisCollection:
    """Bases B_chi = {(chi(x) chi'(1-x))_{x != 0,1}, 1) / sqrt(q-1)}, plus B*."""
    p, m = prime_power(q)
    if q < 4:
        raise TooSmall("need q >= 4")
    f = field_create(p, m)
    d = q - 1
    x = np.arange(2, q)
    one_minus = f.sub(np.ones_like(x), x)
    j = np.arange(d)
    chi_x = unit_roots(np.outer(j, f.log[x]), d)
    chi_1mx = unit_roots(np.outer(j, f.log[one_minus]), d)
    bases = []
    for jj in range(d):
        body = chi_x[jj][None, :] * chi_1mx
        bases.append(np.hstack([body, np.ones((d, 1))]) / math.sqrt(d))
    return BasisCollection("C", _with_standard(bases, d), _prov("amub-jacobi", q=q))


def amub_elliptic(p: int, a: int, b: int, m: int) -> BasisCollection:
    """One basis B_f per f in Sigma_m, vectors zeta_p^{f(P)} chi(P) / sqrt(d)."""
    curve = curve_create(p, a, b)
    group = enumerate_group(curve)
    d = group.d
    funcs = sigma_m_enumerate(curve, m, d)
    if len(funcs) > MAX_EC_BASES:
        raise TooLarge(f"p^(m-1) = {len(funcs)} exceeds {MAX_EC_BASES}")
    table = group.character_table / math.sqrt(d)
    bases = [table * unit_roots(function_values(group, f), p)[None, :] for f in funcs]
    return BasisCollection("C", np.stack(bases),
                           _prov("amub-ec", p=p, a=curve.a, b=curve.b, m=m))


def real_pair_from_hadamard(h, params: dict | None = None) -> BasisCollection:
    """{rows of H / sqrt(d), B*}: an unbiased pair in R^d."""
    entries = h.entries if isinstance(h, HadamardMatrix) else HadamardMatrix(h).entries
    d = entries.shape[0]
    vecs = np.stack([entries / math.sqrt(d), np.eye(d)])
    return BasisCollection("R", vecs, _prov("hadamard-pair", **(params or {"order": d})))


def hadamard_pair(k: int | None = None, q: int | None = None) -> BasisCollection:
    if (k is None) == (q is None):
        raise BadParameters("give exactly one of k (Sylvester) or q (Paley)")
    if k is not None:
        return real_pair_from_hadamard(hadamard_sylvester(k), {"k": k})
    return real_pair_from_hadamard(hadamard_paley(q), {"q": q})


BUILDERS = {
    "standard": lambda d, field="C": standard_collection(d, field),
    "mub-pp": mub_prime_power,
    "amub-gauss": amub_gauss,
    "amub-jacobi": amub_jacobi,
    "amub-ec": amub_elliptic,
    "hadamard-pair": hadamard_pair,
}

COMPLEX_FAMILIES = ("mub-pp", "amub-gauss", "amub-jacobi", "amub-ec")


def build(spec: dict, tol_base: float = DEFAULT_TOL) -> BasisCollection:
    """Rebuild a collection from its construction record."""
    cid = spec["id"]
    params = dict(spec.get("params", {}))
    if cid == "realify":
        out = realify_collection(build(params["inner"], tol_base))
    elif cid == "tensor":
        out = tensor_collections(build(params["left"], tol_base), build(params["right"], tol_base))
    elif cid in BUILDERS:
        out = BUILDERS[cid](**params)
    else:
        raise BadParameters(f"unknown construction id {cid!r}")
    if tol_base != out.tol_base:
        out = BasisCollection(out.field, out.vectors, out.construction, tol_base)
    return out


def real_amub_from_complex(spec: dict) -> BasisCollection:
    """Realified version of one of the complex builders."""
    if spec.get("id") not in COMPLEX_FAMILIES:
        raise BadParameters(f"{spec.get('id')!r} is not a complex family")
    return realify_collection(build(spec))

