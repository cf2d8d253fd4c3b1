"""Exit criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import math
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from amub.bases import gamma, realify_collection, realify_vector
from amub.bounds import delta_bound, real_mub_upper_bound, welch_bound
from amub.bundle import compare_certificate, dumps_bundle, read_bundle, write_bundle
from amub.combinatorics import (
    ORDER3_L1,
    ORDER3_L2,
    LatinSquare,
    family_is_mols,
    hadamard_paley,
    hadamard_sylvester,
    mols_check,
    mols_macneish,
    mols_prime_power,
)
from amub.constructions import amub_elliptic, amub_gauss, amub_jacobi, build, hadamard_pair, mub_prime_power
from amub.elliptic import Curve, curve_char_sum, enumerate_group, sigma_m_enumerate
from amub.errors import BoundViolated, SingularCurve
from amub.reports import table1_rows

MUB_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
GAUSS_Q = [3, 5, 7, 9, 11, 13]
JACOBI_Q = [4, 5, 7, 8, 9, 11]
EC_P = [5, 7, 11, 13]
EC_M = 2


def _valid_curves(p):
    for a in range(p):
        for b in range(p):
            try:
                c = Curve(p, a, b)
            except SingularCurve:
                continue
            if EC_M <= enumerate_group(c).d - 1:
                yield c


def brute_gamma(coll) -> float:
    g = 0.0
    for i in range(coll.n):
        for j in range(i + 1, coll.n):
            for v in coll.vectors[i]:
                for u in coll.vectors[j]:
                    g = max(g, abs(np.vdot(u, v)))
    return g


def criterion_1():
    bad = []
    for q in MUB_Q:
        coll = mub_prime_power(q)
        rep = gamma(coll)
        target = 1 / math.sqrt(q)
        dev = max(abs(rep.gamma - target), abs(rep.min_cross - target))
        sums_ok = all(abs(lhs - rhs) <= 1e-8 for lhs, rhs in rep.design_sums.values())
        if coll.n != q + 1 or dev > 1e-9 or not sums_ok:
            bad.append(q)
    return not bad, f"failing q: {bad}" if bad else f"q in {MUB_Q}"


def criterion_2():
    bad = []
    for q in GAUSS_Q:
        d = q - 1
        coll = amub_gauss(q)
        g = gamma(coll).gamma
        oracle = brute_gamma(coll)
        if g > math.sqrt(1 / d + 1 / d**2) + 1e-9 or abs(oracle - math.sqrt(q) / d) > 1e-9 \
                or abs(g - oracle) > 1e-9:
            bad.append(q)
    return not bad, f"failing q: {bad}" if bad else f"q in {GAUSS_Q}"


def criterion_3():
    bad = []
    for q in JACOBI_Q:
        d = q - 1
        coll = amub_jacobi(q)  # construction validates orthonormality of every B_chi
        g = gamma(coll).gamma
        bound = math.sqrt(1 / d + (2 * math.sqrt(d + 1) + 1) / d**2)
        if g > bound + 1e-9:
            bad.append(f"q={q}: {g:.6f} > {bound:.6f}")
    return not bad, "; ".join(bad) if bad else f"q in {JACOBI_Q}"


def criterion_4():
    window, size, chain, asym, sums = [], [], [], [], []
    count = 0
    for p in EC_P:
        lo, hi = p - 2 * math.sqrt(p), p + 2 * math.sqrt(p)
        for c in _valid_curves(p):
            count += 1
            G = enumerate_group(c)
            d = G.d
            tag = f"({p},{c.a},{c.b})"
            if not lo <= d <= hi:
                window.append(f"{tag} d={d}")
            coll = amub_elliptic(p, c.a, c.b, EC_M)
            if coll.n != p ** (EC_M - 1):
                size.append(tag)
            g = gamma(coll).gamma
            if g > 2 * EC_M * math.sqrt(p) / d + 1e-9:
                chain.append(tag)
            if g > 2 * EC_M / math.sqrt(d) + 2 * EC_M / d:
                asym.append(tag)
            for f in sigma_m_enumerate(c, EC_M, d):
                for chi in G.characters():
                    if f.is_constant and chi == (0, 0):
                        continue
                    try:
                        s = curve_char_sum(G, f, chi)
                    except BoundViolated:
                        sums.append(tag)
                        continue
                    if f.is_constant and abs(s) > 1e-9 * d:
                        sums.append(tag)
    parts = {"window": window, "n": size, "chain bound": chain, "asymptotic bound": asym,
             "character sums": sums}
    failed = {k: v for k, v in parts.items() if v}
    detail = f"{count} curves; " + ("; ".join(f"{k} fails for {len(v)}: {', '.join(v)}"
                                               for k, v in failed.items()) if failed else "all parts hold")
    return not failed, detail


def _criteria_1_to_4_collections():
    out = [mub_prime_power(q) for q in MUB_Q]
    out += [amub_gauss(q) for q in GAUSS_Q]
    out += [amub_jacobi(q) for q in JACOBI_Q]
    for p in EC_P:
        out += [amub_elliptic(p, c.a, c.b, EC_M) for c in _valid_curves(p)]
    return out


def criterion_5():
    rng = np.random.default_rng(20261018)
    colls = _criteria_1_to_4_collections()
    bad = []
    for coll in colls:
        real = realify_collection(coll)  # validates orthonormality in dimension 2d
        if real.d != 2 * coll.d or gamma(real).gamma > gamma(coll).gamma + 1e-12:
            bad.append(str(coll.construction))
    worst = 0.0
    for _ in range(1000):
        coll = colls[rng.integers(len(colls))]
        v = coll.all_vectors()[rng.integers(coll.n * coll.d)]
        u = coll.all_vectors()[rng.integers(coll.n * coll.d)]
        v1, _ = realify_vector(v)
        u1, u2 = realify_vector(u)
        worst = max(worst, abs(abs(np.vdot(u, v)) ** 2 - (v1 @ u1) ** 2 - (v1 @ u2) ** 2))
    ok = not bad and worst <= 1e-9
    return ok, f"{len(colls)} collections, identity error {worst:.1e}" + (f"; failing {bad}" if bad else "")


def criterion_6():
    rows = [r for r in table1_rows(13, 13) if r.generated]
    bad = [f"({r.row}) {r.params}: {r.measured:.6f} > {r.bound:.6f}" for r in rows if r.status != "ok"]
    return not bad, f"{len(rows)} generated rows" + (f"; violated: {'; '.join(bad)}" if bad else "")


def criterion_7():
    ok = mols_check(LatinSquare(ORDER3_L1), LatinSquare(ORDER3_L2))
    for q in (2, 3, 4, 5, 7, 8, 9):
        fam = mols_prime_power(q)
        ok &= len(fam) == q - 1 and family_is_mols(fam)
    mac = mols_macneish(mols_prime_power(4), mols_prime_power(3))
    ok &= len(mac) == 2 and mac[0].order == 12 and family_is_mols(mac)
    mats = [hadamard_sylvester(k).entries for k in range(7)]
    mats += [hadamard_paley(q).entries for q in (3, 7, 11, 19, 23)]
    for h in mats:
        d = h.shape[0]
        ok &= bool(np.array_equal(h @ h.T, d * np.eye(d, dtype=np.int64)))
    return ok, "MOLS q<=9, MacNeish 12, Sylvester k<=6, Paley q<=23"


def criterion_8():
    rng = np.random.default_rng(8)
    ok = True
    for _ in range(100):
        d = int(rng.integers(2, 1000))
        n = int(rng.integers(2, d + 2))
        tag = "C" if rng.integers(2) else "R"
        ok &= welch_bound(d, n, 1, tag) == Fraction(1, d)
    caps = {d: real_mub_upper_bound(d).cap for d in (6, 12, 36, 16, 2)}
    ok &= caps == {6: 1, 12: 2, 36: 3, 16: 9, 2: 2}
    ok &= delta_bound(5, 6) == 4
    return ok, f"caps {caps}, delta(5,6)={delta_bound(5, 6)}"


def criterion_9():
    colls = [mub_prime_power(4), mub_prime_power(9), amub_gauss(7), amub_jacobi(8),
             amub_elliptic(7, 0, 3, 2), hadamard_pair(k=3), hadamard_pair(q=11),
             realify_collection(amub_gauss(5))]
    bad = []
    with tempfile.TemporaryDirectory() as tmp:
        for k, coll in enumerate(colls):
            path = Path(tmp) / f"b{k}.json"
            write_bundle(coll, path)
            first = path.read_bytes()
            again = build(coll.construction)
            write_bundle(again, path)
            loaded, cert = read_bundle(path)
            if path.read_bytes() != first or compare_certificate(cert, gamma(loaded)):
                bad.append(coll.construction["id"])
            if dumps_bundle(loaded, gamma(loaded)).encode() != first:
                bad.append(coll.construction["id"] + " (reload)")
    return not bad, f"{len(colls)} bundles" + (f"; failing {bad}" if bad else "")


CRITERIA = [
    (1, "prime-power MUB suite", criterion_1, 10),
    (2, "Gauss-sum AMUB", criterion_2, 5),
    (3, "Jacobi-sum AMUB", criterion_3, 5),
    (4, "elliptic-curve AMUB", criterion_4, 60),
    (5, "realification suite", criterion_5, 30),
    (6, "Table 1 generated rows", criterion_6, 90),
    (7, "combinatorics", criterion_7, 5),
    (8, "bound calculators", criterion_8, 1),
    (9, "round-trip determinism", criterion_9, 10),
]


def run_criterion(fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    in_time = elapsed < limit
    return ok and in_time, f"{detail} [{elapsed:.2f} s / limit {limit} s{'' if in_time else ', TOO SLOW'}]"


def format_line(num, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  criterion {num}: {name}: {detail}"


@pytest.mark.acceptance
@pytest.mark.parametrize("num,name,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, limit, acceptance_log):
    ok, detail = run_criterion(fn, limit)
    line = format_line(num, name, ok, detail)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    for num, name, fn, limit in CRITERIA:
        ok, detail = run_criterion(fn, limit)
        print(format_line(num, name, ok, detail), flush=True)
