import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from amub.bases import (
    BasisCollection,
    apply_unitary,
    gamma,
    inner,
    is_spherical_design,
    realify_collection,
    realify_vector,
    tensor_collections,
    tolerance,
    welch_collection_sum,
)
from amub.bounds import (
    complex_mub_lower_bound,
    delta_bound,
    real_mub_upper_bound,
    welch_bound,
    welch_set_bound,
)
from amub.constructions import amub_gauss, mub_prime_power, standard_collection
from amub.errors import (
    AlreadyReal,
    BadParameters,
    BadRange,
    DimensionMismatch,
    FieldMismatch,
    NotOrthonormal,
    SingleBasis,
    TooFewVectors,
)


def random_unitary(rng, d, real=False):
    z = rng.standard_normal((d, d)) if real else rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def random_collection(seed, d, n, real=False):
    rng = np.random.default_rng(seed)
    return BasisCollection("R" if real else "C", np.stack([random_unitary(rng, d, real).T for _ in range(n)]))


def test_tolerance():
    assert tolerance(1) == 1e-9
    assert tolerance(16) == pytest.approx(4e-9)


def test_inner_convention():
    v = np.array([1j, 0])
    u = np.array([1, 0], dtype=complex)
    assert inner(v, u) == 1j  # linear in the first slot
    with pytest.raises(FieldMismatch):
        inner(v, np.array([1.0, 0.0]))
    with pytest.raises(DimensionMismatch):
        inner(v, np.ones(3, dtype=complex))


def test_collection_validation():
    with pytest.raises(NotOrthonormal):
        BasisCollection("C", np.ones((1, 2, 2)))
    with pytest.raises(DimensionMismatch):
        BasisCollection("C", np.ones((1, 2, 3)))
    with pytest.raises(BadParameters):
        BasisCollection("Q", np.eye(2)[None])
    with pytest.raises(FieldMismatch):
        BasisCollection("R", np.eye(2, dtype=complex)[None])


def test_gamma_single_basis():
    with pytest.raises(SingleBasis):
        gamma(standard_collection(3))


def test_gamma_plain_verdict():
    coll = BasisCollection("C", np.stack([np.eye(3), np.eye(3)]))
    rep = gamma(coll)
    assert rep.verdict == "plain" and rep.gamma == pytest.approx(1.0)
    assert rep.witness == ((0, 0), (1, 0))


def test_gauss_report_fields():
    rep = gamma(amub_gauss(5))
    assert rep.gamma == pytest.approx(math.sqrt(5) / 4, abs=1e-12)
    assert rep.c == pytest.approx(1.118033988749895, abs=1e-12)
    assert rep.verdict == "AMUB"
    assert rep.witness == ((0, 0), (1, 1))
    assert rep.welch[1].bound == Fraction(1, 4)
    assert rep.welch[2].bound == Fraction(7, 100)
    assert rep.design == {1: True, 2: False}


@given(st.integers(0, 10**6), st.integers(2, 6), st.integers(2, 4), st.booleans())
def test_gamma_unitary_invariant(seed, d, n, real):
    coll = random_collection(seed, d, n, real)
    u = random_unitary(np.random.default_rng(seed + 1), d, real)
    g1 = gamma(coll).gamma
    g2 = gamma(apply_unitary(coll, u)).gamma
    assert g1 == pytest.approx(g2, abs=1e-9)


@given(st.integers(0, 10**6), st.integers(2, 6), st.integers(2, 4), st.booleans())
def test_gamma_respects_welch(seed, d, n, real):
    coll = random_collection(seed, d, n, real)
    rep = gamma(coll)
    for t in (1, 2):
        assert rep.gamma ** (2 * t) >= float(rep.welch[t].bound) - 1e-9


@given(st.integers(2, 500), st.integers(2, 600), st.sampled_from("CR"))
def test_welch_t1_is_inverse_dimension(d, n, tag):
    assert welch_bound(d, n, 1, tag) == Fraction(1, d)


def test_welch_set_bound_values():
    assert welch_set_bound(4, 2, "C") == Fraction(1, 10)
    assert welch_set_bound(4, 2, "R") == Fraction(3, 24)
    with pytest.raises(BadParameters):
        welch_bound(1, 2, 1, "C")


def test_real_mub_caps():
    got = {d: real_mub_upper_bound(d).cap for d in (2, 6, 12, 16, 36, 64)}
    assert got == {2: 2, 6: 1, 12: 2, 16: 9, 36: 3, 64: 33}


def test_complex_lower_bound_and_delta():
    assert complex_mub_lower_bound(6) == 3
    assert complex_mub_lower_bound(12) == 4
    assert delta_bound(5, 6) == 4
    with pytest.raises(BadRange):
        delta_bound(5, 2)


def test_welch_collection_sum_and_design():
    vecs = mub_prime_power(3).all_vectors()
    assert is_spherical_design(vecs, 2)
    lhs, rhs = welch_collection_sum(vecs, 1)
    assert lhs == pytest.approx(rhs)
    with pytest.raises(TooFewVectors):
        welch_collection_sum(np.eye(3), 1)


@given(st.integers(0, 10**6), st.integers(1, 8))
def test_realify_identity(seed, d):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    u = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    v1, v2 = realify_vector(v)
    u1, u2 = realify_vector(u)
    assert abs(np.vdot(u, v)) ** 2 == pytest.approx(np.dot(v1, u1) ** 2 + np.dot(v1, u2) ** 2, rel=1e-9, abs=1e-9)
    assert np.dot(v1, v2) == pytest.approx(0.0, abs=1e-9)
    assert np.dot(v1, v1) == pytest.approx(np.vdot(v, v).real)


def test_realify_collection_order_and_gamma():
    coll = amub_gauss(5)
    real = realify_collection(coll)
    assert real.d == 8 and real.n == coll.n
    v1, v2 = realify_vector(coll.vectors[2, 1])
    assert np.allclose(real.vectors[2, 2], v1) and np.allclose(real.vectors[2, 3], v2)
    assert gamma(real).gamma <= gamma(coll).gamma + 1e-12
    with pytest.raises(AlreadyReal):
        realify_collection(real)


def test_tensor():
    coll = tensor_collections(mub_prime_power(2), mub_prime_power(3))
    assert (coll.n, coll.d) == (3, 6)
    rep = gamma(coll)
    assert rep.verdict == "MUB"
    with pytest.raises(FieldMismatch):
        tensor_collections(mub_prime_power(2), realify_collection(mub_prime_power(2)))
