import math

import numpy as np
import pytest

from amub.bases import gamma
from amub.constructions import (
    amub_elliptic,
    amub_gauss,
    amub_jacobi,
    build,
    hadamard_pair,
    mub_prime_power,
    real_amub_from_complex,
)
from amub.errors import BadParameters, NotPrimePower, TooLarge, TooSmall

# frozen measured gamma of the Jacobi-sum collection
JACOBI_GAMMA = {
    4: 1.0000000000000002,
    5: 0.7071067811865476,
    7: 0.600925212577332,
    8: 0.5345224838248488,
    9: 0.5,
    11: 0.43148619895368506,
    13: 0.381881307912987,
}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_mub_prime_power(q):
    coll = mub_prime_power(q)
    rep = gamma(coll)
    assert coll.n == q + 1
    assert rep.verdict == "MUB"
    assert rep.design == {1: True, 2: True}
    assert np.allclose(coll.vectors[-1], np.eye(q))


def test_mub_limits():
    with pytest.raises(NotPrimePower):
        mub_prime_power(6)
    with pytest.raises(TooLarge):
        mub_prime_power(343)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13])
def test_gauss_gamma(q):
    rep = gamma(amub_gauss(q))
    assert rep.gamma == pytest.approx(math.sqrt(q) / (q - 1), abs=1e-9)
    assert rep.n == q + 1


@pytest.mark.parametrize("q", sorted(JACOBI_GAMMA))
def test_jacobi_gamma_frozen(q):
    coll = amub_jacobi(q)
    assert (coll.n, coll.d) == (q, q - 1)
    assert gamma(coll).gamma == pytest.approx(JACOBI_GAMMA[q], abs=1e-12)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 32])
def test_jacobi_gamma_within_shifted_bound(q):
    # cross products are (J + 1) / d with |J| = sqrt(q), so gamma <= (sqrt(q) + 1) / d
    d = q - 1
    assert gamma(amub_jacobi(q)).gamma <= (math.sqrt(q) + 1) / d + 1e-9


def test_jacobi_needs_q4():
    with pytest.raises(TooSmall):
        amub_jacobi(3)


def test_elliptic_example():
    coll = amub_elliptic(5, 1, 1, 2)
    assert (coll.d, coll.n) == (9, 5)
    assert gamma(coll).gamma == pytest.approx(0.5524870171670337, abs=1e-12)


@pytest.mark.parametrize("m", [2, 3])
def test_elliptic_bound(m):
    coll = amub_elliptic(7, 0, 3, m)
    d = coll.d
    assert coll.n == 7 ** (m - 1)
    assert gamma(coll).gamma <= 2 * m * math.sqrt(7) / d + 1e-9


def test_hadamard_pair():
    coll = hadamard_pair(k=3)
    rep = gamma(coll)
    assert coll.field == "R" and rep.verdict == "MUB"
    assert gamma(hadamard_pair(q=11)).verdict == "MUB"
    with pytest.raises(BadParameters):
        hadamard_pair()


def test_build_round_trip_specs():
    for coll in (amub_gauss(7), mub_prime_power(4), amub_elliptic(5, 1, 1, 2),
                 real_amub_from_complex({"id": "amub-jacobi", "params": {"q": 5}})):
        again = build(coll.construction)
        assert np.array_equal(again.vectors, coll.vectors)
    with pytest.raises(BadParameters):
        build({"id": "nope", "params": {}})
    with pytest.raises(BadParameters):
        real_amub_from_complex({"id": "hadamard-pair", "params": {"k": 2}})
