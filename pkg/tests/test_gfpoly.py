import numpy as np
import pytest

from gonal import gfpoly
from gonal.gfpoly import ONE, ZERO, add, degree, div_rem, equal_degree_factors, gcd, mul, sub, trim


def test_trim_and_degree():
    assert trim((0, 0, 0)) == ()
    assert trim((1, 2, 0)) == (1, 2)
    assert degree(ZERO) == -1
    assert degree((3,)) == 0
    assert degree((0, 0, 1)) == 2


def test_ring_ops_mod_3():
    f = (1, 2, 1)  # 1 + 2x + x^2
    g = (2, 1)  # 2 + x
    assert add(f, g, 3) == (0, 0, 1)
    assert sub(f, g, 3) == (2, 1, 1)
    assert mul(g, g, 3) == (1, 1, 1)  # (x+2)^2 = x^2 + 4x + 4


def test_div_rem_roundtrip():
    q = 5
    f = (3, 1, 4, 1, 2)
    g = (2, 0, 1)
    quo, rem = div_rem(f, g, q)
    assert degree(rem) < degree(g)
    assert add(mul(quo, g, q), rem, q) == f


def test_gcd_of_shared_factor():
    q = 2
    shared = (1, 1, 1)  # x^2 + x + 1
    f = mul(shared, (1, 1), q)
    g = mul(shared, (0, 1), q)
    assert gcd(f, g, q) == shared


def test_pow_mod():
    # x^4 mod (x^2 + x + 1) over F_2: x^2 = x+1, x^4 = (x+1)^2 = x^2+1 = x.
    assert gfpoly.pow_mod((0, 1), 4, (1, 1, 1), 2) == (0, 1)


def test_eval_at_matrix_annihilates_companion():
    # Companion of x^2 + x + 1 over F_2 satisfies its polynomial.
    m = np.array([[0, 1], [1, 1]], dtype=np.int64)
    assert not gfpoly.eval_at_matrix((1, 1, 1), m, 2).any()
    assert np.array_equal(gfpoly.eval_at_matrix(ONE, m, 2), np.eye(2, dtype=np.int64))


@pytest.mark.parametrize(
    "f,d,q,expected",
    [
        # 1 + x + x^2 + x^3 + x^4 is irreducible over F_2.
        ((1, 1, 1, 1, 1), 4, 2, [(1, 1, 1, 1, 1)]),
        # 1 + x + x^2 is irreducible over F_2.
        ((1, 1, 1), 2, 2, [(1, 1, 1)]),
        # 1 + ... + x^6 over F_2 splits into the two cubics.
        ((1, 1, 1, 1, 1, 1, 1), 3, 2, [(1, 0, 1, 1), (1, 1, 0, 1)]),
    ],
)
def test_equal_degree_factors_known(f, d, q, expected):
    assert equal_degree_factors(f, d, q) == expected


def test_equal_degree_factors_rejects_bad_degree():
    with pytest.raises(ValueError):
        equal_degree_factors((1, 1, 1, 1, 1), 3, 2)  # degree 4 not a multiple of 3


@pytest.mark.parametrize("p,q,d", [(13, 3, 3), (11, 3, 5), (7, 3, 6), (13, 5, 4), (11, 2, 10)])
def test_equal_degree_factors_rebuild(p, q, d):
    phi = (1,) * p
    factors = equal_degree_factors(phi, d, q)
    assert len(factors) == (p - 1) // d
    assert all(degree(f) == d for f in factors)
    assert len(set(factors)) == len(factors)
    prod = ONE
    for f in factors:
        prod = mul(prod, f, q)
    assert prod == phi
