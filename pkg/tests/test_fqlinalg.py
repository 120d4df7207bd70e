import itertools

import numpy as np
import pytest

from gonal.errors import AmbientMismatchError, InvalidParamsError
from gonal.fqlinalg import (
    FqMatrix,
    Subspace,
    contains,
    intersect,
    iter_subspace_bases,
    kernel,
    rref,
)


def test_rref_identity_fixed():
    m = FqMatrix(np.eye(3, dtype=int), 2)
    red, rank = rref(m)
    assert red == m
    assert rank == 3


def test_rref_zero_fixed():
    m = FqMatrix(np.zeros((2, 4), dtype=int), 3)
    red, rank = rref(m)
    assert red == m
    assert rank == 0


def test_rref_dependent_rows():
    # Third row is the sum of the first two over F_2.
    m = FqMatrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 2)
    _, rank = rref(m)
    assert rank == 2


def test_rref_invariant_under_row_operations():
    rng = np.random.default_rng(2047)
    for q in (2, 3, 5):
        for _ in range(25):
            rows, cols = rng.integers(1, 6, size=2)
            a = rng.integers(0, q, size=(rows, cols))
            m = FqMatrix(a, q)
            # Apply a random invertible row operation: composition of swaps,
            # scalings, and additions.
            b = a.copy()
            for _ in range(10):
                op = rng.integers(0, 3)
                i, j = rng.integers(0, rows, size=2)
                if op == 0 and i != j:
                    b[[i, j]] = b[[j, i]]
                elif op == 1:
                    b[i] = (b[i] * rng.integers(1, q)) % q
                elif op == 2 and i != j:
                    b[i] = (b[i] + rng.integers(0, q) * b[j]) % q
            assert rref(m)[0] == rref(FqMatrix(b, q))[0]


def test_kernel_zero_row_is_full_space():
    s = kernel(FqMatrix(np.zeros((1, 4), dtype=int), 2))
    assert s == Subspace.full(4, 2)
    assert s.dim == 4


def test_kernel_coordinate_hyperplane():
    s = kernel(FqMatrix([[1, 0, 0, 0]], 2))
    assert s.dim == 3
    expected = Subspace([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 4, 2)
    assert s == expected


def test_kernel_sum_functional_mod_3():
    s = kernel(FqMatrix([[1, 1, 1, 1]], 3))
    assert s.dim == 3
    for row in s.basis_array:
        assert int(row.sum()) % 3 == 0


def test_rank_nullity_random():
    rng = np.random.default_rng(7)
    for q in (2, 3, 5):
        for _ in range(30):
            rows, cols = rng.integers(1, 7, size=2)
            m = FqMatrix(rng.integers(0, q, size=(rows, cols)), q)
            _, rank = rref(m)
            assert kernel(m).dim + rank == cols


def test_intersect_idempotent():
    a = Subspace([[1, 0, 1, 0], [0, 1, 1, 1]], 4, 3)
    assert intersect(a, a) == a


def test_intersect_coordinate_hyperplanes():
    a = kernel(FqMatrix([[1, 0, 0, 0]], 2))
    b = kernel(FqMatrix([[0, 1, 0, 0]], 2))
    meet = intersect(a, b)
    assert meet.dim == 2
    assert meet == Subspace([[0, 0, 1, 0], [0, 0, 0, 1]], 4, 2)


def test_intersect_mismatch_raises():
    a = Subspace.full(3, 2)
    b = Subspace.full(4, 2)
    c = Subspace.full(3, 3)
    with pytest.raises(AmbientMismatchError):
        intersect(a, b)
    with pytest.raises(AmbientMismatchError):
        intersect(a, c)


def test_contains_basics():
    s = Subspace([[1, 0, 1, 0]], 4, 2)
    assert contains(s, [0, 0, 0, 0])
    assert contains(s, [1, 0, 1, 0])
    assert not contains(s, [1, 0, 1, 1])
    assert contains(Subspace.full(4, 2), [1, 1, 0, 1])


def test_contains_mismatch_raises():
    s = Subspace([[1, 0, 1, 0]], 4, 2)
    with pytest.raises(AmbientMismatchError):
        contains(s, [1, 0, 1])


def _all_vectors(n, q):
    return [np.array(v, dtype=np.int64) for v in itertools.product(range(q), repeat=n)]


@pytest.mark.parametrize("q,n", [(2, 4), (2, 6), (3, 3), (3, 4)])
def test_intersection_is_largest_common_subspace(q, n):
    rng = np.random.default_rng(11)
    vectors = _all_vectors(n, q)
    for _ in range(20):
        ka, kb = rng.integers(1, n, size=2)
        a = Subspace(rng.integers(0, q, size=(ka, n)), n, q)
        b = Subspace(rng.integers(0, q, size=(kb, n)), n, q)
        meet = intersect(a, b)
        for v in vectors:
            assert meet.contains(v) == (a.contains(v) and b.contains(v))


def _hyperplanes(n, q):
    return [Subspace(b, n, q) for b in iter_subspace_bases(n, n - 1, q)]


@pytest.mark.parametrize("q,n", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_two_hyperplanes_meet_in_codimension_two(q, n):
    planes = _hyperplanes(n, q)
    assert len(planes) == (q**n - 1) // (q - 1)
    for a, b in itertools.combinations(planes, 2):
        meet = intersect(a, b)
        assert meet.dim == n - 2
        # Any u in b, not in a, generates a transversal {0, u, ..., (q-1)u}
        # both of a in the full space and of (a meet b) in b.
        found = False
        for u in b.vectors():
            if a.contains(u):
                continue
            found = True
            multiples = [(j * u) % q for j in range(q)]
            cosets_full = {tuple(_reduce_to_coset(a, w)) for w in multiples}
            assert len(cosets_full) == q
            cosets_meet = {tuple(_reduce_to_coset(meet, w)) for w in multiples}
            assert len(cosets_meet) == q
            assert all(b.contains(w) for w in multiples)
            break  # one witness per pair keeps the n = 4 runs quick
        assert found


def _reduce_to_coset(space, v):
    v = np.array(v, dtype=np.int64) % space.modulus
    for row in space.basis_array:
        pc = int(np.nonzero(row)[0][0])
        if v[pc]:
            v = (v - v[pc] * row) % space.modulus
    return v


def test_subspace_value_semantics():
    a = Subspace([[1, 1, 0], [0, 1, 1]], 3, 2)
    b = Subspace([[1, 0, 1], [0, 1, 1]], 3, 2)  # same row space
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_modulus_must_be_prime():
    with pytest.raises(InvalidParamsError):
        FqMatrix([[1]], 4)
    with pytest.raises(InvalidParamsError):
        Subspace([[1]], 1, 6)


@pytest.mark.parametrize("n,k,q,count", [(4, 1, 2, 15), (4, 2, 2, 35), (4, 1, 3, 40), (3, 3, 2, 1)])
def test_iter_subspace_bases_counts(n, k, q, count):
    seen = {Subspace(b, n, q) for b in iter_subspace_bases(n, k, q)}
    assert len(seen) == count


def test_matrix_pow_and_matmul():
    t = FqMatrix([[0, 1], [1, 1]], 2)
    assert t.pow(3) == FqMatrix.identity(2, 2)
    assert t @ t == t.pow(2)


def test_matmul_mismatch_raises():
    a = FqMatrix([[1, 0]], 2)
    with pytest.raises(AmbientMismatchError):
        a @ FqMatrix([[1, 0]], 2)  # 1x2 times 1x2
    with pytest.raises(AmbientMismatchError):
        a @ FqMatrix([[1], [0]], 3)  # mixed moduli


def test_transform_and_invariance_guards():
    s = Subspace([[1, 0, 0]], 3, 2)
    t = FqMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 2)  # e1 -> e3 -> e2 -> e1
    assert s.transform(t) == Subspace([[0, 0, 1]], 3, 2)
    assert not s.is_invariant_under(t)
    assert Subspace.full(3, 2).is_invariant_under(t)
    with pytest.raises(AmbientMismatchError):
        s.transform(FqMatrix([[1, 0], [0, 1]], 2))
    with pytest.raises(AmbientMismatchError):
        s.is_invariant_under(FqMatrix.identity(3, 3))
