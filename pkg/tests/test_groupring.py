from itertools import product

import numpy as np
import pytest

from gonal.action import CoverParams
from gonal.atlas import Hyperplane, enumerate_hyperplanes, orbit_classes
from gonal.errors import CapExceededError, InvalidTransversalError
from gonal.groupring import (
    GroupRingOperator,
    RegularModule,
    build_group,
    composite_scalar,
    fixed_subspace,
    fixed_subspace_canonical,
    frobenius_check,
    verify_cross_terms,
    verify_scalar_identity,
)

TINY = CoverParams(3, 2, 3, allow_small_genus=True)


@pytest.mark.parametrize(
    "p,q,r,order",
    [(5, 2, 3, 80), (3, 2, 4, 48), (3, 2, 3, 12)],
)
def test_build_group_orders(p, q, r, order):
    group = build_group(CoverParams(p, q, r, allow_small_genus=True))
    assert group.order == order
    assert group.elements[0] == group.identity


def test_build_group_cap():
    with pytest.raises(CapExceededError) as exc:
        build_group(CoverParams(13, 3, 3))
    assert exc.value.required == 13 * 3**12


def test_group_multiplication_semidirect_rule():
    group = build_group(TINY)
    # (v, e)(w, f) twists w by the e-th power of the action.
    v, w = (1, 0), (1, 0)
    prod1 = group.mul((v, 1), (w, 0))
    tw = tuple(int(x) for x in (group.action.matrix_array @ np.array(w)) % 2)
    assert prod1 == (tuple((a + b) % 2 for a, b in zip(v, tw)), 1)
    for g in group.elements:
        assert group.mul(g, group.inv(g)) == group.identity


@pytest.mark.parametrize(
    "p,q,r,orbits",
    [(5, 2, 3, 3), (3, 2, 4, 5)],
)
def test_frobenius_check(p, q, r, orbits):
    group = build_group(CoverParams(p, q, r))
    report = frobenius_check(group)
    assert report.all_ok
    assert report.kernel_orbit_count == orbits == (q ** ((p - 1) * (r - 2)) - 1) // p


def test_regular_module_action_is_permutation():
    group = build_group(TINY)
    module = RegularModule(group)
    vec = np.arange(group.order, dtype=np.int64)
    for g in group.elements:
        moved = module.apply(g, vec)
        assert sorted(moved.tolist()) == sorted(vec.tolist())
    # Identity acts trivially.
    assert np.array_equal(module.apply(group.identity, vec), vec)


def test_group_ring_operator_convolution():
    group = build_group(TINY)
    a, b = group.elements[1], group.elements[5]
    op = GroupRingOperator(group, {a: 2}) * GroupRingOperator(group, {b: 3})
    assert op.terms == {group.mul(a, b): 6}
    vec = np.zeros(group.order, dtype=np.int64)
    vec[0] = 1
    out = op.apply(vec)
    assert out.sum() == 6
    assert out[group.index[group.mul(group.mul(a, b), group.identity)]] == 6


@pytest.mark.parametrize(
    "p,q,r,dim",
    [(5, 2, 3, 5), (3, 2, 4, 3), (3, 2, 3, 3)],
)
def test_fixed_subspace_dimension_is_uniform(p, q, r, dim):
    # dim A_L = p(q-1) for every hyperplane, in particular equal across
    # each conjugation orbit.
    params = CoverParams(p, q, r, allow_small_genus=True)
    group = build_group(params)
    dims = set()
    for h in enumerate_hyperplanes(params):
        ker = h.kernel()
        u = next(v for v in product(range(q), repeat=params.n) if any(v) and not ker.contains(v))
        basis = fixed_subspace(group, h, u)
        dims.add(basis.shape[0])
        # Conditions hold exactly: fixed by the subgroup, killed by the sum.
        for vtrans in ker.vectors():
            g = (tuple(int(x) for x in vtrans), 0)
            assert np.array_equal(
                GroupRingOperator(group, {g: 1}).apply(basis), basis
            )
    assert dims == {dim} == {p * (q - 1)}


def test_fixed_subspace_transversal_independent():
    params = CoverParams(5, 2, 3)
    group = build_group(params)
    for h in list(enumerate_hyperplanes(params))[:4]:
        ker = h.kernel()
        forms = {
            fixed_subspace_canonical(group, h, v)
            for v in product(range(2), repeat=4)
            if any(v) and not ker.contains(v)
        }
        assert len(forms) == 1


def test_fixed_subspace_rejects_inside_transversal():
    params = CoverParams(5, 2, 3)
    group = build_group(params)
    h = next(iter(enumerate_hyperplanes(params)))
    inside = next(v for v in h.kernel().vectors() if any(v))
    with pytest.raises(InvalidTransversalError):
        fixed_subspace(group, h, inside)
    with pytest.raises(InvalidTransversalError):
        fixed_subspace(group, h, np.zeros(4, dtype=int))


@pytest.mark.parametrize("p,q,r,scalar", [(5, 2, 3, 8), (3, 2, 4, 8), (3, 2, 3, 2)])
def test_prop_scalar_on_every_hyperplane(p, q, r, scalar):
    params = CoverParams(p, q, r, allow_small_genus=True)
    group = build_group(params)
    for h in enumerate_hyperplanes(params):
        assert verify_scalar_identity(group, h) == scalar == q ** (params.n - 1)


@pytest.mark.parametrize("p,q,r", [(5, 2, 3), (3, 2, 4)])
def test_cross_terms_annihilate(p, q, r):
    params = CoverParams(p, q, r)
    group = build_group(params)
    for h in enumerate_hyperplanes(params):
        report = verify_cross_terms(group, h)
        assert report["cross_terms_zero"]
        assert report["k0_scalar"] == q ** (params.n - 1)
        assert report["checked_k"] == list(range(p))


def test_zero_vector_is_annihilated():
    group = build_group(TINY)
    h = Hyperplane([1, 0], 2)
    subgroup = [(tuple(int(x) for x in v), 0) for v in h.kernel().vectors()]
    op = GroupRingOperator.subgroup_sum(group, subgroup)
    zero = np.zeros(group.order, dtype=np.int64)
    assert np.array_equal(op.apply(zero), zero)


def test_composite_scalar_is_q_to_n():
    params = CoverParams(5, 2, 3)
    group = build_group(params)
    # Once every orbit class verifies, the composed diagram scalar is q^n.
    for cls in orbit_classes(params):
        verify_scalar_identity(group, cls.representative)
    assert composite_scalar(params) == 16
