"""Exact genus, dimension, and counting formulas for the cover tower.

The tower over the base curve X (genus g, gonal automorphism of order p
with r fixed points): the homology cover X~ of exponent q, the index-q
intermediate covers Y_j = X~/L_j, the quotients Z = X~/K by invariant
subgroups K, and the orbifold quotient T = X~/P by the lifted automorphism.

Everything here is arbitrary-precision integer arithmetic; a formula that
fails an integrality or identity check raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import CoverParams
from .errors import IdentityCheckError, InvalidParamsError
from .fqlinalg import is_prime


def genus_base(p: int, r: int) -> int:
    """Genus (p-1)(r-2)/2 of a p-gonal curve with r branch points."""
    if not (is_prime(p) and p % 2 == 1):
        raise InvalidParamsError(f"p = {p} must be an odd prime")
    if r < 3:
        raise InvalidParamsError(f"r = {r} must be at least 3")
    num = (p - 1) * (r - 2)
    assert num % 2 == 0
    return num // 2


def genus_homology_cover(params: CoverParams) -> int:
    """Genus 1 + q^2g (g - 1) of the exponent-q homology cover."""
    g = params.g
    return 1 + params.q ** (2 * g) * (g - 1)


def genus_intermediate(params: CoverParams) -> int:
    """Genus 1 + q((p-1)(r-2) - 2)/2 of each index-q unramified cover Y_j."""
    num = params.q * (params.n - 2)
    assert num % 2 == 0
    return 1 + num // 2


def genus_quotient_T(params: CoverParams) -> int:
    """Genus of the orbifold T = X~/P (r cone points of order p)."""
    num = (params.n - 2) * (params.q**params.n - 1)
    den = 2 * params.p
    if num % den != 0:
        raise IdentityCheckError(
            f"genus of T is not integral for {params}: {num} / {den}"
        )
    return num // den


def prym_dim(params: CoverParams) -> int:
    """Dimension (g-1)(q-1) of the complementary Prym of Y_j over X."""
    return (params.g - 1) * (params.q - 1)


def genus_quotient_by_core(params: CoverParams, core_dim: int) -> int:
    """Genus of X~/K for an invariant subgroup K of rank core_dim.

    K acts freely (every subgroup of the homology group does), so this is
    unramified Riemann-Hurwitz: g(Z) - 1 = (g~ - 1)/q^core_dim.
    """
    if not 0 <= core_dim <= params.n:
        raise InvalidParamsError(f"core_dim {core_dim} outside 0..{params.n}")
    size = params.q**core_dim
    excess = genus_homology_cover(params) - 1
    if excess % size != 0:
        raise IdentityCheckError(
            f"Riemann-Hurwitz failed: {excess} not divisible by {size}"
        )
    return 1 + excess // size


@dataclass(frozen=True)
class CoverReport:
    """All exact invariants of one parameter triple, identities verified."""

    params: CoverParams
    g: int
    g_tilde: int
    g_y: int
    g_t: int
    prym_dim: int
    m: int
    t: int
    s0: int
    genus_z: dict  # invariant core dim -> genus of X~/K

    def identity_names(self) -> list[str]:
        return [
            "jacobian-dimension-identity",
            "prym-sum-equals-quotient-jacobian",
            "riemann-hurwitz-endpoints",
        ]


def decomposition_report(params: CoverParams) -> CoverReport:
    """Evaluate every formula and verify the decomposition identities.

    Checks exactly:
      g~ = g + m * prym_dim     (isotypical dimension bookkeeping),
      t * prym_dim = g_T        (the Pryms fill out the quotient Jacobian),
      Riemann-Hurwitz at both ends of the core range.
    """
    g = params.g
    g_tilde = genus_homology_cover(params)
    d_prym = prym_dim(params)
    g_t = genus_quotient_T(params)
    if g_tilde != g + params.m * d_prym:
        raise IdentityCheckError(
            f"g~ != g + m * prym for {params}: {g_tilde} vs {g + params.m * d_prym}"
        )
    if params.t * d_prym != g_t:
        raise IdentityCheckError(
            f"t * prym != g_T for {params}: {params.t * d_prym} vs {g_t}"
        )
    if genus_quotient_by_core(params, 0) != g_tilde or genus_quotient_by_core(
        params, params.n
    ) != g:
        raise IdentityCheckError(f"Riemann-Hurwitz endpoints broken for {params}")
    genus_z = {
        s: genus_quotient_by_core(params, s) for s in range(0, params.n + 1, params.s0)
    }
    return CoverReport(
        params=params,
        g=g,
        g_tilde=g_tilde,
        g_y=genus_intermediate(params),
        g_t=g_t,
        prym_dim=d_prym,
        m=params.m,
        t=params.t,
        s0=params.s0,
        genus_z=genus_z,
    )
