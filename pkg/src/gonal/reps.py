"""Irreducible representation census of the extended group G = N x| P.

G is a Frobenius group with abelian kernel N = Z_q^n and cyclic complement
P = Z_p, so its census is rigid: p linear characters pulled back from P,
and (q^n - 1)/p induced representations of degree p, one per conjugation
orbit of nontrivial characters of N.  Rationally the linear characters
fuse into the trivial one plus a single degree-(p-1) representation, and
the induced ones fuse q-1 at a time over the cyclotomic Galois group into
t representations of degree p(q-1), one per hyperplane orbit.

Only labels, degrees, counts, and kernel sizes are materialized; no
character tables.  Every downstream identity needs nothing more, and the
groups reach order ~10^6 where tables would be waste.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import CoverParams
from .atlas import OrbitClass
from .calculus import genus_homology_cover, prym_dim
from .errors import IdentityCheckError


@dataclass(frozen=True)
class RepEntry:
    label: str
    degree: int
    count: int


@dataclass(frozen=True)
class IsotypicalFactor:
    rep_label: str
    factor: str
    dim: int
    count: int


@dataclass(frozen=True)
class RepTable:
    params: CoverParams
    complex_entries: tuple[RepEntry, ...]
    rational_entries: tuple[RepEntry, ...]
    pairing: tuple[IsotypicalFactor, ...]

    @property
    def complex_irreducible_count(self) -> int:
        return sum(e.count for e in self.complex_entries)

    @property
    def rational_irreducible_count(self) -> int:
        return sum(e.count for e in self.rational_entries)

    @property
    def kernel_inside_kernel_group_count(self) -> int:
        """Rational irreducibles whose kernel lies properly inside N."""
        return sum(e.count for e in self.rational_entries if e.label == "U_j")


def complex_table(params: CoverParams) -> tuple[RepEntry, ...]:
    """Complex census: p linear characters and (q^n - 1)/p of degree p."""
    p, q, n = params.p, params.q, params.n
    induced_count = (q**n - 1) // p
    entries = (
        RepEntry("chi_0", 1, 1),
        RepEntry("chi_j", 1, p - 1),
        RepEntry("V_j", p, induced_count),
    )
    total = sum(e.count * e.degree**2 for e in entries)
    if total != params.group_order:
        raise IdentityCheckError(
            f"sum of squared degrees {total} != group order {params.group_order}"
        )
    return entries


def rational_table(params: CoverParams) -> tuple[RepEntry, ...]:
    """Rational census: chi_0, U of degree p-1, and t of degree p(q-1)."""
    p, q = params.p, params.q
    return (
        RepEntry("chi_0", 1, 1),
        RepEntry("U", p - 1, 1),
        RepEntry("U_j", p * (q - 1), params.t),
    )


def rep_table(params: CoverParams) -> RepTable:
    """Full census with the complex/rational accounting cross-checked."""
    comp = complex_table(params)
    rat = rational_table(params)
    # Each U_j gathers q-1 degree-p complex constituents; the two published
    # forms of the induced count must agree.
    induced = next(e for e in comp if e.label == "V_j").count
    if induced != params.t * (params.q - 1):
        raise IdentityCheckError(
            f"induced count {induced} != t (q-1) = {params.t * (params.q - 1)}"
        )
    grouped = 1 + (params.p - 1) + params.t * (params.q - 1)
    if grouped != sum(e.count for e in comp):
        raise IdentityCheckError("rational grouping loses complex constituents")
    pairing = (
        IsotypicalFactor("chi_0 + U", "J(X)", params.g, 1),
        IsotypicalFactor("U_j", "P(Y_j/X)^p", params.p * prym_dim(params), params.t),
    )
    return RepTable(params=params, complex_entries=comp, rational_entries=rat, pairing=pairing)


def isotypical_report(params: CoverParams) -> tuple[IsotypicalFactor, ...]:
    """Isogeny factors of J(X~) with the exact dimension identity enforced."""
    table = rep_table(params)
    total = sum(f.dim * f.count for f in table.pairing)
    g_tilde = genus_homology_cover(params)
    if total != g_tilde:
        raise IdentityCheckError(
            f"isotypical dimensions sum to {total}, genus of homology cover is {g_tilde}"
        )
    return table.pairing


def induced_rep_count_by_kernel(params: CoverParams, orbit: OrbitClass) -> tuple[int, str]:
    """(kernel size, label) of the induced representation of a hyperplane orbit.

    The induced degree-p representation attached to any member of the orbit
    has kernel equal to the orbit's core, so its size is q^core_dim.
    """
    size = params.q**orbit.core_dim
    label = f"V[{','.join(str(c) for c in orbit.representative.normal)}]"
    return size, label


def coset_rep_decomposition(params: CoverParams) -> dict:
    """Degrees of the permutation representations on G/N and G/L_j.

    Bookkeeping rows: [G:N] = p matches chi_0 + U and [G:L_j] = pq matches
    chi_0 + U + U_j; recorded with the method that produced them.
    """
    p, q = params.p, params.q
    rows = {
        "rho_N": {"degree": p, "constituents": "chi_0 + U", "check": p == 1 + (p - 1)},
        "rho_L_j": {
            "degree": p * q,
            "constituents": "chi_0 + U + U_j",
            "check": p * q == 1 + (p - 1) + p * (q - 1),
        },
        "method": "degree-bookkeeping",
    }
    if not (rows["rho_N"]["check"] and rows["rho_L_j"]["check"]):
        raise IdentityCheckError("coset representation degrees fail to add up")
    return rows
