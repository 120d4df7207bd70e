"""Atlas of maximal subgroups of Z_q^n under the lifted order-p action.

A maximal (index-q) subgroup of Z_q^n is a hyperplane, stored as its dual
normal: a nonzero covector scaled so its first nonzero entry is 1.  That
keeps storage at O(n), makes deduplication a tuple comparison, and gives
every orbit a canonical representative (the lexicographically least normal).

Conjugating a hyperplane by the action T moves its kernel to T.ker(h),
which on normals is v -> v T^(-1).  Orbits all have size exactly p because
gcd(p, q-1) = 1 rules out fixed hyperplanes.  The core of a hyperplane is
the intersection of its p conjugate kernels, i.e. the kernel of the stacked
conjugate normals; it determines the Galois group of the composite cover.

The full classification (`orbit_classes`) runs one vectorized sweep over
all (q^n - 1)/(q - 1) normals: codes of all p conjugates are computed in
p - 1 matrix products, a normal is an orbit representative iff its own code
is its orbit minimum, and cores are extracted per class afterwards.  Output
order (by representative) is deterministic; per-class work is independent,
so the merge would be identical under any parallel schedule.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib.resources import files as _resource_files

import numpy as np

from .action import AdaptedAction, CoverParams, build_action
from .errors import (
    CapExceededError,
    FixtureParseError,
    IdentityCheckError,
    InvalidParamsError,
    InvariantHyperplaneError,
)
from .fqlinalg import (
    Subspace,
    as_residues,
    check_prime_modulus,
    inverse_table,
    iter_subspace_bases,
    kernel_array,
)

DEFAULT_ATLAS_CAP = 3**13
DEFAULT_BRUTE_CAP = 2**16
ENV_ATLAS_CAP = "GONAL_ATLAS_CAP"


def resolve_atlas_cap(cap: int | None = None) -> int:
    """Explicit cap, else the GONAL_ATLAS_CAP variable, else 3^13."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(ENV_ATLAS_CAP)
    if env:
        return int(env)
    return DEFAULT_ATLAS_CAP


def _check_cap(size: int, cap: int, what: str):
    if size > cap:
        raise CapExceededError(f"{what} needs ambient size {size}", required=size, cap=cap)


class Hyperplane:
    """Index-q subgroup of Z_q^n as a normalized dual normal."""

    __slots__ = ("normal", "modulus")

    def __init__(self, normal, modulus: int):
        modulus = check_prime_modulus(modulus)
        vec = as_residues(normal, modulus).reshape(-1)
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            raise InvalidParamsError("a hyperplane normal must be nonzero")
        lead = int(vec[nz[0]])
        if lead != 1:
            vec = (vec * pow(lead, modulus - 2, modulus)) % modulus
        object.__setattr__(self, "normal", tuple(vec.tolist()))
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def _from_normalized(cls, normal: tuple, modulus: int) -> "Hyperplane":
        self = cls.__new__(cls)
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "modulus", modulus)
        return self

    @classmethod
    def from_subspace(cls, sub: Subspace) -> "Hyperplane":
        """Dual normal of a codimension-one subspace."""
        if sub.dim != sub.ambient_dim - 1:
            raise InvalidParamsError(
                f"subspace of dim {sub.dim} in F^{sub.ambient_dim} is not a hyperplane"
            )
        normals = kernel_array(sub.basis_array, sub.modulus)
        return cls(normals[0], sub.modulus)

    @property
    def ambient_dim(self) -> int:
        return len(self.normal)

    def normal_array(self) -> np.ndarray:
        return np.array(self.normal, dtype=np.int64)

    def kernel(self) -> Subspace:
        """The subgroup itself: {x : normal . x = 0}, dimension n - 1."""
        rows = kernel_array(self.normal_array().reshape(1, -1), self.modulus)
        return Subspace._from_canonical(rows, self.ambient_dim, self.modulus)

    def __setattr__(self, *_):
        raise AttributeError("Hyperplane is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.modulus == other.modulus and self.normal == other.normal

    def __lt__(self, other: "Hyperplane") -> bool:
        return self.normal < other.normal

    def __hash__(self) -> int:
        return hash((self.modulus, self.normal))

    def __repr__(self) -> str:
        return f"Hyperplane({list(self.normal)}, modulus={self.modulus})"


def enumerate_hyperplanes(params: CoverParams, cap: int | None = None):
    """Yield all m hyperplane normals in lexicographic order, each once."""
    q, n = params.q, params.n
    _check_cap(q**n, resolve_atlas_cap(cap), "hyperplane enumeration")
    import itertools

    for lead in range(n - 1, -1, -1):
        zeros = (0,) * lead
        for tail in itertools.product(range(q), repeat=n - 1 - lead):
            yield Hyperplane._from_normalized(zeros + (1,) + tail, q)


def conjugate_hyperplane(h: Hyperplane, action: AdaptedAction) -> Hyperplane:
    """Hyperplane whose kernel is T.ker(h): on normals, v -> v T^(-1)."""
    q = action.params.q
    if h.modulus != q or h.ambient_dim != action.params.n:
        raise InvalidParamsError("hyperplane and action live over different spaces")
    return Hyperplane((h.normal_array() @ action.inverse_array) % q, q)


def core(h: Hyperplane, action: AdaptedAction) -> Subspace:
    """Intersection of the p conjugate kernels of h; always T-invariant."""
    p, q, n = action.params.p, action.params.q, action.params.n
    stack = np.empty((p, n), dtype=np.int64)
    row = h.normal_array()
    for j in range(p):
        stack[j] = row
        row = (row @ action.inverse_array) % q
    rows = kernel_array(stack, q)
    return Subspace._from_canonical(rows, n, q)


@dataclass(frozen=True)
class OrbitClass:
    """One conjugation orbit of hyperplanes with its core."""

    representative: Hyperplane
    members: tuple[Hyperplane, ...]
    core: Subspace

    @property
    def core_dim(self) -> int:
        return self.core.dim

    def verify(self, action: AdaptedAction) -> dict:
        """Recheck the orbit invariants; returns observed facts.

        Raises IdentityCheckError on any hard failure (orbit size, chain
        consistency, core invariance, dimension quantization, rank bound).
        The stronger core bound (p-1)(r-3) is reported, not enforced.
        """
        params = action.params
        p, n, s0 = params.p, params.n, params.s0
        if len(self.members) != p or len(set(self.members)) != p:
            raise IdentityCheckError(f"orbit of {self.representative} has size != {p}")
        if self.representative != min(self.members):
            raise IdentityCheckError("representative is not the least orbit member")
        for a, b in zip(self.members, self.members[1:] + self.members[:1]):
            if conjugate_hyperplane(a, action) != b:
                raise IdentityCheckError(f"conjugation chain broken at {a}")
        if not self.core.is_invariant_under(action.matrix):
            raise IdentityCheckError(f"core of {self.representative} not invariant")
        if self.core_dim % s0 != 0:
            raise IdentityCheckError(
                f"core dim {self.core_dim} not a multiple of s0 = {s0}"
            )
        if self.core_dim < n - p:
            raise IdentityCheckError(f"core dim {self.core_dim} below rank bound {n - p}")
        stated_bound = (p - 1) * (params.r - 3)
        return {
            "core_dim": self.core_dim,
            "rank_bound": max(0, n - p),
            "stated_bound": stated_bound,
            "meets_stated_bound": self.core_dim >= stated_bound,
        }


def _lex_tails(length: int, q: int) -> np.ndarray:
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    codes = np.arange(q**length, dtype=np.int64)
    out = np.empty((codes.size, length), dtype=np.int64)
    for i in range(length - 1, -1, -1):
        out[:, i] = codes % q
        codes = codes // q
    return out


def all_normals_array(n: int, q: int) -> np.ndarray:
    """All normalized normals as an (m, n) array in lexicographic order."""
    blocks = []
    for lead in range(n - 1, -1, -1):
        tails = _lex_tails(n - 1 - lead, q)
        block = np.zeros((tails.shape[0], n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tails
        blocks.append(block)
    return np.concatenate(blocks)


def _encode_rows(rows: np.ndarray, q: int) -> np.ndarray:
    n = rows.shape[-1]
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return rows @ weights


def _decode_codes(codes: np.ndarray, n: int, q: int) -> np.ndarray:
    codes = np.array(codes, dtype=np.int64)
    out = np.empty(codes.shape + (n,), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        out[..., i] = codes % q
        codes = codes // q
    return out


def _normalize_rows(rows: np.ndarray, q: int, inv: np.ndarray) -> np.ndarray:
    lead_idx = np.argmax(rows != 0, axis=1)
    lead = rows[np.arange(rows.shape[0]), lead_idx]
    return (rows * inv[lead][:, None]) % q


def orbit_classes(
    params: CoverParams,
    cap: int | None = None,
    action: AdaptedAction | None = None,
) -> list[OrbitClass]:
    """Classify all hyperplanes into their t conjugation orbits, with cores.

    Deterministic: classes are ordered by representative normal, members by
    successive conjugation starting at the representative.
    """
    p, q, n = params.p, params.q, params.n
    _check_cap(q**n, resolve_atlas_cap(cap), "orbit classification")
    if action is None:
        action = build_action(params)
    elif action.params != params:
        raise InvalidParamsError(
            f"action built for {action.params} cannot classify {params}"
        )
    inv = inverse_table(q)
    tinv = action.inverse_array

    normals = all_normals_array(n, q)
    m = normals.shape[0]
    assert m == params.m
    codes = np.empty((m, p), dtype=np.int64)
    codes[:, 0] = _encode_rows(normals, q)
    cur = normals
    for j in range(1, p):
        cur = _normalize_rows((cur @ tinv) % q, q, inv)
        codes[:, j] = _encode_rows(cur, q)
    del cur, normals

    rep_codes = codes.min(axis=1)
    is_rep = codes[:, 0] == rep_codes
    rep_rows = np.nonzero(is_rep)[0]
    if rep_rows.size != params.t:
        raise IdentityCheckError(
            f"found {rep_rows.size} orbit classes, expected t = {params.t}"
        )
    orbit_codes = codes[rep_rows]
    sorted_codes = np.sort(orbit_codes, axis=1)
    if not np.all(np.diff(sorted_codes, axis=1) > 0):
        raise IdentityCheckError("an orbit has fewer than p distinct members")
    if np.unique(sorted_codes).size != m:
        raise IdentityCheckError("orbits do not partition the hyperplane set")
    del codes, rep_codes, is_rep, sorted_codes

    member_vecs = _decode_codes(orbit_codes, n, q)
    classes = []
    for i in range(rep_rows.size):
        vecs = member_vecs[i]
        members = tuple(
            Hyperplane._from_normalized(tuple(vecs[j].tolist()), q) for j in range(p)
        )
        core_rows = kernel_array(vecs, q)
        classes.append(
            OrbitClass(
                representative=members[0],
                members=members,
                core=Subspace._from_canonical(core_rows, n, q),
            )
        )
    return classes


def gaussian_count(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (Gaussian binomial)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = 1
    den = 1
    for j in range(k):
        num *= q ** (n - j) - 1
        den *= q ** (k - j) - 1
    assert num % den == 0
    return num // den


def enumerate_subgroups_brute(n: int, k: int, q: int, cap: int = DEFAULT_BRUTE_CAP) -> list[Subspace]:
    """All k-dim subspaces of F_q^n by direct RREF enumeration (oracle)."""
    check_prime_modulus(q)
    _check_cap(q**n, cap, "brute-force subgroup enumeration")
    return [
        Subspace._from_canonical(basis, n, q) for basis in iter_subspace_bases(n, k, q)
    ]


@dataclass(frozen=True)
class GaloisReport:
    """Galois closure data of the composite cover attached to a hyperplane."""

    params: CoverParams
    hyperplane: Hyperplane
    is_composite_galois: bool
    k: int
    group: str
    order_check: bool
    core_dim: int
    exceeds_complement_range: bool

    @property
    def core_size(self) -> int:
        return self.params.q**self.core_dim

    @property
    def group_order(self) -> int:
        return self.params.p * self.params.q**self.k


def galois_closure(
    h: Hyperplane, params: CoverParams, action: AdaptedAction | None = None
) -> GaloisReport:
    """Describe the Galois closure Z_q^k x| Z_p of the composite cover.

    k = n - dim(core).  The composite itself is never Galois here: under
    gcd(p, q-1) = 1 no hyperplane is fixed by the action; hitting one raises
    InvariantHyperplaneError since it would mean the parameters lied.
    """
    if action is None:
        action = build_action(params)
    elif action.params != params:
        raise InvalidParamsError(f"action built for {action.params}, not {params}")
    if conjugate_hyperplane(h, action) == h:
        raise InvariantHyperplaneError(
            f"hyperplane {h} is invariant; gcd(p, q-1) = 1 must have been violated"
        )
    c = core(h, action)
    k = params.n - c.dim
    order_ok = pow(params.q, k, params.p) == 1
    if not order_ok:
        raise IdentityCheckError(f"q^k != 1 mod p for k = {k}; core computation is wrong")
    return GaloisReport(
        params=params,
        hyperplane=h,
        is_composite_galois=False,
        k=k,
        group=f"Z_{params.q}^{k} ⋊ Z_{params.p}",
        order_check=order_ok,
        core_dim=c.dim,
        exceeds_complement_range=k > params.p - 1,
    )


_TOKEN = re.compile(r"\s*a_?(\d+)(?:\^(-?\d+))?")


def parse_word(word: str, params: CoverParams) -> np.ndarray:
    """One generator word -> exponent vector in F_q^n.

    Symbols a_1 .. a_n are the kept generators; a_(n+j) for j = 1..r-2 is
    block j's eliminated generator, expanded to minus the block sum.
    """
    p, q, n = params.p, params.q, params.n
    vec = np.zeros(n, dtype=np.int64)
    pos = 0
    matched_any = False
    while pos < len(word):
        match = _TOKEN.match(word, pos)
        if match is None:
            if word[pos:].strip():
                raise FixtureParseError(f"malformed generator word: {word!r} at {word[pos:]!r}")
            break
        matched_any = True
        idx = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if 1 <= idx <= n:
            vec[idx - 1] += exp
        elif n < idx <= n + params.r - 2:
            j = idx - n
            vec[(j - 1) * (p - 1) : j * (p - 1)] -= exp
        else:
            raise FixtureParseError(
                f"generator index {idx} out of range 1..{n + params.r - 2}"
            )
        pos = match.end()
    if not matched_any:
        raise FixtureParseError(f"empty generator word: {word!r}")
    return vec % q


def parse_generator_words(text: str, params: CoverParams) -> Subspace:
    """Parse a generator-word fixture into the subspace its words span.

    One word per line; `#` starts a comment; blank lines are skipped.
    """
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append(parse_word(line, params))
    if not rows:
        return Subspace.zero(params.n, params.q)
    return Subspace(np.vstack(rows), params.n, params.q)


def read_fixture(name: str) -> str:
    """Text of a bundled .gens fixture (see gonal/fixtures/)."""
    return (_resource_files("gonal") / "fixtures" / name).read_text()


def subgroup_from_file(path: str, params: CoverParams) -> Subspace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_words(fh.read(), params)
