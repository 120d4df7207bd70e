"""Exact dense linear algebra over the prime fields F_q.

Values are numpy int64 arrays of residues in {0, ..., q-1}.  The modulus
travels on every public value (:class:`FqMatrix`, :class:`Subspace`) and is
checked whenever two values meet; a mismatch raises
:class:`~gonal.errors.AmbientMismatchError`, never silent coercion.

Subspaces are value objects: a subspace is identified with the unique
reduced row-echelon basis of its row space, so equality and hashing are
cheap and orbit/core deduplication elsewhere in the package is exact.
Everything here is immutable after construction and safe to share across
threads.

The `*_array` functions are the raw kernels on plain ndarrays; the public
wrappers add modulus bookkeeping.  Hot loops (the hyperplane atlas) call
the array layer directly.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import AmbientMismatchError, InvalidParamsError

_PRIMES_SEEN: set[int] = set()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime_modulus(q: int) -> int:
    q = int(q)
    if q not in _PRIMES_SEEN:
        if not is_prime(q):
            raise InvalidParamsError(f"modulus {q} is not prime")
        _PRIMES_SEEN.add(q)
    return q


def inverse_table(q: int) -> np.ndarray:
    """inverse_table(q)[x] = x^-1 mod q for x in 1..q-1 (index 0 unused)."""
    # Exponentiation by q-2: branch-free and exact for the small primes used here.
    table = np.array([0] + [pow(x, q - 2, q) for x in range(1, q)], dtype=np.int64)
    return table


def as_residues(a, q: int) -> np.ndarray:
    """Copy `a` into a fresh int64 array reduced mod q."""
    arr = np.array(a, dtype=np.int64)
    return arr % q


def rref_array(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over F_q; returns (R, pivot columns).

    R keeps the input shape (zero rows trail); rank = len(pivots).
    """
    a = np.array(a, dtype=np.int64) % q
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = a.shape
    inv = inverse_table(q)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv[a[r, c]]) % q
        sel = a[:, c].copy()
        sel[r] = 0
        if np.any(sel):
            a = (a - np.outer(sel, a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_array(a: np.ndarray, q: int) -> np.ndarray:
    """Canonical RREF basis (rows) of {x : a @ x = 0} over F_q."""
    a = np.atleast_2d(np.asarray(a))
    rows, cols = a.shape
    red, pivots = rref_array(a, q)
    rank = len(pivots)
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-red[row, f]) % q
    # The standard free-column basis is not itself in RREF; canonicalize.
    red2, piv2 = rref_array(basis, q)
    assert len(piv2) == len(free)
    return red2[: len(free)]


def row_space_array(a: np.ndarray, q: int) -> np.ndarray:
    """Canonical RREF basis of the row space of `a`, zero rows removed."""
    red, pivots = rref_array(np.atleast_2d(np.asarray(a)), q)
    return red[: len(pivots)]


def matpow_array(a: np.ndarray, e: int, q: int) -> np.ndarray:
    """a^e mod q by repeated squaring; e >= 0."""
    n = a.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = np.array(a, dtype=np.int64) % q
    while e > 0:
        if e & 1:
            result = (result @ base) % q
        base = (base @ base) % q
        e >>= 1
    return result


def iter_subspace_bases(n: int, k: int, q: int):
    """Yield the canonical RREF basis of every k-dim subspace of F_q^n.

    Enumeration order: pivot columns lexicographic, then free entries
    lexicographic; deterministic and duplicate-free by construction.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        yield np.zeros((0, n), dtype=np.int64)
        return
    for pivots in combinations(range(n), k):
        free_pos = [
            (i, c)
            for i in range(k)
            for c in range(pivots[i] + 1, n)
            if c not in pivots
        ]
        base = np.zeros((k, n), dtype=np.int64)
        for i, pc in enumerate(pivots):
            base[i, pc] = 1
        for vals in product(range(q), repeat=len(free_pos)):
            mat = base.copy()
            for (i, c), v in zip(free_pos, vals):
                mat[i, c] = v
            yield mat


class FqMatrix:
    """Immutable matrix of residues mod a prime q."""

    __slots__ = ("_a", "modulus")

    def __init__(self, entries, modulus: int):
        self.modulus = check_prime_modulus(modulus)
        a = as_residues(entries, self.modulus)
        if a.ndim != 2:
            raise ValueError("FqMatrix entries must be 2-dimensional")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def identity(cls, n: int, modulus: int) -> "FqMatrix":
        return cls(np.eye(n, dtype=np.int64), modulus)

    @property
    def array(self) -> np.ndarray:
        """Read-only ndarray view of the entries."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def _check_compatible(self, other: "FqMatrix"):
        if self.modulus != other.modulus:
            raise AmbientMismatchError(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        self._check_compatible(other)
        if self.cols != other.rows:
            raise AmbientMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return FqMatrix((self._a @ other._a) % self.modulus, self.modulus)

    def pow(self, e: int) -> "FqMatrix":
        if self.rows != self.cols:
            raise AmbientMismatchError("matrix power needs a square matrix")
        return FqMatrix(matpow_array(self._a, e, self.modulus), self.modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self._a.shape == other._a.shape
            and np.array_equal(self._a, other._a)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self._a.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"FqMatrix({self._a.tolist()}, modulus={self.modulus})"


class Subspace:
    """Subspace of F_q^n, held as the unique RREF basis of its row space."""

    __slots__ = ("ambient_dim", "modulus", "_rows")

    def __init__(self, basis_rows, ambient_dim: int, modulus: int):
        self.modulus = check_prime_modulus(modulus)
        self.ambient_dim = int(ambient_dim)
        rows = row_space_array(
            np.asarray(basis_rows, dtype=np.int64).reshape(-1, self.ambient_dim),
            self.modulus,
        )
        rows.flags.writeable = False
        self._rows = rows

    @classmethod
    def _from_canonical(cls, rows: np.ndarray, ambient_dim: int, modulus: int):
        # Trusted internal path: rows already canonical RREF without zero rows.
        self = cls.__new__(cls)
        self.modulus = modulus
        self.ambient_dim = ambient_dim
        rows = np.ascontiguousarray(rows, dtype=np.int64)
        rows.flags.writeable = False
        self._rows = rows
        return self

    @classmethod
    def zero(cls, ambient_dim: int, modulus: int) -> "Subspace":
        return cls(np.zeros((0, ambient_dim), dtype=np.int64), ambient_dim, modulus)

    @classmethod
    def full(cls, ambient_dim: int, modulus: int) -> "Subspace":
        return cls(np.eye(ambient_dim, dtype=np.int64), ambient_dim, modulus)

    @property
    def dim(self) -> int:
        return self._rows.shape[0]

    @property
    def basis(self) -> FqMatrix:
        return FqMatrix(self._rows, self.modulus)

    @property
    def basis_array(self) -> np.ndarray:
        """Read-only (dim x ambient_dim) RREF basis array."""
        return self._rows

    def _check_compatible(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.modulus != other.modulus:
            raise AmbientMismatchError(
                f"subspaces live in F_{self.modulus}^{self.ambient_dim} vs "
                f"F_{other.modulus}^{other.ambient_dim}"
            )

    def contains(self, v) -> bool:
        """True iff the vector v lies in this subspace."""
        v = as_residues(v, self.modulus).reshape(-1)
        if v.shape[0] != self.ambient_dim:
            raise AmbientMismatchError(
                f"vector length {v.shape[0]} != ambient dim {self.ambient_dim}"
            )
        # Reduce against the RREF basis: each row clears its pivot column.
        for row in self._rows:
            pc = int(np.nonzero(row)[0][0])
            if v[pc]:
                v = (v - v[pc] * row) % self.modulus
        return not np.any(v)

    def contains_rows(self, rows: np.ndarray) -> bool:
        """True iff every row of `rows` lies in this subspace."""
        rows = as_residues(rows, self.modulus).reshape(-1, self.ambient_dim)
        for row_basis in self._rows:
            pc = int(np.nonzero(row_basis)[0][0])
            rows = (rows - np.outer(rows[:, pc], row_basis)) % self.modulus
        return not np.any(rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.modulus)
        # Left-kernel method: (u, -w) with u@A = w@B spans the coefficient
        # solutions; u@A then spans the intersection.
        stacked = np.vstack([self._rows, other._rows])
        left = kernel_array(stacked.T, self.modulus)
        if left.shape[0] == 0:
            return Subspace.zero(self.ambient_dim, self.modulus)
        vecs = (left[:, : self.dim] @ self._rows) % self.modulus
        return Subspace(vecs, self.ambient_dim, self.modulus)

    def transform(self, m: FqMatrix) -> "Subspace":
        """Image {M v : v in self} under a column-acting square matrix."""
        if m.modulus != self.modulus or m.rows != m.cols or m.cols != self.ambient_dim:
            raise AmbientMismatchError("transform needs a square matrix on the ambient space")
        return Subspace((self._rows @ m.array.T) % self.modulus, self.ambient_dim, self.modulus)

    def is_invariant_under(self, m: FqMatrix) -> bool:
        if m.modulus != self.modulus or m.rows != m.cols or m.cols != self.ambient_dim:
            raise AmbientMismatchError("invariance check needs a square matrix on the ambient space")
        return self.contains_rows((self._rows @ m.array.T) % self.modulus)

    def vectors(self):
        """Iterate all q^dim vectors of the subspace (small spaces only)."""
        for coeffs in product(range(self.modulus), repeat=self.dim):
            yield (np.array(coeffs, dtype=np.int64) @ self._rows) % self.modulus

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.ambient_dim == other.ambient_dim
            and self._rows.shape == other._rows.shape
            and np.array_equal(self._rows, other._rows)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.ambient_dim, self._rows.tobytes()))

    def __repr__(self) -> str:
        return (
            f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, "
            f"modulus={self.modulus})"
        )


def rref(m: FqMatrix) -> tuple[FqMatrix, int]:
    """Unique reduced row-echelon form of m and its rank."""
    red, pivots = rref_array(m.array, m.modulus)
    return FqMatrix(red, m.modulus), len(pivots)


def kernel(m: FqMatrix) -> Subspace:
    """Null space {x : m x = 0} as a canonical subspace of F_q^cols."""
    rows = kernel_array(m.array, m.modulus)
    return Subspace._from_canonical(rows, m.cols, m.modulus)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(s: Subspace, v) -> bool:
    return s.contains(v)
