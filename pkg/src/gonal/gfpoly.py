"""Dense polynomial arithmetic over the prime fields F_q.

A polynomial is a tuple of ints in {0, ..., q-1}, lowest degree first,
with no trailing zeros; () is the zero polynomial.  The modulus q is
passed to every operation rather than carried on the values: polynomials
are short-lived intermediates, unlike the matrices and subspaces of
:mod:`gonal.fqlinalg`.

Factorization support is limited to what the cyclotomic setting needs:
splitting a squarefree polynomial all of whose irreducible factors share
one known degree.
"""

from __future__ import annotations

from itertools import count, product

import numpy as np

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)


def trim(coeffs) -> Poly:
    coeffs = tuple(int(c) for c in coeffs)
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


def degree(f: Poly) -> int:
    """Degree of f, with the zero polynomial at -1."""
    return len(f) - 1


def add(f: Poly, g: Poly, q: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % q
    return trim(out)


def neg(f: Poly, q: int) -> Poly:
    return tuple((-c) % q for c in f)


def sub(f: Poly, g: Poly, q: int) -> Poly:
    return add(f, neg(g, q), q)


def mul(f: Poly, g: Poly, q: int) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % q
    return trim(out)


def scale(f: Poly, c: int, q: int) -> Poly:
    c %= q
    return trim((a * c) % q for a in f)


def div_rem(f: Poly, g: Poly, q: int) -> tuple[Poly, Poly]:
    """Euclidean division f = quo*g + rem with deg rem < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = pow(g[-1], q - 2, q)
    rem = list(f)
    quo = [0] * max(len(f) - len(g) + 1, 0)
    for i in range(len(f) - len(g), -1, -1):
        c = (rem[i + len(g) - 1] * lead_inv) % q
        if c == 0:
            continue
        quo[i] = c
        for j, b in enumerate(g):
            rem[i + j] = (rem[i + j] - c * b) % q
    return trim(quo), trim(rem)


def monic(f: Poly, q: int) -> Poly:
    if not f:
        return f
    return scale(f, pow(f[-1], q - 2, q), q)


def gcd(f: Poly, g: Poly, q: int) -> Poly:
    """Monic greatest common divisor."""
    while g:
        f, g = g, div_rem(f, g, q)[1]
    return monic(f, q)


def pow_mod(f: Poly, e: int, mod: Poly, q: int) -> Poly:
    """f^e reduced mod the polynomial `mod`, by square and multiply."""
    result = ONE
    base = div_rem(f, mod, q)[1]
    while e > 0:
        if e & 1:
            result = div_rem(mul(result, base, q), mod, q)[1]
        base = div_rem(mul(base, base, q), mod, q)[1]
        e >>= 1
    return result


def eval_at_matrix(f: Poly, m: np.ndarray, q: int) -> np.ndarray:
    """Evaluate f at a square matrix over F_q (Horner)."""
    n = m.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in reversed(f):
        out = (out @ m + c * eye) % q
    return out


def _split_candidates(q: int):
    # Monic nonconstant polynomials in lexicographic order of (degree, tail).
    for deg in count(1):
        for tail in product(range(q), repeat=deg):
            yield trim(tail + (1,))


def _try_split(g: Poly, d: int, q: int, h: Poly) -> Poly | None:
    # Standard equal-degree splitting step; for q = 2 the multiplicative
    # trick degenerates, so the additive trace map is used instead.
    if q == 2:
        u = ZERO
        hp = div_rem(h, g, q)[1]
        for _ in range(d):
            u = add(u, hp, q)
            hp = div_rem(mul(hp, hp, q), g, q)[1]
        w = gcd(u, g, q)
    else:
        u = pow_mod(h, (q**d - 1) // 2, g, q)
        w = gcd(sub(u, ONE, q), g, q)
    if 0 < degree(w) < degree(g):
        return w
    return None


def equal_degree_factors(f: Poly, d: int, q: int) -> list[Poly]:
    """Factor a squarefree monic f whose irreducible factors all have degree d.

    Splitting elements are drawn from a fixed enumeration instead of an RNG,
    so the factor list is deterministic; factors come out sorted.
    """
    if degree(f) % d != 0:
        raise ValueError(f"degree {degree(f)} is not a multiple of {d}")
    pieces = [monic(f, q)]
    done = []
    while pieces:
        g = pieces.pop()
        if degree(g) == d:
            done.append(g)
            continue
        for h in _split_candidates(q):
            w = _try_split(g, d, q, h)
            if w is not None:
                pieces.append(w)
                pieces.append(div_rem(g, w, q)[0])
                break
    return sorted(done)
