"""Exact knot determinants and coloring counts.

Two exact routes are provided for integer determinants: fraction-free
(Bareiss) elimination over Python integers, and determinants modulo word-size
primes recombined by the Chinese remainder theorem.  The modular route takes
enough primes for their product to exceed twice the Hadamard bound, so the
symmetric residue is the true determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .coloring import build_matrix, first_minor
from .errors import NotPrime, NotSquare, TooLarge
from .gausscode import sign_code
from .numtheory import factorize, is_prime, partial_factorize, valuation
from .permutation import PermLike, validate

BAREISS_LIMIT = 256
# products of two residues below 2**31 fit in int64
_WORD_PRIME_LIMIT = 2**31
EXHAUSTIVE_MAX_SIZE = 12
EXHAUSTIVE_BUDGET = 10**7
SURVEY_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def _square_rows(m) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare(f"matrix is not square ({n} rows, row lengths {sorted({len(r) for r in rows})})")
    return rows


def _square_array(m) -> np.ndarray:
    a = np.asarray(m)
    if a.size == 0:
        a = a.reshape(0, 0) if a.ndim != 2 else a
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"matrix is not square (shape {a.shape})")
    return a


def det_bareiss(m) -> int:
    """Fraction-free single-step elimination over the integers."""
    a = _square_rows(m)
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot_row = a[k]
        akk = pivot_row[k]
        for i in range(k + 1, n):
            row = a[i]
            aik = row[k]
            if aik:
                a[i] = [(akk * row[j] - aik * pivot_row[j]) // prev if j > k else 0
                        for j in range(n)]
            else:
                a[i] = [akk * x // prev for x in row]
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def _det_mod_word(a: np.ndarray, q: int) -> int:
    # rows with a zero in the pivot column are skipped, which keeps the work
    # close to the fill-in of these very sparse matrices
    a = np.array(a, dtype=np.int64) % q
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k])
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        pv = int(a[k, k])
        det = det * pv % q
        rows = k + 1 + np.flatnonzero(a[k + 1:, k])
        if rows.size:
            f = a[rows, k] * pow(pv, -1, q) % q
            a[rows, k + 1:] = (a[rows, k + 1:] - np.outer(f, a[k, k + 1:])) % q
    return det % q


def _det_mod_big(rows: list[list[int]], q: int) -> int:
    a = [[x % q for x in row] for row in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % q
        inv = pow(a[k][k], -1, q)
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv % q
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[k])]
    return det % q


def det_mod(m, q: int) -> int:
    """Determinant over the field with q elements, in [0, q)."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    a = _square_array(m)
    if a.shape[0] == 0:
        return 1 % q
    if q < _WORD_PRIME_LIMIT and a.dtype != object:
        return _det_mod_word(a, q)
    return _det_mod_big(_square_rows(a), q)


def hadamard_bound(m) -> int:
    """Integer upper bound on |det m| (smaller of the row and column bounds)."""
    a = _square_array(m)
    if a.shape[0] == 0:
        return 1
    rows = [[int(x) for x in r] for r in a.tolist()]
    row_sq = math.prod(sum(x * x for x in r) for r in rows)
    col_sq = math.prod(sum(x * x for x in c) for c in zip(*rows))
    sq = min(row_sq, col_sq)
    root = math.isqrt(sq)
    return root if root * root == sq else root + 1


@lru_cache(maxsize=None)
def _word_primes(count: int) -> tuple[int, ...]:
    primes = []
    q = _WORD_PRIME_LIMIT - 1
    while len(primes) < count:
        if is_prime(q):
            primes.append(q)
        q -= 2
    return tuple(primes)


def crt_primes(bound: int) -> tuple[int, ...]:
    """Largest word primes whose product exceeds 2 * bound."""
    count = max(1, (2 * bound).bit_length() // 30 + 1)
    while True:
        primes = _word_primes(count)
        if math.prod(primes) > 2 * bound:
            while len(primes) > 1 and math.prod(primes[:-1]) > 2 * bound:
                primes = primes[:-1]
            return primes
        count += 1


def crt_combine(residues: Sequence[int], moduli: Sequence[int]) -> tuple[int, int]:
    """Combine congruences with pairwise coprime moduli; returns (x, modulus)."""
    x, mod = 0, 1
    for r, q in zip(residues, moduli):
        t = (r - x) * pow(mod, -1, q) % q
        x += mod * t
        mod *= q
    return x, mod


def det_multimodular(m, primes: Optional[Sequence[int]] = None) -> int:
    """Exact determinant via residues modulo word primes and CRT."""
    a = _square_array(m)
    if a.shape[0] == 0:
        return 1
    if primes is None:
        primes = crt_primes(hadamard_bound(a))
    residues = [det_mod(a, q) for q in primes]
    x, mod = crt_combine(residues, primes)
    return x - mod if x > mod // 2 else x


def det_exact(m) -> int:
    """Exact integer determinant; the empty matrix has determinant 1."""
    a = _square_array(m)
    if a.shape[0] <= BAREISS_LIMIT:
        return det_bareiss(a)
    return det_multimodular(a)


def rank_mod(m, q: int) -> int:
    """Rank of an integer matrix over the field with q elements."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    a = np.array(m, dtype=object if q >= _WORD_PRIME_LIMIT else np.int64) % q
    if a.ndim != 2:
        raise NotSquare(f"expected a 2-d matrix, got shape {a.shape}")
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c] % q)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, q)
        rows = r + 1 + np.flatnonzero(a[r + 1:, c])
        if rows.size:
            f = a[rows, c] * inv % q
            a[rows, c:] = (a[rows, c:] - np.outer(f, a[r, c:])) % q
        r += 1
    return r


def coloring_matrix(perm: PermLike) -> np.ndarray:
    return build_matrix(sign_code(perm))


def knot_determinant(perm: PermLike) -> int:
    """|first minor| of the coloring matrix of the split petal projection."""
    perm = validate(perm)
    if perm.p < 5:
        return 1
    return abs(det_exact(first_minor(coloring_matrix(perm))))


def brute_force_colorings(m, q: int, mode: str = "auto") -> int:
    """Number of vectors x in (Z/q)^N with m x = 0 mod q.

    ``exhaustive`` enumerates all q^N assignments, ``rank`` uses
    q^(N - rank).  ``auto`` enumerates whenever the budget allows.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    a = np.asarray(m, dtype=np.int64)
    n = a.shape[1]
    fits = n <= EXHAUSTIVE_MAX_SIZE and q**n <= EXHAUSTIVE_BUDGET
    if mode == "exhaustive" and not fits:
        raise TooLarge(f"{q}^{n} assignments exceed the exhaustive budget")
    if mode == "rank" or (mode == "auto" and not fits):
        return q ** (n - rank_mod(a, q))
    if mode not in ("auto", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    total = q**n
    weights = q ** np.arange(n, dtype=np.int64)
    count = 0
    chunk = 1 << 16
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        x = (idx[:, None] // weights) % q
        count += int(np.count_nonzero(~((x @ a.T) % q).any(axis=1)))
    return count


@dataclass(frozen=True)
class PrimeColorings:
    p: int
    ord: int
    total: int
    nontrivial: int
    # p ** nullity of the coloring matrix over Z/p; differs from ``total``
    # when the p-part of the coloring group is not cyclic of order p
    exact_total: Optional[int] = None


@dataclass(frozen=True)
class ColoringReport:
    permutation: tuple[int, ...]
    determinant: int
    factorization: list[tuple[int, int]]
    per_prime: list[PrimeColorings]
    cofactor: int = 1

    @property
    def petal_number(self) -> int:
        return len(self.permutation)

    @property
    def fully_factored(self) -> bool:
        return self.cofactor == 1

    def to_json(self) -> dict:
        out = {
            "permutation": list(self.permutation),
            "petal_number": self.petal_number,
            "determinant": str(self.determinant),
            "factorization": [[p, e] for p, e in self.factorization],
            "colorings": [
                {"p": c.p, "ord": c.ord, "total": str(c.total),
                 "nontrivial": str(c.nontrivial),
                 **({"exact_total": str(c.exact_total)} if c.exact_total is not None else {})}
                for c in self.per_prime
            ],
        }
        if self.cofactor != 1:
            out["unfactored"] = str(self.cofactor)
        return out


def coloring_report(perm: PermLike, max_rho_iterations=None, exact_counts: bool = True) -> ColoringReport:
    """Determinant, its factorization and p-coloring counts for each prime factor.

    ``total`` is p ** (ord_p(det) + 1).  With ``exact_counts`` the actual
    number of p-colorings of the diagram is also computed from the rank of
    the coloring matrix over Z/p.
    """
    perm = validate(perm)
    det = knot_determinant(perm)
    if max_rho_iterations is None:
        factors, cofactor = factorize(det), 1
    else:
        factors, cofactor = partial_factorize(det, max_iterations=max_rho_iterations)
    matrix = coloring_matrix(perm) if exact_counts and perm.p >= 5 else None
    per_prime = []
    for p, e in factors:
        total = p ** (e + 1)
        exact = None
        if matrix is not None:
            exact = p ** (matrix.shape[1] - rank_mod(matrix, p))
        per_prime.append(PrimeColorings(p, e, total, total - p, exact))
    return ColoringReport(perm.heights, det, factors, per_prime, cofactor)


def ord_p(n: int, p: int) -> int:
    return valuation(n, p)


def colorable_primes(det: int, primes: Sequence[int] = SURVEY_PRIMES) -> list[int]:
    """Primes from ``primes`` dividing ``det`` (divisibility only, no factoring)."""
    return [q for q in primes if det % q == 0]
