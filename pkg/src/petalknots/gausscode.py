"""Gauss codes of split petal projections.

The unsigned code depends only on the petal number p.  Walking along the
knot, the p(p-3) crossing visits split into p blocks of p-3 consecutive
visits, one block per petal-projection strand.  Within a block the layer
index runs 0, 1, ..., then back down, and the crossing index within the layer
follows a fixed pattern; a crossing is labelled ``p * layer + index``.

Signing only needs to know which block holds the other visit of the same
crossing, and that block is given by a closed form, so no search is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenPetalNumber, IndexOutOfRange, InvalidPetalNumber, ZeroModulus
from .permutation import PermLike, PetalPermutation, validate


@dataclass(frozen=True)
class UnsignedGaussCode:
    p: int
    entries: tuple[int, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class SignedGaussCode:
    p: int
    entries: tuple[int, ...]
    source: PetalPermutation

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def remainder(k: int, n: int) -> int:
    """Smallest non-negative integer congruent to k mod n."""
    if n < 1:
        raise ZeroModulus(f"modulus must be positive, got {n}")
    return k % n


def _check_petal_number(p: int) -> None:
    if p % 2 == 0:
        raise EvenPetalNumber(f"petal number {p} is even")
    if p < 5:
        raise InvalidPetalNumber(f"petal number {p} has no crossings (need p >= 5)")


def _check_index(p: int, k: int) -> None:
    if not 0 <= k < p * (p - 3):
        raise IndexOutOfRange(f"index {k} outside 0..{p * (p - 3) - 1}")


def seq_L(p: int, k: int) -> int:
    """Layer of the k-th crossing visit: 0, 1, ..., (p-5)/2, (p-5)/2, ..., 0, repeated."""
    _check_petal_number(p)
    r = remainder(k, p - 3)
    return min(r, p - 4 - r)


def seq_a(p: int, k: int) -> int:
    """Offset within a block: (p-3)/2 zeros, then 1, 2, ..., (p-3)/2, repeated."""
    _check_petal_number(p)
    r = remainder(k, p - 3)
    half = (p - 3) // 2
    return 0 if r < half else r - half + 1


def index_n(p: int, k: int) -> int:
    """Index (1..p) of the k-th visited crossing within its layer."""
    _check_petal_number(p)
    _check_index(p, k)
    return remainder((p - 1) // 2 * (k // (p - 3)) + seq_a(p, k), p) + 1


def unsigned_code(p: int) -> UnsignedGaussCode:
    """Petal unsigned Gauss code; empty for the crossingless cases p = 1, 3."""
    if p % 2 == 0:
        raise EvenPetalNumber(f"petal number {p} is even")
    if p < 1:
        raise InvalidPetalNumber(f"petal number must be positive, got {p}")
    if p < 5:
        return UnsignedGaussCode(p, ())
    return UnsignedGaussCode(
        p, tuple(p * seq_L(p, k) + index_n(p, k) for k in range(p * (p - 3))))


def partner(code: UnsignedGaussCode, k: int) -> int:
    """The other index carrying the same crossing label as index k."""
    _check_index(code.p, k)
    first = {}
    for i, c in enumerate(code.entries):
        label = abs(c)
        if label in first:
            j = first[label]
            if i == k:
                return j
            if j == k:
                return i
        else:
            first[label] = i
    raise IndexOutOfRange(f"label at index {k} occurs only once")


def block_shift_d(p: int, k: int) -> int:
    """Twice the a-offset difference between index k and its partner."""
    _check_petal_number(p)
    r = remainder(k, p - 3)
    if r < (p - 3) // 2:
        return p - 3 - 2 * r
    return p - 5 - 2 * r


def block(p: int, k: int) -> int:
    """Petal block holding index k."""
    _check_petal_number(p)
    _check_index(p, k)
    return k // (p - 3)


def partner_block(p: int, k: int) -> int:
    """Petal block holding the partner of index k, without locating it."""
    return remainder(block(p, k) + block_shift_d(p, k), p)


def sign_code(perm: PermLike) -> SignedGaussCode:
    """Petal signed Gauss code: an entry stays positive iff its strand is on top."""
    perm = validate(perm)
    p = perm.p
    unsigned = unsigned_code(p)
    if p < 5:
        return SignedGaussCode(p, (), perm)
    h = perm.heights
    entries = tuple(
        c if h[block(p, k)] < h[partner_block(p, k)] else -c
        for k, c in enumerate(unsigned.entries))
    return SignedGaussCode(p, entries, perm)


def format_code(code) -> str:
    return ",".join(str(c) for c in code)
