"""Petal permutations and the moves that preserve the knot they describe.

A petal permutation lists strand heights (1 is the topmost strand) in the
order the petals are met while walking around the diagram.  Only odd lengths
give knots; an even number of petals closes up into a link.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import Empty, EvenLength, NotAPermutation


@dataclass(frozen=True)
class PetalPermutation:
    heights: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.heights)

    def __len__(self) -> int:
        return len(self.heights)

    def __iter__(self):
        return iter(self.heights)

    def __getitem__(self, i):
        return self.heights[i]

    def __str__(self) -> str:
        return format_permutation(self)


PermLike = Union[PetalPermutation, Sequence[int]]


def validate(raw: Iterable[int]) -> PetalPermutation:
    """Check that ``raw`` is an odd-length permutation of 1..p."""
    if isinstance(raw, PetalPermutation):
        return raw
    heights = tuple(raw)
    if not heights:
        raise Empty("petal permutation is empty")
    try:
        heights = tuple(_as_int(h) for h in heights)
    except (TypeError, ValueError) as exc:
        raise NotAPermutation(f"non-integer height in {list(raw)!r}") from exc
    p = len(heights)
    if sorted(heights) != list(range(1, p + 1)):
        raise NotAPermutation(
            f"{list(heights)} is not a permutation of 1..{p}")
    if p % 2 == 0:
        raise EvenLength(
            f"{list(heights)} has an even number of petals ({p}); "
            "that describes a link, not a knot")
    return PetalPermutation(heights)


def _as_int(h) -> int:
    if isinstance(h, bool):
        raise TypeError(h)
    i = int(h)
    if i != h:
        raise ValueError(h)
    return i


def parse_permutation(text: str) -> PetalPermutation:
    """Parse ``"1,3,5,2,4"`` (brackets and spaces tolerated)."""
    cleaned = text.strip().strip("()[]")
    if not cleaned:
        raise Empty("petal permutation is empty")
    try:
        values = [int(tok) for tok in cleaned.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise NotAPermutation(f"cannot parse {text!r} as integers") from exc
    return validate(values)


def format_permutation(perm: PermLike) -> str:
    return ",".join(str(h) for h in perm)


def rotate_basepoint(perm: PermLike, s: int) -> PetalPermutation:
    perm = validate(perm)
    h = perm.heights
    s %= len(h)
    return PetalPermutation(h[s:] + h[:s])


def canonical(perm: PermLike) -> PetalPermutation:
    """Rotate so the permutation starts with the top strand."""
    perm = validate(perm)
    return rotate_basepoint(perm, perm.heights.index(1))


def flip_vertical(perm: PermLike) -> PetalPermutation:
    """Turn the projection upside down: height h becomes p + 1 - h."""
    perm = validate(perm)
    p = perm.p
    return PetalPermutation(tuple(p + 1 - h for h in perm.heights))


def shift_heights(perm: PermLike, t: int) -> PetalPermutation:
    """Cyclically relabel heights, moving the bottom strand(s) to the top."""
    perm = validate(perm)
    p = perm.p
    return PetalPermutation(tuple((h - 1 + t) % p + 1 for h in perm.heights))


def _reducible_index(heights: Sequence[int]) -> Optional[int]:
    p = len(heights)
    if p < 3:
        return None
    for i in range(p):
        if abs(heights[i] - heights[(i + 1) % p]) == 1:
            return i
    return None


def reduce_once(perm: PermLike) -> Optional[PetalPermutation]:
    """Cancel one petal whose two heights are consecutive integers.

    The leftmost cyclically adjacent pair is removed and the heights above
    the pair are relabelled down by two.  Returns None when no pair exists.
    """
    perm = validate(perm)
    h = perm.heights
    i = _reducible_index(h)
    if i is None:
        return None
    p = len(h)
    j = (i + 1) % p
    top = max(h[i], h[j])
    rest = [h[k] for k in range(p) if k != i and k != j]
    return PetalPermutation(tuple(x - 2 if x > top else x for x in rest))


def reduce_fully(perm: PermLike) -> PetalPermutation:
    """Cancel petals until no height shift exposes a cancellable pair.

    No claim is made that the result has minimal petal number.
    """
    cur = validate(perm)
    while True:
        nxt = reduce_once(cur)
        if nxt is not None:
            cur = nxt
            continue
        # basepoint rotations cannot create a new pair because adjacency is
        # already cyclic, so only height shifts need searching
        for t in range(1, cur.p):
            nxt = reduce_once(shift_heights(cur, t))
            if nxt is not None:
                break
        if nxt is None:
            return cur
        cur = nxt


def random_permutation(p: int, seed=None) -> PetalPermutation:
    """Uniform random petal permutation of length ``p``.

    ``seed`` may be anything accepted by :class:`random.Random` or an
    existing ``random.Random`` instance.
    """
    if p < 1:
        raise Empty(f"petal number must be positive, got {p}")
    if p % 2 == 0:
        raise EvenLength(f"petal number {p} is even")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    heights = list(range(1, p + 1))
    rng.shuffle(heights)
    return PetalPermutation(tuple(heights))
