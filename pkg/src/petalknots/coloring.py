"""Arcs of a signed Gauss code and the integer coloring matrix.

Rows of the coloring matrix are crossings (label - 1) and columns are arcs
(arc number - 1).  Row n encodes ``2*over - under_in - under_out``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyCode, InternalInconsistency, NoNegativeEntries, TooSmall

# A ColoringMatrix is a read-only square int64 ndarray.
ColoringMatrix = np.ndarray


@dataclass(frozen=True)
class ArcDecomposition:
    arcs: tuple[tuple[int, ...], ...]
    rotation_offset: int

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __getitem__(self, i):
        return self.arcs[i]


def split_arcs(code) -> ArcDecomposition:
    """Cut the cyclic code at every negative entry, keeping both endpoints.

    Traversal starts at the first negative entry, so arc 1 begins there and
    the last arc wraps around the end of the code back to it.
    """
    entries = tuple(code)
    if not entries:
        raise EmptyCode("Gauss code is empty (crossingless diagram)")
    start = next((i for i, c in enumerate(entries) if c < 0), None)
    if start is None:
        raise NoNegativeEntries("Gauss code has no undercrossings")
    order = entries[start:] + entries[:start]
    arcs = []
    current = [order[0]]
    for c in order[1:]:
        current.append(c)
        if c < 0:
            arcs.append(tuple(current))
            current = [c]
    current.append(order[0])
    arcs.append(tuple(current))
    return ArcDecomposition(tuple(arcs), start)


def build_matrix(code) -> ColoringMatrix:
    """Coloring matrix of a signed Gauss code.

    Contributions accumulate, so a crossing whose over-arc is also one of
    its under-arcs gets ``2 - 1`` in that column.
    """
    arcs = split_arcs(code)
    n = len(tuple(code)) // 2
    m = np.zeros((n, n), dtype=np.int64)
    over_count = np.zeros(n, dtype=np.int64)
    for col, arc in enumerate(arcs):
        m[-arc[0] - 1, col] -= 1
        m[-arc[-1] - 1, col] -= 1
        for c in arc[1:-1]:
            if c < 0:
                raise InternalInconsistency(f"negative entry {c} inside arc {col + 1}")
            m[c - 1, col] += 2
            over_count[c - 1] += 1
    bad = np.flatnonzero(over_count != 1)
    if bad.size:
        raise InternalInconsistency(
            f"crossing {bad[0] + 1} is passed over {over_count[bad[0]]} times")
    m.setflags(write=False)
    return m


def first_minor(matrix) -> np.ndarray:
    """Strike the first row and column."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise TooSmall(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] <= 1:
        raise TooSmall("matrix must be at least 2x2 to have a first minor")
    return m[1:, 1:]


def minor(matrix, i: int, j: int) -> np.ndarray:
    """Strike row i and column j (0-based)."""
    m = np.asarray(matrix)
    return np.delete(np.delete(m, i, axis=0), j, axis=1)


def format_matrix(matrix) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in np.asarray(matrix))
