"""Vectorized integer kernels over a built net.

All quantities are integer numerators.  With the net's common denominator
``D``, a doubled area ``v`` here means the true area ``v / (2 D^2)`` and a
squared length ``v`` means ``v / D^2``.  Work proceeds in row blocks so peak
memory stays near ``2**20`` elements per temporary regardless of ``N``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .net import Net

_BLOCK_ELEMENTS = 2**20


def cross2(x1, y1, x2, y2, x3, y3):
    """Twice the signed area of a triangle (shoelace on three points)."""
    return x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2)


def shoelace4(x1, y1, x2, y2, x3, y3, x4, y4):
    """Twice the signed area of an ordered quadrilateral."""
    return (x1 * y2 - x2 * y1) + (x2 * y3 - x3 * y2) + (x3 * y4 - x4 * y3) + (x4 * y1 - x1 * y4)


def block_rows(n: int) -> int:
    return max(1, _BLOCK_ELEMENTS // (n + 1))


@dataclass
class QuadBlock:
    """Per-quadrilateral integers for quad rows ``i0 .. i0 + rows - 1``.

    Arrays have shape ``(rows, N)`` indexed by ``(i - i0, j)``; ``valid`` marks
    admissible ``(i, j)`` with ``i + 2 <= j <= N - 1``.  The first ``own``
    rows belong to this block; any further row is overlap with the next block,
    present so that ``(i, j)`` vs ``(i+1, j+1)`` comparisons never straddle a
    block boundary.
    """

    i0: int
    own: int
    valid: np.ndarray
    t: np.ndarray
    tp: np.ndarray
    tbar: np.ndarray
    tbarp: np.ndarray
    q: np.ndarray
    diag_sq: np.ndarray

    @property
    def rows(self) -> int:
        return self.valid.shape[0]


def quad_blocks(net: Net, overlap: int = 1) -> Iterator[QuadBlock]:
    n = net.n
    nrows = n - 2  # quad rows i = 0 .. N-3
    if nrows <= 0:
        return
    X, Y = net.xnum, net.ynum
    step = block_rows(n)
    cols = np.arange(n)
    for r0 in range(0, nrows, step):
        own = min(step, nrows - r0)
        r1 = min(r0 + own + overlap, nrows)
        x00, y00 = X[r0:r1, :n], Y[r0:r1, :n]
        x10, y10 = X[r0 + 1:r1 + 1, :n], Y[r0 + 1:r1 + 1, :n]
        x11, y11 = X[r0 + 1:r1 + 1, 1:], Y[r0 + 1:r1 + 1, 1:]
        x01, y01 = X[r0:r1, 1:], Y[r0:r1, 1:]
        rows = np.arange(r0, r1)[:, None]
        valid = cols[None, :] >= rows + 2
        dx, dy = x01 - x10, y01 - y10
        yield QuadBlock(
            i0=r0,
            own=own,
            valid=valid,
            t=abs(cross2(x00, y00, x10, y10, x01, y01)),
            tp=abs(cross2(x10, y10, x01, y01, x11, y11)),
            tbar=abs(cross2(x00, y00, x10, y10, x11, y11)),
            tbarp=abs(cross2(x00, y00, x01, y01, x11, y11)),
            q=abs(shoelace4(x00, y00, x10, y10, x11, y11, x01, y01)),
            diag_sq=dx * dx + dy * dy,
        )


def boundary_doubled(net: Net) -> np.ndarray:
    """Doubled areas of the boundary triangles ``T_0 .. T_{N-2}``."""
    n = net.n
    if n < 2:
        return np.zeros(0, dtype=net.xnum.dtype)
    i = np.arange(n - 1)
    X, Y = net.xnum, net.ynum
    return abs(cross2(X[i, i + 1], Y[i, i + 1], X[i, i + 2], Y[i, i + 2], X[i + 1, i + 2], Y[i + 1, i + 2]))


@dataclass
class SegmentBlock:
    """Consecutive-vertex differences along lines ``i0 .. i0 + rows - 1``.

    ``ax[r, j], ay[r, j]`` is ``P_{i,j+1} - P_{i,j}``; ``valid`` excludes
    ``j in {i-1, i}`` (``j = N`` never appears).  ``bx, by`` hold ``b_i`` for
    every row (meaningless outside ``1 <= i <= N-1``).
    """

    i0: int
    valid: np.ndarray
    ax: np.ndarray
    ay: np.ndarray
    bx: np.ndarray
    by: np.ndarray


def segment_blocks(net: Net, first: int = 1, last: int | None = None) -> Iterator[SegmentBlock]:
    n = net.n
    last = n - 1 if last is None else last
    if last < first:
        return
    X, Y = net.xnum, net.ynum
    step = block_rows(n)
    cols = np.arange(n)
    for r0 in range(first, last + 1, step):
        r1 = min(r0 + step, last + 1)
        rows = np.arange(r0, r1)
        r = rows[:, None]
        valid = (cols[None, :] != r - 1) & (cols[None, :] != r)
        yield SegmentBlock(
            i0=r0,
            valid=valid,
            ax=X[r0:r1, 1:] - X[r0:r1, :n],
            ay=Y[r0:r1, 1:] - Y[r0:r1, :n],
            bx=X[rows, rows + 1] - X[rows, rows - 1],
            by=Y[rows, rows + 1] - Y[rows, rows - 1],
        )


def first_true(mask: np.ndarray) -> tuple[int, ...] | None:
    """Row-major index of the first ``True`` in ``mask``, or ``None``."""
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    return tuple(int(v) for v in np.unravel_index(flat[0], mask.shape))
