"""Areas of the pieces of a net, their sums and closed forms.

Pieces of quadrilateral ``Q(i, j)``, corners ``P_ij, P_{i+1,j}, P_{i+1,j+1}, P_{i,j+1}``:

* ``T(i, j)``  = P_ij, P_{i+1,j}, P_{i,j+1}       ``T'(i, j)``  = P_{i+1,j}, P_{i,j+1}, P_{i+1,j+1}
* ``Tbar(i, j)`` = P_ij, P_{i+1,j}, P_{i+1,j+1}    ``Tbar'(i, j)`` = P_ij, P_{i,j+1}, P_{i+1,j+1}

and the boundary triangle ``Tboundary(i)`` = P_{i,i+1}, P_{i,i+2}, P_{i+1,i+2}.
"""

from __future__ import annotations

import math
import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from . import _kernel
from .net import Net, NetConfig, Point, build_net, vertex

__all__ = [
    "PIECE_KINDS",
    "PieceId",
    "triangle_area",
    "polygon_area",
    "quad_corners",
    "area_T",
    "area_Tprime",
    "area_Tbar",
    "area_Tbarprime",
    "area_Q",
    "area_Tboundary",
    "piece_area",
    "diagonal_length_sq",
    "quad_ids",
    "total_area",
    "AreaTotals",
    "area_totals",
    "closed_form_total",
    "closed_form_triangle_sum",
    "closed_form_quad_sum",
    "closed_form_sums",
    "envelope",
    "envelope_reference",
    "ENVELOPE_AREA",
    "spacing_T",
    "spacing_Tprime",
    "spacing_Q",
    "spacing_Tboundary",
]

PIECE_KINDS = ("T", "T'", "Tbar", "Tbar'", "Q", "Tboundary")
_PIECE_RE = re.compile(r"^(Tboundary|Tbar'|Tbar|T'|T|Q)\((\d+)(?:,(\d+))?\)$")

ENVELOPE_AREA = Fraction(1, 6)


@dataclass(frozen=True, order=True)
class PieceId:
    kind: str
    i: int
    j: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in PIECE_KINDS:
            raise ValueError(f"unknown piece kind {self.kind!r}")
        if (self.kind == "Tboundary") != (self.j is None):
            raise ValueError("Tboundary takes one index, every other piece two")

    @classmethod
    def parse(cls, text: str) -> PieceId:
        m = _PIECE_RE.match(text.replace(" ", ""))
        if not m:
            raise ValueError(f"not a piece id: {text!r}")
        kind, i, j = m.groups()
        return cls(kind, int(i), None if j is None else int(j))

    def __str__(self) -> str:
        if self.j is None:
            return f"{self.kind}({self.i})"
        return f"{self.kind}({self.i},{self.j})"


def triangle_area(p1: Point, p2: Point, p3: Point) -> Fraction:
    """Unsigned area via the shoelace determinant; zero for collinear points."""
    return abs(_kernel.cross2(p1.x, p1.y, p2.x, p2.y, p3.x, p3.y)) / 2


def polygon_area(points: Sequence[Point]) -> Fraction:
    """Unsigned shoelace area of a simple polygon given in boundary order."""
    s = Fraction(0)
    for k, p in enumerate(points):
        q = points[(k + 1) % len(points)]
        s += p.x * q.y - q.x * p.y
    return abs(s) / 2


def _check_quad(config: NetConfig, i: int, j: int) -> None:
    if not (0 <= i and i + 1 < j and j + 1 <= config.n):
        raise IndexError(f"quadrilateral needs 0 <= i < i+1 < j < j+1 <= N, got ({i}, {j}) with N={config.n}")


def quad_corners(config: NetConfig, i: int, j: int) -> tuple[Point, Point, Point, Point]:
    """``P_ij, P_{i+1,j}, P_{i+1,j+1}, P_{i,j+1}`` in boundary order."""
    _check_quad(config, i, j)
    return (
        vertex(config, i, j),
        vertex(config, i + 1, j),
        vertex(config, i + 1, j + 1),
        vertex(config, i, j + 1),
    )


def area_T(config: NetConfig, i: int, j: int) -> Fraction:
    p00, p10, _, p01 = quad_corners(config, i, j)
    return triangle_area(p00, p10, p01)


def area_Tprime(config: NetConfig, i: int, j: int) -> Fraction:
    _, p10, p11, p01 = quad_corners(config, i, j)
    return triangle_area(p10, p01, p11)


def area_Tbar(config: NetConfig, i: int, j: int) -> Fraction:
    p00, p10, p11, _ = quad_corners(config, i, j)
    return triangle_area(p00, p10, p11)


def area_Tbarprime(config: NetConfig, i: int, j: int) -> Fraction:
    p00, _, p11, p01 = quad_corners(config, i, j)
    return triangle_area(p00, p01, p11)


def area_Q(config: NetConfig, i: int, j: int) -> Fraction:
    return polygon_area(quad_corners(config, i, j))


def area_Tboundary(config: NetConfig, i: int) -> Fraction:
    if not 0 <= i <= config.n - 2:
        raise IndexError(f"boundary triangle needs 0 <= i <= N-2, got {i} with N={config.n}")
    return triangle_area(vertex(config, i, i + 1), vertex(config, i, i + 2), vertex(config, i + 1, i + 2))


_AREA_BY_KIND: dict[str, Callable[..., Fraction]] = {
    "T": area_T,
    "T'": area_Tprime,
    "Tbar": area_Tbar,
    "Tbar'": area_Tbarprime,
    "Q": area_Q,
}


def piece_area(config: NetConfig, piece: PieceId | str) -> Fraction:
    if isinstance(piece, str):
        piece = PieceId.parse(piece)
    if piece.kind == "Tboundary":
        return area_Tboundary(config, piece.i)
    return _AREA_BY_KIND[piece.kind](config, piece.i, piece.j)


def diagonal_length_sq(config: NetConfig, i: int, j: int) -> Fraction:
    """Squared length of the diagonal ``P_{i,j+1} P_{i+1,j}`` of ``Q(i, j)``."""
    _check_quad(config, i, j)
    return (vertex(config, i, j + 1) - vertex(config, i + 1, j)).norm_sq()


def quad_ids(n: int) -> list[tuple[int, int]]:
    """All admissible ``(i, j)`` in row-major order."""
    return [(i, j) for i in range(n - 2) for j in range(i + 2, n)]


# closed forms (equidistant pegs, frame factor a)


def closed_form_sums(n: int) -> tuple[Fraction, Fraction]:
    """``1 + ... + n`` and ``1^2 + ... + n^2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n * (n + 1), 2), Fraction(n * (n + 1) * (2 * n + 1), 6)


def closed_form_triangle_sum(n: int, a: Fraction = Fraction(1)) -> Fraction:
    return a * Fraction(n - 1, n**3)


def closed_form_quad_sum(n: int, a: Fraction = Fraction(1)) -> Fraction:
    return a * Fraction((n - 1) * (n - 2) * (n + 3), 6 * n**3)


def closed_form_total(n: int, a: Fraction = Fraction(1)) -> Fraction:
    return a * Fraction((n - 1) * (n + 1), 6 * n * n)


# general spacing, right frame


def spacing_T(x: Sequence[Fraction], i: int, j: int) -> Fraction:
    return (x[i + 1] - x[i]) * (x[j] - x[i]) * (x[j + 1] - x[j]) / 2


def spacing_Tprime(x: Sequence[Fraction], i: int, j: int) -> Fraction:
    return (x[i + 1] - x[i]) * (x[j + 1] - x[i + 1]) * (x[j + 1] - x[j]) / 2


def spacing_Q(x: Sequence[Fraction], i: int, j: int) -> Fraction:
    return (x[i + 1] - x[i]) * (x[j + 1] - x[j]) * (x[j] + x[j + 1] - x[i] - x[i + 1]) / 2


def spacing_Tboundary(x: Sequence[Fraction], i: int) -> Fraction:
    return (x[i + 1] - x[i]) * (x[i + 2] - x[i]) * (x[i + 2] - x[i + 1]) / 2


@dataclass(frozen=True)
class AreaTotals:
    triangle_sum: Fraction
    quad_sum: Fraction
    per_diagonal: dict[int, Fraction]

    @property
    def total(self) -> Fraction:
        return self.triangle_sum + self.quad_sum


def area_totals(net: Net | NetConfig) -> AreaTotals:
    """Exact sums of boundary triangles, of quadrilaterals, and per diagonal ``d = j - i``."""
    if isinstance(net, NetConfig):
        net = build_net(net)
    n = net.n
    den = 2 * net.denominator**2
    tri = sum(_kernel.boundary_doubled(net).tolist())
    per_d = [0] * (n + 1)
    for blk in _kernel.quad_blocks(net, overlap=0):
        q = blk.q
        for r in range(blk.own):
            i = blk.i0 + r
            row = q[r, i + 2:].tolist()
            for off, v in enumerate(row):
                per_d[off + 2] += v
    per_diagonal = {d: Fraction(per_d[d], den) for d in range(2, n)}
    return AreaTotals(Fraction(tri, den), Fraction(sum(per_d), den), per_diagonal)


def total_area(config: NetConfig | Net) -> Fraction:
    """Area under the broken line ``P_01, P_12, ..., P_{N-1,N}`` by exact summation.

    For equidistant pegs the sum is also checked against the closed form.
    """
    net = config if isinstance(config, Net) else build_net(config)
    total = area_totals(net).total
    cfg = net.config
    if cfg.is_equidistant:
        expected = closed_form_total(cfg.n, cfg.frame.a)
        if total != expected:
            raise ArithmeticError(f"summed area {total} disagrees with closed form {expected}")
    return total


def envelope(x: float) -> float:
    """Envelope ``y = x - 2 sqrt(x) + 1`` of the right-framed equidistant family."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("envelope is defined on [0, 1]")
    return x - 2.0 * math.sqrt(x) + 1.0


def envelope_reference() -> tuple[Callable[[float], float], Fraction]:
    """The envelope curve (floating point, for display) and its exact area 1/6."""
    return envelope, ENVELOPE_AREA

