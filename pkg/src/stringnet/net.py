"""Line nets: frames, spacings, intercepts and the vertex lattice.

Line ``l_i`` joins the peg ``X_i = (x_i a, x_i b)`` on the slanted axis to the
peg ``Y_i = (0, 1 - x_i)`` on the vertical axis.  For the right-angled frame
``(a, b) = (1, 0)``; ``x_i`` is the spacing sequence (``i/N`` when equidistant).

Two lines ``l_i`` and ``l_j`` meet at

    P_ij = (a x_i x_j,  (1 - x_i)(1 - x_j) + b x_i x_j)

which reduces to ``(a ij, (N-i)(N-j) + b ij) / N^2`` for equidistant pegs and to
``(x_i x_j, (x_i - 1)(x_j - 1))`` for the right frame.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .rational import approximate_real, as_rational, format_rational

__all__ = [
    "ConfigError",
    "FrameParams",
    "RIGHT_FRAME",
    "Spacing",
    "NetConfig",
    "Point",
    "Vec2",
    "Net",
    "intercepts",
    "vertex",
    "build_net",
    "segment_vector_a",
    "segment_vector_b",
    "segment_length_sq",
    "line_through_points",
    "intersect_lines",
]

# int64 is used for the lattice only when every numerator is below this bound;
# shoelace sums of four products then stay under 2**63.
_INT64_COORD_BOUND = 2**29


class ConfigError(ValueError):
    """Invalid frame, spacing or net configuration."""


@dataclass(frozen=True)
class FrameParams:
    """Direction ``(a, b)`` of the slanted axis; ``(cos t, sin t)`` up to scale."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a <= 0:
            raise ConfigError(f"frame a must be positive, got {format_rational(self.a)}")

    @classmethod
    def from_angle(cls, theta: float, max_denominator: int = 10**6) -> FrameParams:
        if not -math.pi / 2 < theta < math.pi / 2:
            raise ConfigError("theta must lie in (-pi/2, pi/2)")
        return cls(
            approximate_real(math.cos(theta), max_denominator),
            approximate_real(math.sin(theta), max_denominator),
        )

    @property
    def is_right(self) -> bool:
        return self.a == 1 and self.b == 0

    def mirrored(self) -> FrameParams:
        """The frame slanted by ``-theta``: obtuse if this one is acute."""
        return FrameParams(self.a, -self.b)


RIGHT_FRAME = FrameParams()


@dataclass(frozen=True)
class Spacing:
    """Peg positions ``x_0 = 0 < x_1 < ... < x_N = 1``."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vals = tuple(as_rational(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 2:
            raise ConfigError("a spacing needs at least the two endpoints 0 and 1")
        if vals[0] != 0 or vals[-1] != 1:
            raise ConfigError("spacing must start at 0 and end at 1")
        for i in range(len(vals) - 1):
            if not vals[i] < vals[i + 1]:
                raise ConfigError(
                    f"spacing must be strictly increasing: x_{i} = {format_rational(vals[i])}"
                    f" >= x_{i + 1} = {format_rational(vals[i + 1])}"
                )

    @classmethod
    def equidistant(cls, n: int) -> Spacing:
        return cls(tuple(Fraction(i, n) for i in range(n + 1)))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def is_equidistant(self) -> bool:
        n = self.n
        return all(x == Fraction(i, n) for i, x in enumerate(self.values))

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class NetConfig:
    n: int
    frame: FrameParams = RIGHT_FRAME
    spacing: Spacing = None  # type: ignore[assignment]  # filled in as equidistant

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"n must be a positive integer, got {self.n!r}")
        if self.spacing is None:
            object.__setattr__(self, "spacing", Spacing.equidistant(self.n))
        elif not isinstance(self.spacing, Spacing):
            object.__setattr__(self, "spacing", Spacing(tuple(self.spacing)))
        if self.spacing.n != self.n:
            raise ConfigError(
                f"spacing has {len(self.spacing)} entries, expected n + 1 = {self.n + 1}"
            )
        if self.frame.b != 0 and not self.spacing.is_equidistant:
            raise ConfigError("a slanted frame (b != 0) requires equidistant spacing")

    @property
    def is_equidistant(self) -> bool:
        return self.spacing.is_equidistant

    @property
    def is_right(self) -> bool:
        return self.frame.is_right

    def with_frame(self, frame: FrameParams) -> NetConfig:
        return NetConfig(self.n, frame, self.spacing)


@dataclass(frozen=True, slots=True)
class Vec2:
    dx: Fraction
    dy: Fraction

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __mul__(self, k: Fraction | int) -> Vec2:
        return Vec2(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def norm_sq(self) -> Fraction:
        return self.dx * self.dx + self.dy * self.dy

    def __str__(self) -> str:
        return f"({format_rational(self.dx)}, {format_rational(self.dy)})"


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __sub__(self, other: Point) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec2) -> Point:
        return Point(self.x + v.dx, self.y + v.dy)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def _check_index(config: NetConfig, *idx: int) -> None:
    for i in idx:
        if not 0 <= i <= config.n:
            raise IndexError(f"line index {i} outside 0..{config.n}")


def intercepts(config: NetConfig, i: int) -> tuple[Point, Point]:
    """``(X_i, Y_i)``: where ``l_i`` meets the slanted and the vertical axis."""
    _check_index(config, i)
    x = config.spacing[i]
    a, b = config.frame.a, config.frame.b
    return Point(x * a, x * b), Point(Fraction(0), 1 - x)


def vertex(config: NetConfig, i: int, j: int) -> Point:
    """Intersection ``P_ij`` of lines ``l_i`` and ``l_j`` (closed form)."""
    _check_index(config, i, j)
    if i == j:
        raise ValueError(f"l_{i} does not meet itself in a single point")
    xi, xj = config.spacing[i], config.spacing[j]
    a, b = config.frame.a, config.frame.b
    return Point(a * xi * xj, (1 - xi) * (1 - xj) + b * xi * xj)


def segment_vector_a(config: NetConfig, i: int, j: int) -> Vec2:
    """``P_{i,j+1} - P_{i,j}``; defined for ``j`` not in ``{i-1, i, N}``."""
    _check_index(config, i, j)
    if j in (i - 1, i, config.n):
        raise ValueError(f"segment a(i={i}, j={j}) is undefined for j in {{i-1, i, N}}")
    return vertex(config, i, j + 1) - vertex(config, i, j)


def segment_vector_b(config: NetConfig, i: int) -> Vec2:
    """``P_{i,i+1} - P_{i,i-1}``: the segment of ``l_i`` that straddles no vertex."""
    if not 1 <= i <= config.n - 1:
        raise IndexError(f"b(i) needs 1 <= i <= N-1, got i={i} with N={config.n}")
    return vertex(config, i, i + 1) - vertex(config, i, i - 1)


def segment_length_sq(config: NetConfig, i: int) -> Fraction:
    """``(i^2 + (N-i)^2) / N^2`` for line ``l_i`` of a right-framed equidistant net.

    This is the squared length of ``l_i`` from peg to peg.  The line splits into
    ``N`` equal units (one doubled segment), so each ordinary segment has
    squared length ``N^2`` times smaller; both depend on ``i`` only through
    ``{i, N - i}``.
    """
    if not (config.is_right and config.is_equidistant):
        raise ConfigError("segment_length_sq is defined for right-framed equidistant nets only")
    n = config.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"segment length needs 1 <= i <= N-1, got i={i} with N={n}")
    return Fraction(i * i + (n - i) * (n - i), n * n)


def line_through_points(p: Point, q: Point) -> tuple[Fraction, Fraction]:
    """Slope and y-intercept of the line through ``p`` and ``q``."""
    if p.x == q.x:
        raise ValueError(f"line through {p} and {q} is vertical")
    slope = (q.y - p.y) / (q.x - p.x)
    return slope, p.y - slope * p.x


def intersect_lines(config: NetConfig, i: int, j: int) -> Point:
    """Independent route to ``P_ij``: build both lines from their pegs, solve 2x2.

    ``l_0`` runs along the vertical axis ``x = 0`` and is handled separately.
    """
    if i == j:
        raise ValueError("identical lines")
    lines = []
    for k in (i, j):
        X, Y = intercepts(config, k)
        lines.append(None if X.x == Y.x else line_through_points(X, Y))
    (li, lj) = lines
    if li is None or lj is None:
        m, c = lj if li is None else li
        return Point(Fraction(0), c)
    (m1, c1), (m2, c2) = li, lj
    # m1 x - y = -c1, m2 x - y = -c2 by Cramer's rule
    det = m2 - m1
    if det == 0:
        raise ValueError(f"l_{i} and l_{j} are parallel")
    x = (c1 - c2) / det
    y = (m2 * c1 - m1 * c2) / det
    return Point(x, y)


class _VertexMap(Mapping):
    """Read-only ``{(i, j): P_ij}`` view over a net's lattice, ``i != j``.

    Either key order is accepted; iteration yields the canonical ``i < j`` keys.
    """

    def __init__(self, net: Net) -> None:
        self._net = net

    def __getitem__(self, key: tuple[int, int]) -> Point:
        i, j = key
        n = self._net.config.n
        if i == j or not (0 <= i <= n and 0 <= j <= n):
            raise KeyError(key)
        return self._net.vertex(i, j)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        n = self._net.config.n
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                yield (i, j)

    def __len__(self) -> int:
        n = self._net.config.n
        return n * (n + 1) // 2


@dataclass(frozen=True, eq=False)
class Net:
    """The complete intersection lattice of ``l_0 .. l_N``.

    Coordinates are stored as integer numerators over one shared denominator,
    ``P_ij = (xnum[i, j], ynum[i, j]) / denominator``.  The arrays are dense and
    symmetric; the diagonal carries no meaning.  They are int64 when the
    coordinate bound proves no overflow is possible downstream, and Python
    ints (object dtype) otherwise.
    """

    config: NetConfig
    denominator: int
    xnum: np.ndarray = field(repr=False)
    ynum: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def vertices(self) -> Mapping[tuple[int, int], Point]:
        return _VertexMap(self)

    def vertex(self, i: int, j: int) -> Point:
        if i == j:
            raise ValueError(f"l_{i} does not meet itself in a single point")
        _check_index(self.config, i, j)
        d = self.denominator
        return Point(Fraction(int(self.xnum[i, j]), d), Fraction(int(self.ynum[i, j]), d))

    def __len__(self) -> int:
        return len(self.vertices)


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def build_net(config: NetConfig) -> Net:
    """Materialize every ``P_ij`` exactly over a common denominator."""
    xs = config.spacing.values
    a, b = config.frame.a, config.frame.b
    g = _lcm(x.denominator for x in xs)
    k = [int(x * g) for x in xs]
    L = _lcm((a.denominator, b.denominator))
    A = a.numerator * (L // a.denominator)
    B = b.numerator * (L // b.denominator)
    bound = g * g * (abs(A) + L + abs(B))
    dtype = np.int64 if bound < _INT64_COORD_BOUND else object

    kk = np.array(k, dtype=dtype)
    cc = np.array([g - v for v in k], dtype=dtype)
    prod = np.multiply.outer(kk, kk)
    xnum = prod * A
    ynum = np.multiply.outer(cc, cc) * L + prod * B
    xnum.setflags(write=False)
    ynum.setflags(write=False)
    return Net(config, g * g * L, xnum, ynum)
