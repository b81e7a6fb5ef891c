"""Which peg spacings make all boundary triangles, and the first diagonal, equal in area?

For a right-framed net with pegs ``0 = x_0 < x_1 < ... < x_N = 1`` the
boundary triangles and quadrilaterals have areas

    T_i    = (x_{i+1} - x_i)(x_{i+2} - x_i)(x_{i+2} - x_{i+1}) / 2
    Q_ij   = (x_{i+1} - x_i)(x_{j+1} - x_j)(x_j + x_{j+1} - x_i - x_{i+1}) / 2

:func:`solve_spacing` imposes ``T_i = T_{i+1}`` for every ``i`` and
``Q_02 = Q_13``, and solves symbolically by carrying every ``x_k`` as an
affine form in the two free unknowns ``x_1, x_2``.
:func:`verify_uniqueness_bruteforce` answers the same question by exhaustive
search over a rational grid and shares no code with the solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .areas import spacing_Q, spacing_Tboundary
from .net import Spacing
from .rational import format_rational

__all__ = [
    "Affine",
    "SpacingFamily",
    "SolveOutcome",
    "solve_spacing",
    "claim_formula",
    "constraint_equations",
    "satisfies_constraints",
    "verify_uniqueness_bruteforce",
    "BRUTEFORCE_MAX_N",
    "BRUTEFORCE_MAX_GRID",
]

BRUTEFORCE_MAX_N = 6
BRUTEFORCE_MAX_GRID = 60


@dataclass(frozen=True)
class Affine:
    """``const + c1 * x_1 + c2 * x_2`` with exact coefficients."""

    const: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __add__(self, o: Affine) -> Affine:
        return Affine(self.const + o.const, self.c1 + o.c1, self.c2 + o.c2)

    def __sub__(self, o: Affine) -> Affine:
        return Affine(self.const - o.const, self.c1 - o.c1, self.c2 - o.c2)

    def __mul__(self, k: Fraction | int) -> Affine:
        return Affine(self.const * k, self.c1 * k, self.c2 * k)

    __rmul__ = __mul__

    def __call__(self, x1: Fraction, x2: Fraction) -> Fraction:
        return self.const + self.c1 * x1 + self.c2 * x2

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and self.c1 == 0 and self.c2 == 0

    def ratio_to(self, other: Affine) -> Fraction | None:
        """``k`` with ``self == k * other``, or ``None``."""
        if other.is_zero:
            return None
        pairs = list(zip((self.const, self.c1, self.c2), (other.const, other.c1, other.c2)))
        k = next(s / o for s, o in pairs if o != 0)
        return k if all(s == k * o for s, o in pairs) else None

    def __str__(self) -> str:
        terms = []
        for coef, name in ((self.const, ""), (self.c1, "x_1"), (self.c2, "x_2")):
            if coef == 0:
                continue
            mag = abs(coef)
            body = format_rational(mag) if not name else (name if mag == 1 else f"{format_rational(mag)}*{name}")
            terms.append(("-" if coef < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


X1 = Affine(c1=Fraction(1))
X2 = Affine(c2=Fraction(1))


@dataclass(frozen=True)
class SpacingFamily:
    """Spacings with ``x_2 = relation(x_1)`` for ``lower < x_1 < upper``."""

    relation: Affine
    lower: Fraction
    upper: Fraction

    @property
    def constraint(self) -> str:
        return f"x_2 = {self.relation}"

    def member(self, x1: Fraction) -> Spacing:
        if not self.lower < x1 < self.upper:
            raise ValueError(f"x_1 = {format_rational(x1)} is outside ({self.lower}, {self.upper})")
        return Spacing((Fraction(0), x1, self.relation(x1, Fraction(0)), Fraction(1)))


@dataclass
class SolveOutcome:
    status: str  # unique | one_parameter_family | vacuous | no_admissible_solution
    n: int
    solution: Spacing | None = None
    family: SpacingFamily | None = None
    steps: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        fam = None
        if self.family is not None:
            fam = {
                "constraint": self.family.constraint,
                "x_1_interval": [format_rational(self.family.lower), format_rational(self.family.upper)],
                "interval_open": True,
            }
        return {
            "status": self.status,
            "n": self.n,
            "solution": None if self.solution is None else [format_rational(v) for v in self.solution.values],
            "family": fam,
            "steps": list(self.steps),
            "notes": list(self.notes),
        }


def claim_formula(n: int, x1: Fraction, x2: Fraction, i: int) -> Fraction:
    """``x_i`` implied by the boundary-triangle equalities alone.

    Odd ``i``: ``x_1 + (i-1)/2 * x_2``; even ``i``: ``i/2 * x_2``.
    """
    if not 1 <= i <= n:
        raise IndexError(f"i must lie in 1..{n}, got {i}")
    if i % 2:
        return x1 + Fraction(i - 1, 2) * x2
    return Fraction(i, 2) * x2


def constraint_equations(x) -> list[tuple[str, Fraction, Fraction]]:
    """``(label, lhs, rhs)`` for each equal-area equation imposed on spacing ``x``.

    ``N >= 4``: ``T_i = T_{i+1}`` for ``i = 0..N-3`` plus ``Q_02 = Q_13``;
    ``N = 3``: ``T_0 = T_1`` only; ``N <= 2``: nothing.
    """
    x = list(x)
    n = len(x) - 1
    eqs = [
        (f"T_{i} = T_{i + 1}", spacing_Tboundary(x, i), spacing_Tboundary(x, i + 1))
        for i in range(n - 2)
    ]
    if n >= 4:
        eqs.append(("Q_0,2 = Q_1,3", spacing_Q(x, 0, 2), spacing_Q(x, 1, 3)))
    return eqs


def satisfies_constraints(x) -> bool:
    return all(lhs == rhs for _, lhs, rhs in constraint_equations(x))


def _square_root(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    p, r = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return Fraction(p, r) if p * p == q.numerator and r * r == q.denominator else None


def _propagate(n: int, steps: list[str], notes: list[str]) -> list[Affine]:
    """``x_0 .. x_n`` as affine forms via ``x_{k+1} = x_{k-1} + x_k - x_{k-2}``.

    ``T_{k-2} = T_{k-1}`` factors as
    ``(x_{k+1} - x_{k-2}) (x_{k-1} + x_k - x_{k-2} - x_{k+1}) = 0``; the first
    factor is positive for an increasing spacing, so the second must vanish.
    """
    x = [Affine(), X1, X2]
    for k in range(2, n):
        x.append(x[k - 1] + x[k] - x[k - 2])
        steps.append(f"x_{k + 1} = {x[k + 1]}")
        notes.append(
            f"T_{k - 2} = T_{k - 1}: cancelled x_{k + 1} - x_{k - 2} > 0"
            f" (root x_{k + 1} = x_{k - 2} rejected, spacing strictly increasing)"
        )
    return x


def _solve_first_diagonal(x: list[Affine], steps: list[str], notes: list[str]) -> tuple[Affine, list[Affine]]:
    """Reduce ``Q_02 = Q_13`` to a linear relation; returns it with the cancelled divisors.

    Both sides are products of three affine factors, each a difference
    (or sum of differences) of increasing pegs and therefore positive.
    Proportional factors cancel in pairs; what remains must be
    ``u^2 = c v^2`` with positive ``u, v``, hence ``u = sqrt(c) v``.
    """
    lhs = [x[1] - x[0], x[3] - x[2], x[2] + x[3] - x[0] - x[1]]
    rhs = [x[2] - x[1], x[4] - x[3], x[3] + x[4] - x[1] - x[2]]
    scale = Fraction(1)
    divisors: list[Affine] = []
    for f in list(lhs):
        for g in rhs:
            k = f.ratio_to(g)
            if k is not None and k > 0:
                lhs.remove(f)
                rhs.remove(g)
                scale *= k  # f = k g, so k * g * L' = g * R'  ->  k L' = R'
                divisors.append(g)
                notes.append(f"Q_0,2 = Q_1,3: cancelled positive factor {g}")
                break
    if len(lhs) != 2 or len(rhs) != 2:
        raise ArithmeticError("first-diagonal equation did not reduce to a quadratic")
    u, v = lhs[0], rhs[0]
    if lhs[1].ratio_to(u) != 1 or rhs[1].ratio_to(v) != 1:
        raise ArithmeticError("first-diagonal equation is not of the form u^2 = c v^2")
    root = _square_root(1 / scale)  # scale * u^2 = v^2  ->  u = root * v
    if root is None:
        raise ArithmeticError("first-diagonal equation has no rational solution")
    relation = u - v * root  # == 0
    rhs_text = f"({v})" if root == 1 else f"{format_rational(root)}*({v})"
    notes.append(f"Q_0,2 = Q_1,3: ({u})^2 = {rhs_text}^2 with both bases positive")
    if relation.c2 == 0:
        raise ArithmeticError("first-diagonal relation does not determine x_2")
    x2_of_x1 = Affine(-relation.const / relation.c2, -relation.c1 / relation.c2)
    steps.append(f"x_2 = {x2_of_x1}")
    return x2_of_x1, divisors


def _strict_increase_bounds(forms: list[Affine]) -> tuple[Fraction, Fraction]:
    """Open interval of ``x_1`` on which ``forms`` (affine in x_1 only) strictly increase."""
    lower, upper = Fraction(-10**18), Fraction(10**18)
    for p, q in zip(forms, forms[1:]):
        gap = q - p  # need const + c1 * x1 > 0
        if gap.c1 > 0:
            lower = max(lower, -gap.const / gap.c1)
        elif gap.c1 < 0:
            upper = min(upper, -gap.const / gap.c1)
        elif gap.const <= 0:
            return Fraction(0), Fraction(0)
    return lower, upper


def solve_spacing(n: int) -> SolveOutcome:
    """All spacings of an ``n``-net with equal boundary triangles and ``Q_02 = Q_13``.

    ``n >= 4`` gives the unique equidistant spacing, ``n = 3`` a one-parameter
    family ``x_2 = 1 - x_1``, ``n <= 2`` imposes no equation at all.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = SolveOutcome(status="vacuous", n=n)
    if n <= 2:
        out.notes.append("no quadrilateral and at most one boundary triangle: no equations")
        return out

    x = _propagate(n, out.steps, out.notes)
    if n == 3:
        # x_3 = x_1 + x_2 together with x_3 = 1
        relation = Affine(Fraction(1), Fraction(-1))
        out.steps.append(f"x_2 = {relation}")
        forms = [Affine(), X1, relation, Affine(Fraction(1))]
        lo, hi = _strict_increase_bounds(forms)
        out.status = "one_parameter_family"
        out.family = SpacingFamily(relation, lo, hi)
        out.notes.append(f"strict increase requires {format_rational(lo)} < x_1 < {format_rational(hi)}")
        return out

    out.notes.append("without Q_0,2 = Q_1,3 the forms above leave x_1, x_2 free (two-parameter family)")
    x2_rel, divisors = _solve_first_diagonal(x, out.steps, out.notes)
    # x_n = 1 with x_2 eliminated: linear in x_1
    last = x[n]
    coeff = last.c1 + last.c2 * x2_rel.c1
    const = last.const + last.c2 * x2_rel.const
    if coeff == 0:
        raise ArithmeticError("boundary condition x_N = 1 does not determine x_1")
    x1 = (1 - const) / coeff
    x2 = x2_rel(x1, Fraction(0))
    out.steps.append(f"x_1 = {format_rational(x1)}")
    out.steps.append(f"x_2 = {format_rational(x2)}")
    values = [form(x1, x2) for form in x]

    for k in range(2, n):
        if values[k + 1] - values[k - 2] == 0:
            raise ArithmeticError(f"cancelled divisor x_{k + 1} - x_{k - 2} vanishes")
    for g in divisors:
        if g(x1, x2) == 0:
            raise ArithmeticError(f"cancelled divisor {g} vanishes")

    ok = all(p < q for p, q in zip(values, values[1:])) and values[0] == 0 and values[-1] == 1
    if not ok or not satisfies_constraints(values):
        out.status = "no_admissible_solution"
        out.notes.append("derived values violate monotonicity or an equation")
        return out
    out.status = "unique"
    out.solution = Spacing(tuple(values))
    return out


def verify_uniqueness_bruteforce(n: int, grid_denominator: int) -> list[tuple[Fraction, ...]]:
    """Every increasing ``(x_1, ..., x_{n-1})`` on the grid ``k / grid_denominator``
    that satisfies all equal-area equations, found by exhaustive enumeration.

    Works on integer numerators: with ``x_i = k_i / g`` every area equation
    scales to an integer identity.
    """
    if not 1 <= n <= BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force is limited to 1 <= n <= {BRUTEFORCE_MAX_N}")
    if not 1 <= grid_denominator <= BRUTEFORCE_MAX_GRID:
        raise ValueError(f"brute force is limited to grid denominators <= {BRUTEFORCE_MAX_GRID}")
    g = grid_denominator

    def tri(k, i):
        return (k[i + 1] - k[i]) * (k[i + 2] - k[i]) * (k[i + 2] - k[i + 1])

    def quad(k, i, j):
        return (k[i + 1] - k[i]) * (k[j + 1] - k[j]) * (k[j] + k[j + 1] - k[i] - k[i + 1])

    found = []
    for inner in itertools.combinations(range(1, g), n - 1):
        k = (0, *inner, g)
        if any(tri(k, i) != tri(k, i + 1) for i in range(n - 2)):
            continue
        if n >= 4 and quad(k, 0, 2) != quad(k, 1, 3):
            continue
        found.append(tuple(Fraction(v, g) for v in inner))
    return found
