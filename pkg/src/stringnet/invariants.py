"""Exact checks of the net's symmetry properties.

Each check scans every admissible index (vectorized over the integer lattice)
and returns a :class:`PropertyEntry`.  Witness lists are kept in full for
small nets and cut down to the first violation above ``WITNESS_FULL_MAX_N``;
the verdict always covers the whole net.

Labels used in witnesses: piece ids such as ``T(0,2)``, ``Q(1,3)``,
``Tboundary(0)``; vectors ``a(i,j)`` = P_{i,j+1} - P_ij and ``b(i)`` =
P_{i,i+1} - P_{i,i-1}; squared lengths ``d(i,j)`` (diagonal of ``Q(i,j)``)
and ``s(i)`` (ordinary segment on line ``i``); ``total(a,b)`` for the area
of a whole net.  A ``2*`` prefix doubles the labelled value.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernel
from .areas import area_totals
from .net import Net, Vec2, build_net
from .rational import format_rational

__all__ = [
    "WITNESS_FULL_MAX_N",
    "PROPERTY_NAMES",
    "Witness",
    "Violation",
    "PropertyEntry",
    "PropertyReport",
    "check_C1",
    "check_C2",
    "check_C3",
    "check_C4",
    "check_triangulation_independence",
    "check_diagonal_identity",
    "check_b_equals_2a",
    "check_s_symmetry",
    "check_acute_obtuse_area",
    "check_all",
]

WITNESS_FULL_MAX_N = 12

PROPERTY_NAMES = (
    "C1",
    "C2",
    "C3",
    "C4",
    "triangulation_independence",
    "diagonal_identity",
    "b_equals_2a",
    "s_symmetry",
    "acute_obtuse_area",
)

Value = Fraction | Vec2


def _value_json(v: Value):
    if isinstance(v, Vec2):
        return [format_rational(v.dx), format_rational(v.dy)]
    return format_rational(v)


@dataclass(frozen=True)
class Witness:
    pieces: tuple[str, ...]
    values: tuple[Value, ...]

    def to_dict(self) -> dict:
        return {"pieces": list(self.pieces), "values": [_value_json(v) for v in self.values]}


@dataclass(frozen=True)
class Violation:
    lhs_pieces: tuple[str, ...]
    lhs: Value
    rhs_pieces: tuple[str, ...]
    rhs: Value

    def to_dict(self) -> dict:
        return {
            "lhs_pieces": list(self.lhs_pieces),
            "lhs": _value_json(self.lhs),
            "rhs_pieces": list(self.rhs_pieces),
            "rhs": _value_json(self.rhs),
        }


@dataclass
class PropertyEntry:
    holds: bool = True
    witnesses: list[Witness] = field(default_factory=list)
    first_violation: Violation | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "first_violation": None if self.first_violation is None else self.first_violation.to_dict(),
        }


class _Builder:
    def __init__(self, keep: bool) -> None:
        self.keep = keep
        self.entry = PropertyEntry()

    def witness(self, pieces, values) -> None:
        if self.keep:
            self.entry.witnesses.append(Witness(tuple(pieces), tuple(values)))

    def violate(self, lhs_pieces, lhs, rhs_pieces, rhs) -> None:
        e = self.entry
        e.holds = False
        if e.first_violation is None:
            e.first_violation = Violation(tuple(lhs_pieces), lhs, tuple(rhs_pieces), rhs)
            if not self.keep:
                e.witnesses.append(Witness(tuple(lhs_pieces) + tuple(rhs_pieces), (lhs, rhs)))


@dataclass
class PropertyReport:
    entries: dict[str, PropertyEntry]

    def __getitem__(self, name: str) -> PropertyEntry:
        return self.entries[name]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries.values())

    def failed(self) -> list[str]:
        return [k for k, e in self.entries.items() if not e.holds]

    def to_dict(self) -> dict:
        return {k: e.to_dict() for k, e in self.entries.items()}


def _keep(net: Net, keep: bool | None) -> bool:
    return net.n <= WITNESS_FULL_MAX_N if keep is None else keep


def _area(net: Net, doubled) -> Fraction:
    return Fraction(int(doubled), 2 * net.denominator**2)


def _length_sq(net: Net, v) -> Fraction:
    return Fraction(int(v), net.denominator**2)


def _vec(net: Net, dx, dy) -> Vec2:
    d = net.denominator
    return Vec2(Fraction(int(dx), d), Fraction(int(dy), d))


def _ref_columns(valid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Index of the first admissible ``j`` in each row, and whether one exists."""
    return valid.argmax(axis=1), valid.any(axis=1)


def check_C1(net: Net, keep: bool | None = None) -> PropertyEntry:
    """Segments on every inner line are equal except ``b(i)``, which is twice as long."""
    out = _Builder(_keep(net, keep))
    for blk in _kernel.segment_blocks(net):
        ref, has = _ref_columns(blk.valid)
        r_idx = np.arange(len(ref))
        rx, ry = blk.ax[r_idx, ref], blk.ay[r_idx, ref]
        bad_a = blk.valid & ((blk.ax != rx[:, None]) | (blk.ay != ry[:, None]))
        bad_b = has & ((blk.bx != 2 * rx) | (blk.by != 2 * ry))
        bad_rows = bad_a.any(axis=1) | bad_b
        rows = range(len(ref)) if out.keep else np.flatnonzero(bad_rows)[:1]
        for r in rows:
            i = blk.i0 + int(r)
            if not has[r]:
                continue
            j0 = int(ref[r])
            a_ref = _vec(net, rx[r], ry[r])
            b = _vec(net, blk.bx[r], blk.by[r])
            cols = [int(j) for j in np.flatnonzero(blk.valid[r])]
            out.witness(
                [f"a({i},{j})" for j in cols] + [f"b({i})"],
                [_vec(net, blk.ax[r, j], blk.ay[r, j]) for j in cols] + [b],
            )
            if bad_rows[r]:
                hit = _kernel.first_true(bad_a[r])
                if hit is not None:
                    j = hit[0]
                    out.violate([f"a({i},{j0})"], a_ref, [f"a({i},{j})"], _vec(net, blk.ax[r, j], blk.ay[r, j]))
                else:
                    out.violate([f"b({i})"], b, [f"2*a({i},{j0})"], a_ref * 2)
    return out.entry


def check_b_equals_2a(net: Net, keep: bool | None = None) -> PropertyEntry:
    """``b(i) = 2 a(i,j)`` for every inner line ``i`` and every admissible ``j``."""
    out = _Builder(_keep(net, keep))
    for blk in _kernel.segment_blocks(net):
        bad = blk.valid & ((2 * blk.ax != blk.bx[:, None]) | (2 * blk.ay != blk.by[:, None]))
        if out.keep:
            cells = [tuple(int(v) for v in c) for c in np.argwhere(blk.valid)]
        else:
            hit = _kernel.first_true(bad)
            cells = [] if hit is None else [hit]
        for r, j in cells:
            i = blk.i0 + r
            b = _vec(net, blk.bx[r], blk.by[r])
            a2 = _vec(net, blk.ax[r, j], blk.ay[r, j]) * 2
            out.witness([f"b({i})", f"2*a({i},{j})"], [b, a2])
            if bad[r, j]:
                out.violate([f"b({i})"], b, [f"2*a({i},{j})"], a2)
    return out.entry


def check_C2(net: Net, keep: bool | None = None) -> PropertyEntry:
    """Cutting each quadrilateral along ``P_{i+1,j} P_{i,j+1}`` gives equal areas."""
    out = _Builder(_keep(net, keep))
    for blk in _kernel.quad_blocks(net, overlap=0):
        bad = blk.valid & (blk.t != blk.tp)
        cells = np.argwhere(blk.valid) if out.keep else ([] if not bad.any() else [_kernel.first_true(bad)])
        for r, j in cells:
            r, j = int(r), int(j)
            i = blk.i0 + r
            t, tp = _area(net, blk.t[r, j]), _area(net, blk.tp[r, j])
            out.witness([f"T({i},{j})", f"T'({i},{j})"], [t, tp])
            if bad[r, j]:
                out.violate([f"T({i},{j})"], t, [f"T'({i},{j})"], tp)
    return out.entry


def _diagonal_chain(net: Net, out: _Builder, attr: str, label: str, convert) -> None:
    """Compare ``attr[i, j]`` with ``attr[i+1, j+1]`` along every diagonal."""
    n = net.n
    kept: dict[tuple[int, int], Fraction] = {}
    for blk in _kernel.quad_blocks(net, overlap=1):
        arr = getattr(blk, attr)
        pairs = min(blk.own, blk.rows - 1)
        if pairs > 0:
            lhs = arr[:pairs, : n - 1]
            rhs = arr[1 : pairs + 1, 1:]
            bad = blk.valid[:pairs, : n - 1] & (lhs != rhs)
            hit = _kernel.first_true(bad)
            if hit is not None and out.entry.first_violation is None:
                r, j = hit
                i = blk.i0 + r
                out.violate(
                    [f"{label}({i},{j})"], convert(net, lhs[r, j]),
                    [f"{label}({i + 1},{j + 1})"], convert(net, rhs[r, j]),
                )
        if out.keep:
            for r in range(blk.own):
                i = blk.i0 + r
                for j in range(i + 2, n):
                    kept[(i, j)] = convert(net, arr[r, j])
    if out.keep:
        for d in range(2, n):
            ids = [(i, i + d) for i in range(n - d)]
            out.witness([f"{label}({i},{j})" for i, j in ids], [kept[k] for k in ids])


def check_C3(net: Net, keep: bool | None = None) -> PropertyEntry:
    """Quadrilaterals ``Q(i, i+d)`` on one diagonal share one area."""
    out = _Builder(_keep(net, keep))
    _diagonal_chain(net, out, "q", "Q", _area)
    return out.entry


def check_diagonal_identity(net: Net, keep: bool | None = None) -> PropertyEntry:
    """The diagonal ``P_{i,j+1} P_{i+1,j}`` has the same length in ``Q(i,j)`` and ``Q(i+1,j+1)``."""
    out = _Builder(_keep(net, keep))
    _diagonal_chain(net, out, "diag_sq", "d", _length_sq)
    return out.entry


def check_C4(net: Net, keep: bool | None = None) -> PropertyEntry:
    """All boundary triangles ``T_0 .. T_{N-2}`` share one area."""
    out = _Builder(_keep(net, keep))
    tb = _kernel.boundary_doubled(net)
    if len(tb) == 0:
        return out.entry
    out.witness([f"Tboundary({i})" for i in range(len(tb))], [_area(net, v) for v in tb])
    hit = _kernel.first_true(tb[:-1] != tb[1:])
    if hit is not None:
        i = hit[0]
        out.violate([f"Tboundary({i})"], _area(net, tb[i]), [f"Tboundary({i + 1})"], _area(net, tb[i + 1]))
    return out.entry


def check_triangulation_independence(net: Net, keep: bool | None = None) -> PropertyEntry:
    """``T + T' = Tbar + Tbar' = Q`` (ordered shoelace) for every quadrilateral."""
    out = _Builder(_keep(net, keep))
    for blk in _kernel.quad_blocks(net, overlap=0):
        s1 = blk.t + blk.tp
        s2 = blk.tbar + blk.tbarp
        bad = blk.valid & ((s1 != blk.q) | (s2 != blk.q))
        cells = np.argwhere(blk.valid) if out.keep else ([] if not bad.any() else [_kernel.first_true(bad)])
        for r, j in cells:
            r, j = int(r), int(j)
            i = blk.i0 + r
            ids = [f"T({i},{j})", f"T'({i},{j})", f"Tbar({i},{j})", f"Tbar'({i},{j})", f"Q({i},{j})"]
            vals = [_area(net, getattr(blk, a)[r, j]) for a in ("t", "tp", "tbar", "tbarp", "q")]
            out.witness(ids, vals)
            if bad[r, j]:
                if s1[r, j] != blk.q[r, j]:
                    out.violate(ids[:2], vals[0] + vals[1], ids[4:], vals[4])
                else:
                    out.violate(ids[2:4], vals[2] + vals[3], ids[4:], vals[4])
    return out.entry


def check_s_symmetry(net: Net, keep: bool | None = None) -> PropertyEntry:
    """``s(i) = s(N-i)``, and no other line carries segments of that length.

    ``s(i)`` is measured from the lattice as the squared length of the first
    ordinary segment on line ``i``.
    """
    out = _Builder(_keep(net, keep))
    n = net.n
    s: dict[int, int] = {}
    for blk in _kernel.segment_blocks(net):
        ref, has = _ref_columns(blk.valid)
        for r in range(len(ref)):
            if has[r]:
                dx, dy = int(blk.ax[r, ref[r]]), int(blk.ay[r, ref[r]])
                s[blk.i0 + r] = dx * dx + dy * dy
    counts = Counter(s.values())
    for i in sorted(s):
        mirror = n - i
        si = _length_sq(net, s[i])
        if mirror in s:
            sm = _length_sq(net, s[mirror])
            out.witness([f"s({i})", f"s({mirror})"], [si, sm])
            if si != sm:
                out.violate([f"s({i})"], si, [f"s({mirror})"], sm)
        expected = len({i, mirror} & s.keys())
        if counts[s[i]] != expected:
            other = next(k for k in sorted(s) if k not in (i, mirror) and s[k] == s[i])
            out.violate([f"s({i})"], si, [f"s({other})"], _length_sq(net, s[other]))
    return out.entry


def check_acute_obtuse_area(net: Net, keep: bool | None = None) -> PropertyEntry:
    """The net and its mirror-slanted twin ``(a, -b)`` enclose the same area."""
    out = _Builder(_keep(net, keep))
    cfg = net.config
    mirror = cfg.frame.mirrored()
    here = area_totals(net).total
    there = area_totals(build_net(cfg.with_frame(mirror))).total
    a, b = format_rational(cfg.frame.a), format_rational(cfg.frame.b)
    mb = format_rational(mirror.b)
    lhs, rhs = [f"total({a},{b})"], [f"total({a},{mb})"]
    out.witness(lhs + rhs, [here, there])
    if here != there:
        out.violate(lhs, here, rhs, there)
    return out.entry


def check_all(net: Net, *, mirror: bool = False, keep: bool | None = None) -> PropertyReport:
    """Run every applicable check.

    ``s_symmetry`` applies to right-framed equidistant nets only, and
    ``acute_obtuse_area`` runs when ``mirror`` is requested.
    """
    entries = {
        "C1": check_C1(net, keep),
        "C2": check_C2(net, keep),
        "C3": check_C3(net, keep),
        "C4": check_C4(net, keep),
        "triangulation_independence": check_triangulation_independence(net, keep),
        "diagonal_identity": check_diagonal_identity(net, keep),
        "b_equals_2a": check_b_equals_2a(net, keep),
    }
    if net.config.is_right and net.config.is_equidistant:
        entries["s_symmetry"] = check_s_symmetry(net, keep)
    if mirror:
        entries["acute_obtuse_area"] = check_acute_obtuse_area(net, keep)
    return PropertyReport(entries)
