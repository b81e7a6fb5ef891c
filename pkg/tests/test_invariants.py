import re
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FAMILY_N3, FRAMES, SQUARES, cfg, spacings
from stringnet.invariants import (
    PROPERTY_NAMES,
    WITNESS_FULL_MAX_N,
    check_all,
    check_C1,
    check_C2,
    check_C3,
    check_C4,
)
from stringnet.net import NetConfig, Vec2, build_net, vertex


# independent evaluation of witness labels: closed-form vertices + plain shoelace

def _pt(c, i, j):
    p = vertex(c, i, j)
    return p.x, p.y


def _shoelace(pts):
    s = 0
    for k in range(len(pts)):
        (x1, y1), (x2, y2) = pts[k], pts[(k + 1) % len(pts)]
        s += x1 * y2 - x2 * y1
    return abs(F(s)) / 2


def _diff(c, p, q):
    (x1, y1), (x2, y2) = _pt(c, *p), _pt(c, *q)
    return Vec2(x1 - x2, y1 - y2)


def evaluate(c: NetConfig, label: str):
    scale = 1
    if label.startswith("2*"):
        scale, label = 2, label[2:]
    name, args = re.fullmatch(r"(\w+'?)\((.*)\)", label).groups()
    if name == "total":
        n = c.n
        return _shoelace([(F(0), F(0))] + [_pt(c, k, k + 1) for k in reversed(range(n))])
    idx = [int(v) for v in args.split(",")]
    if name == "a":
        i, j = idx
        return _diff(c, (i, j + 1), (i, j)) * scale
    if name == "b":
        (i,) = idx
        return _diff(c, (i, i + 1), (i, i - 1)) * scale
    if name == "d":
        i, j = idx
        return _diff(c, (i, j + 1), (i + 1, j)).norm_sq()
    if name == "Tboundary":
        (i,) = idx
        return _shoelace([_pt(c, i, i + 1), _pt(c, i, i + 2), _pt(c, i + 1, i + 2)])
    i, j = idx
    p00, p10, p11, p01 = _pt(c, i, j), _pt(c, i + 1, j), _pt(c, i + 1, j + 1), _pt(c, i, j + 1)
    corners = {
        "T": [p00, p10, p01],
        "T'": [p10, p01, p11],
        "Tbar": [p00, p10, p11],
        "Tbar'": [p00, p01, p11],
        "Q": [p00, p10, p11, p01],
    }[name]
    return _shoelace(corners) * scale


def _total(c, labels):
    vals = [evaluate(c, lab) for lab in labels]
    out = vals[0]
    for v in vals[1:]:
        out = out + v
    return out


def test_equidistant_all_hold_small():
    for n in range(1, 21):
        for fr in FRAMES:
            rep = check_all(build_net(NetConfig(n, fr)), mirror=fr.b != 0)
            assert rep.all_hold, (n, fr, rep.failed())


def test_report_keys():
    rep = check_all(build_net(cfg(6)))
    assert list(rep.entries) == [p for p in PROPERTY_NAMES if p != "acute_obtuse_area"]
    rep = check_all(build_net(cfg(6, F(3, 5), F(4, 5))), mirror=True)
    assert "s_symmetry" not in rep and "acute_obtuse_area" in rep


def test_examples():
    assert check_C1(build_net(cfg(6))).holds
    assert check_C1(build_net(cfg(6, F(3, 5), F(4, 5)))).holds
    sq = build_net(cfg(4, spacing=SQUARES))
    c1 = check_C1(sq)
    assert not c1.holds and c1.first_violation.lhs_pieces[0].startswith("a(1,")
    assert check_C2(build_net(cfg(5))).holds
    assert check_C2(build_net(cfg(3, spacing=FAMILY_N3))).holds
    assert check_C3(build_net(cfg(6, F(1, 2), F(-1, 3)))).holds
    c4 = check_C4(build_net(cfg(7)))
    assert c4.holds and set(c4.witnesses[0].values) == {F(1, 343)}
    c4 = check_C4(build_net(cfg(3, spacing=FAMILY_N3)))
    assert c4.holds and list(c4.witnesses[0].values) == [F(21, 500)] * 2
    c4 = check_C4(sq)
    v = c4.first_violation
    assert (v.lhs, v.rhs) == (F(3, 2048), F(15, 1024))


def test_c2_squares_violation_values():
    v = check_C2(build_net(cfg(4, spacing=SQUARES))).first_violation
    assert (v.lhs_pieces, v.rhs_pieces) == (("T(0,2)",), ("T'(0,2)",))
    assert (v.lhs, v.rhs) == (F(5, 2048), F(5, 1024))


def test_c3_fails_on_uneven_pegs():
    c = cfg(4, spacing=(0, F(1, 10), F(3, 10), F(6, 10), 1))
    rep = check_all(build_net(c))
    assert {"C1", "C2", "C3", "C4"} <= set(rep.failed())
    v = rep["C3"].first_violation
    assert (v.lhs, v.rhs) == (F(3, 250), F(6, 125))


@pytest.mark.parametrize("frame", [(1, 0), (F(3, 5), F(4, 5)), (F(1, 2), F(-1, 3))])
def test_c3_c4_witness_values(frame):
    n = 6
    c = cfg(n, *frame)
    a = c.frame.a
    rep = check_all(build_net(c))
    c3 = rep["C3"].witnesses
    assert [len(w.values) for w in c3] == [n - d for d in range(2, n)]
    for d, w in zip(range(2, n), c3):
        assert set(w.values) == {a * d / n**3}
    assert set(rep["C4"].witnesses[0].values) == {a / n**3}


def test_c3_right_frame_n6():
    c3 = check_C3(build_net(cfg(6)))
    assert [w.values[0] for w in c3.witnesses] == [F(d, 216) for d in range(2, 6)]


def test_check_all_examples():
    assert check_all(build_net(cfg(10))).all_hold
    assert check_all(build_net(cfg(3, spacing=(0, F(1, 3), F(2, 3), 1)))).all_hold
    rep = check_all(build_net(cfg(3, spacing=(0, F(2, 5), F(3, 5), 1))))
    assert "C1" in rep.failed()
    for name in ("C2", "C3", "C4", "triangulation_independence"):
        assert rep[name].holds


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=0, max_value=F(1, 2), max_denominator=200).filter(lambda t: 0 < t < F(1, 2)))
def test_n3_family(t):
    rep = check_all(build_net(cfg(3, spacing=(0, t, 1 - t, 1))))
    for name in ("C2", "C3", "C4", "triangulation_independence"):
        assert rep[name].holds
    assert rep["C1"].holds == (t == F(1, 3))
    assert rep["b_equals_2a"].holds == (t == F(1, 3))


@settings(max_examples=120, deadline=None)
@given(spacings(min_n=2, max_n=8))
def test_soundness_of_failure(sp):
    c = NetConfig(sp.n, spacing=sp)
    rep = check_all(build_net(c))
    for name in rep.failed():
        v = rep[name].first_violation
        lhs, rhs = _total(c, v.lhs_pieces), _total(c, v.rhs_pieces)
        assert lhs == v.lhs and rhs == v.rhs
        assert lhs != rhs
    for name, e in rep.entries.items():
        assert e.holds == (e.first_violation is None)


@settings(max_examples=60, deadline=None)
@given(spacings(min_n=2, max_n=7))
def test_witness_values_match_oracle(sp):
    c = NetConfig(sp.n, spacing=sp)
    rep = check_all(build_net(c))
    for e in rep.entries.values():
        for w in e.witnesses:
            if len(w.pieces) == len(w.values):
                assert [evaluate(c, lab) for lab in w.pieces] == list(w.values)


def test_equidistant_is_the_only_passing_spacing_in_sample():
    # every non-equidistant spacing on a small grid fails C4 or C3 for N >= 4
    import itertools
    g = 12
    for inner in itertools.combinations(range(1, g), 3):
        sp = (F(0), *(F(k, g) for k in inner), F(1))
        rep = check_all(build_net(cfg(4, spacing=sp)))
        ok = rep["C3"].holds and rep["C4"].holds
        assert ok == (inner == (3, 6, 9))


def test_witness_cap():
    small = check_all(build_net(cfg(WITNESS_FULL_MAX_N)))
    big = check_all(build_net(cfg(WITNESS_FULL_MAX_N + 1)))
    assert len(small["C2"].witnesses) > 1
    assert big["C2"].witnesses == [] and big["C2"].holds
    big_bad = check_all(build_net(cfg(13, spacing=[F(k * k, 169) for k in range(14)])))
    assert not big_bad["C2"].holds and len(big_bad["C2"].witnesses) == 1
    full = check_all(build_net(cfg(13)), keep=True)
    assert len(full["C2"].witnesses) == sum(13 - d for d in range(2, 13))


def test_to_dict_is_json_ready():
    import json
    rep = check_all(build_net(cfg(4, spacing=SQUARES)))
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["C2"]["first_violation"] == {
        "lhs_pieces": ["T(0,2)"], "lhs": "5/2048", "rhs_pieces": ["T'(0,2)"], "rhs": "5/1024",
    }
    assert d["C2"]["holds"] is False
