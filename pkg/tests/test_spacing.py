import itertools
from fractions import Fraction as F

import pytest

from stringnet.invariants import check_all
from stringnet.net import NetConfig, Spacing, build_net
from stringnet.spacing import (
    X1,
    X2,
    Affine,
    claim_formula,
    constraint_equations,
    satisfies_constraints,
    solve_spacing,
    verify_uniqueness_bruteforce,
)


def test_solve_examples():
    out = solve_spacing(5)
    assert out.status == "unique"
    assert out.solution.values == tuple(F(i, 5) for i in range(6))
    assert out.steps == [
        "x_3 = x_1 + x_2", "x_4 = 2*x_2", "x_5 = x_1 + 2*x_2", "x_2 = 2*x_1", "x_1 = 1/5", "x_2 = 2/5",
    ]
    fam = solve_spacing(3)
    assert fam.status == "one_parameter_family"
    assert fam.family.constraint == "x_2 = 1 - x_1"
    assert (fam.family.lower, fam.family.upper) == (0, F(1, 2))
    for n in (1, 2):
        assert solve_spacing(n).status == "vacuous"


@pytest.mark.parametrize("n", range(4, 31))
def test_unique_equidistant(n):
    out = solve_spacing(n)
    assert out.status == "unique"
    x = out.solution.values
    assert x == tuple(F(i, n) for i in range(n + 1))
    assert satisfies_constraints(x)
    for k in range(2, n):
        assert x[k + 1] == x[k - 1] + x[k] - x[k - 2]
    for i in range(1, n + 1):
        assert claim_formula(n, x[1], x[2], i) == x[i]


def test_first_derived_relations():
    for n in range(6, 12):
        assert solve_spacing(n).steps[:3] == ["x_3 = x_1 + x_2", "x_4 = 2*x_2", "x_5 = x_1 + 2*x_2"]


def test_claim_formula():
    assert claim_formula(5, F(1, 5), F(2, 5), 4) == F(4, 5)
    assert claim_formula(9, F(1, 7), F(3, 11), 1) == F(1, 7)
    assert claim_formula(7, F(1, 7), F(2, 7), 5) == F(5, 7)


def test_claim_formula_matches_recurrence():
    # the recurrence iterated from (0, x1, x2) with arbitrary free values
    x1, x2 = F(2, 13), F(5, 17)
    xs = [F(0), x1, x2]
    for k in range(2, 20):
        xs.append(xs[k - 1] + xs[k] - xs[k - 2])
    for i in range(1, 21):
        assert claim_formula(20, x1, x2, i) == xs[i]


def test_two_parameter_family_satisfies_triangle_equations():
    # boundary equalities alone leave two free parameters
    for x1, x2 in [(F(1, 9), F(1, 5)), (F(1, 20), F(3, 10))]:
        n = 6
        xs = [F(0)] + [claim_formula(n, x1, x2, i) for i in range(1, n + 1)]
        eqs = constraint_equations(xs)
        assert all(l == r for lab, l, r in eqs if lab.startswith("T"))


def test_bruteforce_examples():
    assert verify_uniqueness_bruteforce(4, 20) == [(F(1, 4), F(1, 2), F(3, 4))]
    assert verify_uniqueness_bruteforce(5, 15) == [(F(1, 5), F(2, 5), F(3, 5), F(4, 5))]
    assert verify_uniqueness_bruteforce(3, 10) == [(F(t, 10), 1 - F(t, 10)) for t in range(1, 5)]


def test_bruteforce_limits():
    with pytest.raises(ValueError):
        verify_uniqueness_bruteforce(7, 10)
    with pytest.raises(ValueError):
        verify_uniqueness_bruteforce(4, 61)


@pytest.mark.parametrize("n,g", [(3, 12), (4, 12), (4, 24), (5, 10), (5, 20)])
def test_bruteforce_agrees_with_constraint_evaluator(n, g):
    found = set(verify_uniqueness_bruteforce(n, g))
    accepted = set()
    for inner in itertools.combinations([F(k, g) for k in range(1, g)], n - 1):
        if satisfies_constraints((F(0), *inner, F(1))):
            accepted.add(inner)
    assert found == accepted


@pytest.mark.parametrize("n,g", [(3, 10), (4, 20), (5, 15), (6, 12)])
def test_bruteforce_agrees_with_solver(n, g):
    found = verify_uniqueness_bruteforce(n, g)
    out = solve_spacing(n)
    if out.status == "unique":
        expected = [out.solution.values[1:-1]] if g % n == 0 else []
        assert found == expected
    else:
        fam = out.family
        assert found and all(fam.lower < s[0] < fam.upper and s[1] == fam.relation(s[0], 0) for s in found)


@pytest.mark.parametrize("n", [4, 5, 8, 12])
def test_solver_output_through_invariants(n):
    sol = solve_spacing(n).solution
    rep = check_all(build_net(NetConfig(n, spacing=sol)))
    assert rep.all_hold


@pytest.mark.parametrize("t", [F(1, 10), F(1, 5), F(3, 10), F(2, 5), F(1, 3)])
def test_family_members_through_invariants(t):
    fam = solve_spacing(3).family
    sp = fam.member(t)
    assert sp.values == (0, t, 1 - t, 1)
    rep = check_all(build_net(NetConfig(3, spacing=sp)))
    assert rep["C2"].holds and rep["C3"].holds and rep["C4"].holds
    assert rep["C1"].holds == sp.is_equidistant == (t == F(1, 3))


def test_family_member_outside_interval():
    with pytest.raises(ValueError):
        solve_spacing(3).family.member(F(1, 2))


def test_affine():
    f = X1 + X2 * 2 - Affine(F(1))
    assert str(f) == "-1 + x_1 + 2*x_2"
    assert f(F(1, 2), F(1, 4)) == 0
    assert str(Affine(F(1), F(-1))) == "1 - x_1"
    assert (X1 * 3).ratio_to(X1) == 3
    assert (X1 - X1).is_zero


def test_constraint_equations_count():
    for n in range(1, 9):
        eqs = constraint_equations(Spacing.equidistant(n).values)
        assert len(eqs) == max(0, n - 2) + (1 if n >= 4 else 0)


def test_to_dict():
    d = solve_spacing(3).to_dict()
    assert d["status"] == "one_parameter_family"
    assert d["family"]["constraint"] == "x_2 = 1 - x_1"
    assert d["family"]["x_1_interval"] == ["0", "1/2"]
    assert solve_spacing(4).to_dict()["solution"] == ["0", "1/4", "1/2", "3/4", "1"]
