from fractions import Fraction

import pytest

from logdisc.inertia import SymMatrixQ, critical_count
from logdisc.oracle import find_critical_points, grid_euler
from logdisc.parse import parse_poly
from logdisc.poly import VarTable


def test_critical_points_one_variable_well(a1):
    # F = x^2 + u at u = -1: one critical point at the origin, value -1
    rep = find_critical_points(a1.f0 + a1.p("u"), {"u": Fraction(-1)}, 1)
    assert rep.complete
    assert len(rep.points) == 1
    coords, fval, morse, hsign = rep.points[0]
    assert abs(coords[0]) < 1e-8
    assert abs(fval + 1.0) < 1e-8
    assert morse == 0 and hsign == 1
    # the signed count tallies sgn(F) over real critical points
    assert rep.signed_count == -1


def test_critical_points_cusp_unfolding(a2):
    # F = x^3 + b*x + u: two Morse points when b < 0, none when b > 0
    F = a2.spec.F
    rep = find_critical_points(F, {"u": Fraction(0), "b": Fraction(-3)}, 2)
    assert rep.complete
    assert len(rep.points) == 2
    assert rep.signed_count == 0
    xs = sorted(c[0] for c, _, _, _ in rep.points)
    assert abs(xs[0] + 1.0) < 1e-7 and abs(xs[1] - 1.0) < 1e-7
    rep = find_critical_points(F, {"u": Fraction(0), "b": Fraction(3)}, 2)
    assert not rep.complete
    assert len(rep.points) == 0
    assert rep.signed_count == 0


def test_signed_count_matches_exact_signature(ex1):
    point = {"u": Fraction(1), "d": Fraction(1), "c": Fraction(-1),
             "b": Fraction(2)}
    rep = find_critical_points(ex1.spec.F, point, ex1.spec.mu, seed=3)
    sigma_t = ex1.logm.sigma * ex1.tf.T
    exact = critical_count(SymMatrixQ.from_poly_matrix(sigma_t, point))
    assert rep.signed_count == exact
    assert len(rep.points) <= ex1.spec.mu


def test_dedup_never_exceeds_mu(e6):
    point = {"u": Fraction(-10), "a": Fraction(-9, 10), "b": Fraction(-2, 5),
             "c": Fraction(1, 10), "d": Fraction(1, 10), "g": Fraction(-1, 10)}
    rep = find_critical_points(e6.spec.F, point, e6.spec.mu, seed=1)
    assert len(rep.points) <= e6.spec.mu
    assert rep.signed_count == -2


def test_constrained_critical_points():
    # u = x1^2 + x2^2 restricted to the unit circle x1^2 + x2^2 = 1 is
    # constant, so perturb: u = x1 on the circle has two critical points
    vt = VarTable(("x1", "x2"), ("u",))
    F = parse_poly("x1 + u", vt)
    g = parse_poly("x1^2 + x2^2 - 1", vt)
    rep = find_critical_points(F, {"u": Fraction(0)}, 2, constraints=(g,))
    assert len(rep.points) == 2
    xs = sorted(c[0] for c, _, _, _ in rep.points)
    assert abs(xs[0] + 1.0) < 1e-7 and abs(xs[1] - 1.0) < 1e-7


def test_grid_positive_constant():
    vt = VarTable(("x1", "x2"), ("u",))
    F = parse_poly("x1^2 + x2^2 + u", vt)
    res = grid_euler(F, {"u": Fraction(1)})
    assert res.stable
    assert (res.chi_ge, res.chi_le, res.chi_eq) == (1, 0, 0)


def test_grid_circle():
    vt = VarTable(("x1", "x2"), ("u",))
    F = parse_poly("u - x1^2 - x2^2", vt)
    res = grid_euler(F, {"u": Fraction(1)})
    assert res.stable
    # disk (chi 1), complement annulus (chi 0), circle (chi 0)
    assert (res.chi_ge, res.chi_le, res.chi_eq) == (1, 0, 0)


def test_grid_one_variable(a1):
    res = grid_euler(a1.f0 + a1.p("u"), {"u": Fraction(-1)})
    assert res.stable
    assert (res.chi_ge, res.chi_le, res.chi_eq) == (2, 1, 2)


def test_grid_additivity():
    vt = VarTable(("x1", "x2"), ("u",))
    F = parse_poly("x1*x2 + u", vt)
    for u in (Fraction(1), Fraction(-1), Fraction(1, 7)):
        res = grid_euler(F, {"u": u})
        assert res.stable
        assert res.chi_ge + res.chi_le - res.chi_eq == 1


def test_grid_rejects_three_variables():
    vt = VarTable(("x1", "x2", "x3"), ("u",))
    F = parse_poly("x1^2 + x2^2 + x3^2 + u", vt)
    with pytest.raises(ValueError):
        grid_euler(F, {"u": Fraction(1)})
