"""Length-5 extension curves: shape, squarefreeness, integer-point scans."""

import pytest

from buchi4.curves import (
    TRIVIAL_PARAMETERS,
    CurveSpec,
    curve_rhs,
    is_squarefree,
    scan_csv,
    scan_integer_points,
)
from buchi4.families import extends, xi_eval
from buchi4.poly import T, UPoly
from buchi4.polytext import format_upoly, parse_upoly

C1R = "4t^6 + 80t^5 + 620t^4 + 2400t^3 + 4905t^2 + 5020t + 2020"
C1L = "4t^6 + 40t^5 + 120t^4 - 595t^2 - 970t - 455"
C2R = (
    "16t^10 + 480t^9 + 6240t^8 + 46400t^7 + 218812t^6 + 684120t^5"
    " + 1436320t^4 + 1999600t^3 + 1766797t^2 + 894990t + 197505"
)
C3R = (
    "64t^14 + 2560t^13 + 46400t^12 + 505600t^11 + 3702416t^10 + 19280000t^9"
    " + 73635280t^8 + 209537600t^7 + 446403560t^6 + 708503520t^5"
    " + 824619920t^4 + 682516400t^3 + 379789209t^2 + 127204040t + 19353040"
)


def test_printed_equations():
    assert curve_rhs(1, "right").display() == C1R
    assert curve_rhs(1, "left").display() == C1L
    assert curve_rhs(2, "right").display() == C2R
    assert curve_rhs(3, "right").display() == C3R


def test_curve_shape():
    for n in (1, 2, 3, 4):
        for side in ("right", "left"):
            c = curve_rhs(n, side)
            assert c.rhs.degree == 4 * n + 2
            assert c.rhs.lc() > 0
            assert c.n == n and c.side == side
            assert c.coefficients()[-1] == c.rhs.lc()


def test_rhs_is_the_extension_radicand():
    for n in (1, 2, 3):
        right = curve_rhs(n, "right").rhs
        left = curve_rhs(n, "left").rhs
        for t in range(-8, 9):
            x1, x2, x3, x4 = xi_eval(n, t)
            assert right(t) == 2 * x4 * x4 - x3 * x3 + 2
            assert left(t) == 2 * x1 * x1 - x2 * x2 + 2


def test_bad_arguments():
    with pytest.raises(ValueError):
        curve_rhs(0, "right")
    with pytest.raises(ValueError):
        curve_rhs(1, "sideways")


def test_squarefree_low_levels():
    for n in (1, 2, 3, 4, 5, 6):
        assert is_squarefree(curve_rhs(n, "right"))
        assert is_squarefree(curve_rhs(n, "left"))


def test_squarefree_rejects_squares():
    assert not is_squarefree((T + 1) * (T + 1) * (T + 3))
    assert not is_squarefree((2 * T + 5) ** 2)
    assert is_squarefree((T + 1) * (T + 2))


def test_scan_finds_exactly_the_trivial_hits():
    c1r = curve_rhs(1, "right")
    assert scan_integer_points(c1r, -4, -1) == [(-4, 2), (-3, 1), (-2, 4), (-1, 7)]
    assert scan_integer_points(c1r, 0, 10) == []
    c1l = curve_rhs(1, "left")
    assert scan_integer_points(c1l, -2, -2) == [(-2, 1)]
    assert TRIVIAL_PARAMETERS == (-4, -3, -2, -1)


def test_scan_agrees_with_extension_tests():
    # a scan hit at t is exactly a nonnegative extension of xi(n, t)
    for n in (1, 2):
        for side, curve in (("right", curve_rhs(n, "right")), ("left", curve_rhs(n, "left"))):
            hits = dict(scan_integer_points(curve, -6, 6))
            for t in range(-6, 7):
                assert hits.get(t) == extends(xi_eval(n, t), side)


def test_scan_worker_invariance():
    c = curve_rhs(1, "right")
    assert scan_integer_points(c, -50, 50) == scan_integer_points(
        c, -50, 50, workers=4
    )


def test_scan_csv_format():
    lines = list(scan_csv(curve_rhs(1, "right"), -4, -1))
    assert lines[0] == "t,y,trivial"
    assert lines[1] == "-4,2,yes"
    assert lines[-1] == "-1,7,yes"


def test_display_round_trip():
    for n in (1, 2):
        c = curve_rhs(n, "right")
        assert parse_upoly(c.display()) == c.rhs
        assert format_upoly(parse_upoly(c.display())) == c.display()


def test_curvespec_validation():
    with pytest.raises(ValueError):
        CurveSpec(side="right", n=1, rhs=T + 1)  # degree must be 4n + 2
    with pytest.raises(ValueError):
        CurveSpec(side="diagonal", n=1, rhs=curve_rhs(1, "right").rhs)