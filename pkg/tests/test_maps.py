"""The trivial involution group, the rational involution, and the
degree-growing map with its Pell-driven base orbit."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from buchi4.families import r_value, xi_eval
from buchi4.maps import (
    IDENTITY,
    TAU,
    ZETA_TWIST,
    DenominatorVanishes,
    TrivialInvolution,
    apply_phi,
    apply_zeta,
    apply_zeta_inv,
    as_int_point,
    group_elements,
    mu,
    normalize_point,
    on_surface,
    pell,
    pell_point,
    verify_group_relations,
    zeta_orbit,
)

ORBIT = [
    (1, 2, 3, 4),
    (6, 23, 32, 39),
    (59, 228, 317, 386),
    (584, 2257, 3138, 3821),
    (5781, 22342, 31063, 37824),
]


def surface_points():
    """A mix of integer and rational exact points for property tests."""
    pts = list(ORBIT)
    for t in (-9, -2, 0, 1, 7):
        pts.append(xi_eval(1, t))
        pts.append(xi_eval(2, t))
    pts.append(r_value(3, 7))
    pts.append(r_value(9, 2))
    pts.append(tuple(Fraction(v) for v in (-4, 3, 2, -1)))
    return pts


points = st.sampled_from(surface_points())
involutions = st.sampled_from(group_elements())


def test_group_has_32_elements_and_is_closed():
    elems = group_elements()
    assert len(elems) == 32
    assert len(set(elems)) == 32
    table = set(elems)
    for g in elems[:8]:
        for h in elems:
            assert g.compose(h) in table
    assert IDENTITY in table and TAU in table


def test_sign_flips_are_involutions():
    for i in (1, 2, 3, 4):
        g = mu(i)
        assert g.compose(g).is_identity()
    assert TAU.compose(TAU).is_identity()
    assert ZETA_TWIST == TAU.compose(mu(1, 4)) == mu(1, 4).compose(TAU)


@given(involutions, points)
def test_involutions_preserve_the_surface(g, pt):
    assert on_surface(pt)
    assert on_surface(g(pt))


@given(involutions, involutions, points)
def test_composition_is_application_order(g, h, pt):
    assert g.compose(h)(pt) == g(h(pt))
    assert g.inverse().compose(g).is_identity()


def test_relation_suite_passes():
    report = verify_group_relations()
    assert report.ok, report.failures()


def test_phi_anchor():
    # the twist of (1,2,3,4) lands at (-4,3,2,-1), which the involution sends on
    assert ZETA_TWIST((1, 2, 3, 4)) == (-4, 3, 2, -1)
    assert apply_phi((-4, 3, 2, -1)) == (6, 23, 32, 39)


def test_phi_is_an_involution_pointwise():
    for pt in [(6, 23, 32, 39), (-4, 3, 2, -1), r_value(3, 7)]:
        image = apply_phi(pt)
        assert on_surface(image)
        assert tuple(Fraction(v) for v in apply_phi(image)) == tuple(
            Fraction(v) for v in pt
        )


@given(points)
def test_phi_is_odd(pt):
    try:
        lhs = apply_phi(tuple(-v for v in pt))
    except DenominatorVanishes:
        return
    assert lhs == tuple(-v for v in apply_phi(pt))


def test_phi_undefined_on_the_degenerate_locus():
    # b = c forces the denominator (b-c)^2 (a-2b+c) to zero
    with pytest.raises(DenominatorVanishes):
        apply_phi((1, 0, 0, 1))


@given(points)
def test_zeta_inverse_cancels(pt):
    try:
        image = apply_zeta(pt)
        back = apply_zeta_inv(image)
    except DenominatorVanishes:
        return
    assert tuple(Fraction(v) for v in back) == tuple(Fraction(v) for v in pt)
    assert on_surface(image)


def test_zeta_orbit_anchors():
    assert zeta_orbit((1, 2, 3, 4), 4) == [
        tuple(Fraction(v) for v in pt) if i else pt for i, pt in enumerate(ORBIT)
    ]


def test_pell_values():
    assert [pell(n) for n in range(6)] == [0, 1, 10, 99, 980, 9701]
    with pytest.raises(ValueError):
        pell(-1)


def test_pell_point_matches_the_orbit():
    for n, pt in enumerate(ORBIT):
        assert pell_point(n) == pt


def test_orbit_satisfies_the_linear_recurrence():
    # component-wise u(n+2) = 10 u(n+1) - u(n) along the whole orbit
    pts = [as_int_point(p) for p in zeta_orbit((1, 2, 3, 4), 20)]
    assert all(p is not None for p in pts)
    for n in range(18):
        for i in range(4):
            assert pts[n + 2][i] == 10 * pts[n + 1][i] - pts[n][i]
    for n, p in enumerate(pts):
        assert pell_point(n) == p


def test_normalize_point():
    g, norm = normalize_point((-4, 3, 2, -1))
    assert norm == (1, 2, 3, 4)
    assert g((-4, 3, 2, -1)) == norm
    g, norm = normalize_point((39, 32, 23, 6))
    assert norm == (6, 23, 32, 39)
    assert normalize_point((1, 2, 2, 1)) is None  # repeated magnitude
    assert normalize_point((0, 1, 2, 3)) is None  # zero coordinate


@given(involutions, points)
def test_normalize_inverts_any_scramble(g, pt):
    mags = sorted(abs(v) for v in pt)
    if 0 in mags or len(set(mags)) < 4:
        return  # normalization is defined exactly off this locus
    scrambled = g(pt)
    got = normalize_point(scrambled)
    assert got is not None
    h, norm = got
    assert h(scrambled) == norm
    assert norm == tuple(mags)


def test_as_int_point():
    assert as_int_point((Fraction(4, 2), 3, Fraction(4), 5)) == (2, 3, 4, 5)
    assert as_int_point((Fraction(1, 2), 1, 1, 1)) is None
