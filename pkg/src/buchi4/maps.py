"""Symmetries of the surface and the degree-growing birational map.

Three layers:

  * the order-32 group of trivial involutions (coordinate sign flips and the
    reversal), acting on any point-like 4-tuple;
  * the rational involution phi = (p1/q, ..., p4/q), with the five defining
    polynomials loaded from a bundled asset and checked, not trusted;
  * zeta = phi after reversal-with-outer-sign-flips, the infinite-order map
    whose orbit of (1, 2, 3, 4) is driven by the Pell-like sequence
    u(0) = 0, u(1) = 1, u(n+2) = 10 u(n+1) - u(n).

verify_group_relations() re-proves every claimed relation between these maps,
the phi relations as exact normal-form-zero checks in the quotient ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Tuple

from .mpoly import MPoly4
from .poly import RatFunc, UPoly

__all__ = [
    "DenominatorVanishes",
    "TrivialInvolution",
    "IDENTITY",
    "TAU",
    "MU",
    "mu",
    "MU14",
    "ZETA_TWIST",
    "group_elements",
    "PhiMap",
    "phi_map",
    "on_surface",
    "apply_phi",
    "apply_zeta",
    "apply_zeta_inv",
    "zeta_orbit",
    "pell",
    "pell_point",
    "normalize_point",
    "as_int_point",
    "RelationReport",
    "verify_group_relations",
]

Point = Tuple


class DenominatorVanishes(ZeroDivisionError):
    """The rational map is undefined at this point (q = 0)."""


# -- trivial involutions ------------------------------------------------------


@dataclass(frozen=True)
class TrivialInvolution:
    """Element of the group generated by the four sign flips and reversal.

    Acts by reversing first (when rev is set), then flipping signs, so
    signs[i] applies to output slot i.
    """

    signs: Tuple[int, int, int, int]
    rev: bool

    def __call__(self, pt: Point) -> Point:
        if self.rev:
            pt = pt[::-1]
        return tuple(s * x for s, x in zip(self.signs, pt))

    def compose(self, other: "TrivialInvolution") -> "TrivialInvolution":
        """self after other."""
        inner = other.signs[::-1] if self.rev else other.signs
        return TrivialInvolution(
            tuple(s * t for s, t in zip(self.signs, inner)),
            self.rev != other.rev,
        )

    def inverse(self) -> "TrivialInvolution":
        signs = self.signs[::-1] if self.rev else self.signs
        return TrivialInvolution(signs, self.rev)

    def is_identity(self) -> bool:
        return not self.rev and all(s == 1 for s in self.signs)

    def __repr__(self):
        flips = "".join(str(i + 1) for i, s in enumerate(self.signs) if s < 0)
        parts = (["tau"] if self.rev else []) + ([f"mu{flips}"] if flips else [])
        return "*".join(parts) or "id"


IDENTITY = TrivialInvolution((1, 1, 1, 1), False)
TAU = TrivialInvolution((1, 1, 1, 1), True)


def mu(*indices: int) -> TrivialInvolution:
    """Sign flip at the given 1-based coordinate indices."""
    signs = [1, 1, 1, 1]
    for i in indices:
        signs[i - 1] *= -1
    return TrivialInvolution(tuple(signs), False)


MU = (mu(1), mu(2), mu(3), mu(4))
MU14 = mu(1, 4)

# tau compose mu14: the trivial part of the degree-growing map (both
# factorizations agree since the two commute).
ZETA_TWIST = TAU.compose(MU14)


def group_elements() -> list[TrivialInvolution]:
    """All 32 trivial involutions."""
    return [
        TrivialInvolution(signs, rev)
        for rev in (False, True)
        for signs in product((1, -1), repeat=4)
    ]


# -- the rational involution --------------------------------------------------


@dataclass(frozen=True)
class PhiMap:
    p: Tuple[MPoly4, MPoly4, MPoly4, MPoly4]
    q: MPoly4


@lru_cache(maxsize=1)
def phi_map() -> PhiMap:
    text = resources.files("buchi4.assets").joinpath("involution.txt").read_text()
    entries = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, body = line.partition(":")
        entries[name.strip()] = MPoly4.parse(body)
    missing = {"q", "p1", "p2", "p3", "p4"} - entries.keys()
    if missing:
        raise ValueError(f"involution asset is missing {sorted(missing)}")
    return PhiMap(
        (entries["p1"], entries["p2"], entries["p3"], entries["p4"]),
        entries["q"],
    )


def on_surface(pt: Point) -> bool:
    a, b, c, d = pt
    return (
        a * a - 2 * b * b + c * c == 2
        and b * b - 2 * c * c + d * d == 2
    )


def _is_zero(v) -> bool:
    if isinstance(v, UPoly):
        return v.is_zero()
    if isinstance(v, RatFunc):
        return v.num.is_zero()
    return v == 0


def _ratio(num, den):
    if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
        return Fraction(num, den) if isinstance(num, int) and isinstance(den, int) else Fraction(num) / Fraction(den)
    return RatFunc.of(num) / RatFunc.of(den)


def apply_phi(pt: Point) -> Point:
    """Image of a numeric or symbolic point; exact in both cases."""
    pm = phi_map()
    den = pm.q.evaluate(pt)
    if _is_zero(den):
        raise DenominatorVanishes(
            "the involution is undefined where (b - c)^2 (a - 2b + c) vanishes"
        )
    return tuple(_ratio(p.evaluate(pt), den) for p in pm.p)


def apply_zeta(pt: Point) -> Point:
    return apply_phi(ZETA_TWIST(pt))


def apply_zeta_inv(pt: Point) -> Point:
    return ZETA_TWIST(apply_phi(pt))


def zeta_orbit(pt: Point, count: int) -> list[Point]:
    """[pt, zeta(pt), ..., zeta^count(pt)]."""
    out = [tuple(pt)]
    for _ in range(count):
        out.append(apply_zeta(out[-1]))
    return out


# -- the Pell-like drive of the base orbit -----------------------------------

_PELL = [0, 1]


def pell(n: int) -> int:
    """u(n) with u(0) = 0, u(1) = 1, u(n+2) = 10 u(n+1) - u(n)."""
    if n < 0:
        raise ValueError("negative index")
    while len(_PELL) <= n:
        _PELL.append(10 * _PELL[-1] - _PELL[-2])
    return _PELL[n]


_ORBIT_HEAD = (1, 2, 3, 4)
_ORBIT_NEXT = (6, 23, 32, 39)


def pell_point(n: int) -> Point:
    """Closed form of the n-th orbit point of (1, 2, 3, 4)."""
    if n == 0:
        return _ORBIT_HEAD
    un, um = pell(n), pell(n - 1)
    return tuple(un * y - um * x for x, y in zip(_ORBIT_HEAD, _ORBIT_NEXT))


# -- normalization ------------------------------------------------------------


def normalize_point(pt: Point):
    """The trivial involution carrying pt to a strictly increasing positive
    point, as (g, g(pt)); None when no coordinate arrangement works (which
    happens exactly when some |coordinate| repeats or vanishes)."""
    if any(x == 0 for x in pt):
        return None
    signs = tuple(1 if x > 0 else -1 for x in pt)
    mags = tuple(abs(x) for x in pt)
    if all(mags[i] < mags[i + 1] for i in range(3)):
        g = TrivialInvolution(signs, False)
    elif all(mags[i] > mags[i + 1] for i in range(3)):
        g = TrivialInvolution(signs[::-1], True)
    else:
        return None
    return g, g(pt)


def as_int_point(pt: Point):
    """Cast exact rational coordinates to ints, or None if any is not."""
    out = []
    for x in pt:
        if isinstance(x, int):
            out.append(x)
        elif isinstance(x, Fraction) and x.denominator == 1:
            out.append(x.numerator)
        else:
            return None
    return tuple(out)


# -- relation verification ----------------------------------------------------


@dataclass
class RelationReport:
    entries: list[tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.entries)

    def failures(self) -> list[str]:
        return [name for name, ok in self.entries if not ok]

    def __str__(self):
        width = max(len(name) for name, _ in self.entries)
        return "\n".join(
            f"{name:<{width}}  {'pass' if ok else 'FAIL'}"
            for name, ok in self.entries
        )


def _phi_self_composition_holds(pm: PhiMap) -> bool:
    """phi(phi(x)) = x as an identity in the quotient ring.

    With y = phi(x), the i-th coordinate of phi(y) is N_i / (q * D) where
    N_i = q^4 * p_i(y) and D = (p2 - p3)^2 (p1 - 2 p2 + p3); the claim
    reduces to N_i = x_i * q * D modulo the surface relations.  Total degree
    of every p_i is at most 4, which the homogenization below relies on.
    """
    p, q = pm.p, pm.q
    assert all(pi.total_degree() <= 4 for pi in p)

    qpow = {0: MPoly4.const(1)}

    def q_power(k: int) -> MPoly4:
        got = qpow.get(k)
        if got is None:
            got = qpow[k] = (q_power(k - 1) * q).normal_form()
        return got

    prods = {(0, 0, 0, 0): MPoly4.const(1)}

    def prod(key) -> MPoly4:
        got = prods.get(key)
        if got is None:
            j = next(i for i, e in enumerate(key) if e)
            prev = list(key)
            prev[j] -= 1
            got = prods[key] = (prod(tuple(prev)) * p[j]).normal_form()
        return got

    den = ((p[1] - p[2]) ** 2 * (p[0] - 2 * p[1] + p[2])).normal_form()
    for i in range(4):
        num = MPoly4()
        for key, coeff in p[i].terms.items():
            piece = (prod(key) * q_power(4 - sum(key))).normal_form()
            num = num + coeff * piece
        target = (MPoly4.coordinate(i + 1) * q * den).normal_form()
        if not (num.normal_form() - target).is_zero():
            return False
    return True


def verify_group_relations() -> RelationReport:
    pm = phi_map()
    p, q = pm.p, pm.q
    a, b, c, d = (MPoly4.coordinate(i) for i in (1, 2, 3, 4))
    entries: list[tuple[str, bool]] = []

    entries.append((
        "sign flips commute pairwise",
        all(
            MU[i].compose(MU[j]) == MU[j].compose(MU[i])
            for i in range(4)
            for j in range(4)
        ),
    ))
    sigma = {0: 3, 1: 2, 2: 1, 3: 0}
    entries.append((
        "reversal conjugates flips by the end-swapping permutation",
        all(
            TAU.compose(MU[i]).compose(TAU) == MU[sigma[i]]
            for i in range(4)
        ),
    ))
    entries.append((
        "reversal-flip composites have order exactly 4",
        all(
            (lambda g: g.compose(g).compose(g).compose(g).is_identity()
             and not g.compose(g).is_identity())(TAU.compose(MU[i]))
            for i in range(4)
        ),
    ))
    entries.append((
        "end-pair and middle-pair flips commute with reversal",
        TAU.compose(mu(1, 4)) == mu(1, 4).compose(TAU)
        and TAU.compose(mu(2, 3)) == mu(2, 3).compose(TAU),
    ))
    entries.append((
        "denominator factors as stated",
        q == (b - c) ** 2 * (a - 2 * b + c),
    ))
    entries.append((
        "numerators even, denominator odd",
        all(pi.flip_signs((-1, -1, -1, -1)) == pi for pi in p)
        and q.flip_signs((-1, -1, -1, -1)) == -q,
    ))
    entries.append((
        "involution preserves the first surface equation",
        (p[0] ** 2 - 2 * p[1] ** 2 + p[2] ** 2 - 2 * q * q).vanishes_on_surface(),
    ))
    entries.append((
        "involution preserves the second surface equation",
        (p[1] ** 2 - 2 * p[2] ** 2 + p[3] ** 2 - 2 * q * q).vanishes_on_surface(),
    ))
    entries.append((
        "first alternating-sum identity",
        (p[0] - 2 * p[1] + p[2] - (a - 2 * b + c) * q).vanishes_on_surface(),
    ))
    entries.append((
        "second alternating-sum identity",
        (p[1] - 2 * p[2] + p[3] - (b - 2 * c + d) * q).vanishes_on_surface(),
    ))
    entries.append((
        "involution composed with itself is the identity",
        _phi_self_composition_holds(pm),
    ))
    q_rev = q.swap_ends()
    entries.append((
        "reversal commutes with the involution",
        all(
            (p[i].swap_ends() * q - p[3 - i] * q_rev).vanishes_on_surface()
            for i in range(4)
        ),
    ))
    # With reversal commuting past phi, conjugating the composite map by the
    # reversal only touches its trivial part; that part is reversal-invariant.
    entries.append((
        "reversal commutes with the degree-growing composite",
        TAU.compose(ZETA_TWIST).compose(TAU) == ZETA_TWIST,
    ))
    sample = [(1, 2, 3, 4), (6, 23, 32, 39), (59, 630, 889, 1088)]
    entries.append((
        "composite map conjugation checked on sample points",
        all(
            TAU(apply_zeta(TAU(x))) == apply_zeta(x)
            for x in sample
        ),
    ))
    entries.append((
        "orbit of (1,2,3,4) follows the Pell-driven closed form",
        zeta_orbit((1, 2, 3, 4), 6)
        == [pell_point(n) for n in range(7)],
    ))
    return RelationReport(entries)
