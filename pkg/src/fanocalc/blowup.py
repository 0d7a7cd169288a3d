"""Intersection theory on blowups of Fano fourfolds along curves and surfaces.

A fourfold is described by the handful of intersection numbers that survive
into Riemann-Roch: H^4, the Fano index, the pairings of c_2 against H^2 and
c_1 H, chi(O) and the topological Euler number.  Blowing up a smooth center
turns every degree computation into bookkeeping over the monomials H^i E^j,
and those are fixed by the center's own invariants.

Sign conventions are pinned by the projection models out of projective space
(see the sanity scenarios and the corresponding oracle tests), not rederived
per call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union


class NonIntegralCharacteristicError(ArithmeticError):
    """Riemann-Roch produced a non-integer: the input data is inconsistent."""


class InconsistentContractionError(ValueError):
    """Divisor data incompatible with the claimed contraction type."""


@dataclass(frozen=True)
class FourfoldProfile:
    """Numerical profile of a smooth Fano fourfold of Picard rank one.

    h4 is the degree of the hyperplane class, index the Fano index
    (so K = -index * H), c2h2 the pairing of c_2 against H^2, and c1c2h the
    pairing of c_1 c_2 against H.  The latter is redundant and is checked.
    """

    name: str
    h4: int
    index: int
    c2h2: int
    c1c2h: int
    chi: int
    euler: int

    def __post_init__(self):
        if self.h4 < 1:
            raise ValueError("h4 must be positive")
        if self.index < 1:
            raise ValueError("the Fano index must be positive")
        if self.c1c2h != self.index * self.c2h2:
            raise ValueError(
                f"c1c2h = {self.c1c2h} contradicts index * c2h2 = {self.index * self.c2h2}"
            )


@dataclass(frozen=True)
class CurveCenter:
    """A smooth curve inside the fourfold: genus and hyperplane degree."""

    genus: int
    hc: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.hc < 1:
            raise ValueError("the curve must have positive degree")


@dataclass(frozen=True)
class SurfaceCenter:
    """A smooth surface S inside the fourfold.

    hhc = H^2 . S, hkc = H . K_S, kc2 = K_S^2, euler = topological Euler
    number of S, c2xc = c_2 of the ambient fourfold paired with S.  Set
    ``rational`` to enforce Noether's identity K^2 + Eu = 12 on the input.
    """

    hhc: int
    hkc: int
    kc2: int
    euler: int
    c2xc: int
    rational: bool = False

    def __post_init__(self):
        if self.hhc < 1:
            raise ValueError("the surface must have positive degree")
        if self.rational and self.kc2 + self.euler != 12:
            raise ValueError(
                f"K^2 + Eu = {self.kc2 + self.euler} violates Noether for a rational surface"
            )


Center = Union[CurveCenter, SurfaceCenter]


@dataclass(frozen=True)
class Divisor:
    """Integer combination a*H + b*E on the blowup."""

    h: int
    e: int

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.h + other.h, self.e + other.e)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.h - other.h, self.e - other.e)

    def __neg__(self) -> "Divisor":
        return Divisor(-self.h, -self.e)

    def __mul__(self, scalar: int) -> "Divisor":
        if not isinstance(scalar, int):
            return NotImplemented
        return Divisor(self.h * scalar, self.e * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        parts = []
        if self.h:
            parts.append("H" if self.h == 1 else f"{self.h}*H")
        if self.e:
            sign = "-" if self.e < 0 else ("+" if parts else "")
            mag = abs(self.e)
            parts.append(f"{sign}{'' if mag == 1 else str(mag) + '*'}E")
        return "".join(parts) if parts else "0"


H = Divisor(1, 0)
E = Divisor(0, 1)


@dataclass(frozen=True)
class BlowupModel:
    """The blowup of a profiled fourfold along a curve or surface center."""

    base: FourfoldProfile
    center: Center

    @property
    def discrepancy(self) -> int:
        return 2 if isinstance(self.center, CurveCenter) else 1

    @property
    def canonical(self) -> Divisor:
        return Divisor(-self.base.index, self.discrepancy)

    @property
    def c1(self) -> Divisor:
        return -self.canonical

    def c2_normal(self) -> int:
        """c_2 of the normal bundle of a surface center, integrated."""
        if not isinstance(self.center, SurfaceCenter):
            raise ValueError("only a surface center has a rank-2 normal bundle")
        s, r = self.center, self.base.index
        return s.c2xc - s.euler + r * s.hkc + s.kc2


def monomial_number(model: BlowupModel, h_power: int, e_power: int) -> int:
    """The intersection number H^h_power . E^e_power on the blowup."""
    if h_power < 0 or e_power < 0 or h_power + e_power != 4:
        raise ValueError("exponents must be non-negative and sum to 4")
    base, center, r = model.base, model.center, model.base.index
    if e_power == 0:
        return base.h4
    if isinstance(center, CurveCenter):
        if e_power == 1 or e_power == 2:
            return 0
        if e_power == 3:
            return center.hc
        return r * center.hc + 2 * center.genus - 2
    if e_power == 1:
        return 0
    if e_power == 2:
        return -center.hhc
    if e_power == 3:
        return -center.hkc - r * center.hhc
    return center.c2xc - center.euler - r * center.hkc - r * r * center.hhc


def quartic_number(model: BlowupModel, d1: Divisor, d2: Divisor, d3: Divisor, d4: Divisor) -> int:
    """D1 . D2 . D3 . D4, expanded multilinearly over the H/E monomials."""
    total = 0
    for c1, p1 in ((d1.h, 0), (d1.e, 1)):
        for c2, p2 in ((d2.h, 0), (d2.e, 1)):
            for c3, p3 in ((d3.h, 0), (d3.e, 1)):
                for c4, p4 in ((d4.h, 0), (d4.e, 1)):
                    coeff = c1 * c2 * c3 * c4
                    if coeff:
                        e_power = p1 + p2 + p3 + p4
                        total += coeff * monomial_number(model, 4 - e_power, e_power)
    return total


def c2_blowup(model: BlowupModel) -> dict:
    """c_2 of the blowup as a combination of pairing symbols.

    Keys: "c2" for the pullback of the base c_2, "fiber" for the class of a
    fiber of the exceptional divisor over a curve center, "center" for the
    pullback of the surface center's class, "he" for the product of the
    hyperplane pullback with the exceptional divisor.
    """
    r = model.base.index
    if isinstance(model.center, CurveCenter):
        g, hc = model.center.genus, model.center.hc
        return {"c2": 1, "fiber": 2 * g - 2 - r * hc}
    return {"c2": 1, "center": 1, "he": -r}


def pair_degree2(model: BlowupModel, symbol: str, d1: Divisor, d2: Divisor) -> int:
    """Pair a codimension-2 symbol (as in :func:`c2_blowup`) with D1 . D2."""
    if symbol in ("hh", "he", "ee"):
        first = {"hh": (H, H), "he": (H, E), "ee": (E, E)}[symbol]
        return quartic_number(model, first[0], first[1], d1, d2)
    if symbol == "c2":
        table = (model.base.c2h2, 0, 0)
        if isinstance(model.center, SurfaceCenter):
            table = (model.base.c2h2, 0, -model.center.c2xc)
    elif symbol == "fiber":
        if not isinstance(model.center, CurveCenter):
            raise ValueError("fiber classes of this kind belong to curve centers")
        table = (0, 0, 1)
    elif symbol == "center":
        if not isinstance(model.center, SurfaceCenter):
            raise ValueError("the center symbol requires a surface center")
        table = (model.center.hhc, 0, -model.c2_normal())
    else:
        raise ValueError(f"unknown degree-2 symbol {symbol!r}")
    phh, phe, pee = table
    return (
        d1.h * d2.h * phh
        + (d1.h * d2.e + d1.e * d2.h) * phe
        + d1.e * d2.e * pee
    )


def _c2_pairing(model: BlowupModel, d1: Divisor, d2: Divisor) -> int:
    return sum(
        coeff * pair_degree2(model, symbol, d1, d2)
        for symbol, coeff in c2_blowup(model).items()
    )


def chi_riemann_roch(model: BlowupModel, d: Divisor) -> int:
    """chi(O(D)) on the blowup by Riemann-Roch.

    The degree-4 Todd integral is replaced by chi(O) of the base, which the
    blowup preserves.  A bracket that fails the 24-divisibility test means
    the model data cannot come from a smooth fourfold, and raises
    :class:`NonIntegralCharacteristicError`.
    """
    c1 = model.c1
    d4 = quartic_number(model, d, d, d, d)
    d3c1 = quartic_number(model, d, d, d, c1)
    d2c1c1 = quartic_number(model, d, d, c1, c1)
    d2c2 = _c2_pairing(model, d, d)
    dc1c2 = sum(
        coeff * pair_degree2(model, symbol, d, c1)
        for symbol, coeff in c2_blowup(model).items()
    )
    bracket = d4 + 2 * d3c1 + d2c1c1 + d2c2 + dc1c2
    if bracket % 24:
        raise NonIntegralCharacteristicError(
            f"Riemann-Roch bracket {bracket} for {d} is not divisible by 24"
        )
    return bracket // 24 + model.base.chi


def euler_blowup(model: BlowupModel) -> int:
    """Topological Euler number of the blowup."""
    if isinstance(model.center, CurveCenter):
        return model.base.euler + 2 * (2 - 2 * model.center.genus)
    return model.base.euler + model.center.euler


def threefold_blowup_k3(k3: int, kc: int, genus: int) -> int:
    """(-K)^3 change under blowing up a curve in a threefold, reported as K^3."""
    return k3 - 2 * kc + 2 - 2 * genus


def solve_linear(a: int, b: int, rhs: int = 0) -> Fraction:
    """The solution of a*x + b = rhs, exactly."""
    if a == 0:
        raise ValueError("cannot solve a degenerate linear equation")
    return Fraction(rhs - b, a)


class CenterInference(NamedTuple):
    degree: int
    canonical_pairing: int
    c2_minus_euler: int


def infer_center_invariants(
    model: BlowupModel,
    hyperplane: Divisor,
    exceptional: Divisor,
    index: int,
) -> CenterInference:
    """Invariants of the surface contracted on the other side of a link.

    ``hyperplane`` and ``exceptional`` name the divisor classes that play H
    and E for the second contraction, expressed in the coordinates of this
    model; ``index`` is the Fano index of the second target.  The inversion
    of the surface-center monomial table requires hyperplane^3 . exceptional
    to vanish; if it does not, the divisors do not describe a surface
    contraction and :class:`InconsistentContractionError` is raised.
    """
    def q(*divs: Divisor) -> int:
        return quartic_number(model, *divs)

    l, e = hyperplane, exceptional
    if q(l, l, l, e) != 0:
        raise InconsistentContractionError(
            f"{l}^3 . {e} = {q(l, l, l, e)} does not vanish"
        )
    degree = -q(l, l, e, e)
    canonical_pairing = -q(l, e, e, e) - index * degree
    c2_minus_euler = q(e, e, e, e) + index * canonical_pairing + index * index * degree
    return CenterInference(degree, canonical_pairing, c2_minus_euler)


def adjunction_genus(lk: int, l2: int) -> int:
    """Genus of a curve section from L . K and L^2 on the surface."""
    if (lk + l2) % 2:
        raise ValueError(f"L.K + L^2 = {lk + l2} must be even")
    return (lk + l2) // 2 + 1


class NoetherCheck(NamedTuple):
    holds: bool
    picard_rank: int


def noether_check(kc2: int, euler: int) -> NoetherCheck:
    """Noether's identity for a rational surface, plus the Picard rank it implies."""
    return NoetherCheck(kc2 + euler == 12, 10 - kc2)


def genus_from_degree(l4: int) -> int:
    """Genus of a Fano fourfold of index 2 from the degree of its half-anticanonical class."""
    if l4 % 2:
        raise ValueError(f"degree {l4} must be even")
    return l4 // 2 + 1
