"""Chern-class calculus for Grassmannians and their smooth linear sections.

Total Chern classes are graded tuples of Schubert cycles.  Tensor-product
classes are computed by the splitting principle made literal: the product
prod (1 + x_i + y_j) over formal roots is expanded exactly, rewritten in the
elementary symmetric polynomials of the two groups of roots, and only then
evaluated on Schubert cycles.  The rewriting step is the classic greedy
leading-term reduction, so every coefficient stays an exact integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .schubert import (
    ContextMismatchError,
    Grassmannian,
    SchubertCycle,
    normalize_partition,
    sigma,
    unit,
    zero,
)

_MAX_TENSOR_RANK = 6


class InconsistentPairingError(ValueError):
    """A linear pairing system admits no (integral) solution."""


class TotalChernClass:
    """Graded total class c_0 + c_1 + ... + c_limit with c_0 = 1 implied.

    Components above ``limit`` are zero.  Instances are immutable.
    """

    __slots__ = ("context", "components")

    def __init__(self, context: Grassmannian, components):
        comps = tuple(components)
        if not comps or comps[0] != unit(context):
            raise ValueError("a total Chern class must start with 1")
        for i, c in enumerate(comps):
            if c.context != context:
                raise ContextMismatchError("component from a different context")
            if c.codim != i:
                raise ValueError(f"component {i} has codimension {c.codim}")
        self.context = context
        self.components = comps

    @property
    def limit(self) -> int:
        return len(self.components) - 1

    def component(self, i: int) -> SchubertCycle:
        if 0 <= i <= self.limit:
            return self.components[i]
        return zero(self.context, max(i, 0))

    def truncate(self, limit: int) -> "TotalChernClass":
        limit = max(0, limit)
        comps = [self.component(i) for i in range(limit + 1)]
        return TotalChernClass(self.context, comps)

    def dual(self) -> "TotalChernClass":
        """Total class of the dual bundle: c_i |-> (-1)^i c_i."""
        comps = [c if i % 2 == 0 else -c for i, c in enumerate(self.components)]
        return TotalChernClass(self.context, comps)

    def inverse(self, limit: int | None = None) -> "TotalChernClass":
        """Formal series inverse, component by component."""
        limit = self.limit if limit is None else limit
        inv = [unit(self.context)]
        for m in range(1, limit + 1):
            acc = zero(self.context, m)
            for j in range(1, m + 1):
                acc = acc - self.component(j) * inv[m - j]
            inv.append(acc)
        return TotalChernClass(self.context, inv)

    def __mul__(self, other):
        if not isinstance(other, TotalChernClass):
            return NotImplemented
        if self.context != other.context:
            raise ContextMismatchError("total classes from different contexts")
        limit = min(self.context.dim, self.limit + other.limit)
        comps = []
        for m in range(limit + 1):
            acc = zero(self.context, m)
            for j in range(m + 1):
                acc = acc + self.component(j) * other.component(m - j)
            comps.append(acc)
        return TotalChernClass(self.context, comps)

    def __eq__(self, other):
        if not isinstance(other, TotalChernClass):
            return NotImplemented
        if self.context != other.context:
            return False
        top = max(self.limit, other.limit)
        return all(self.component(i) == other.component(i) for i in range(top + 1))

    def __repr__(self):
        return "1 + " + " + ".join(f"({c})" for c in self.components[1:])


def unit_total(ctx: Grassmannian, limit: int = 0) -> TotalChernClass:
    return TotalChernClass(ctx, [unit(ctx)] + [zero(ctx, i) for i in range(1, limit + 1)])


@dataclass(frozen=True)
class BundleModel:
    """A vector bundle presented by its rank and total Chern class."""

    rank: int
    total: TotalChernClass

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("bundle rank must be positive")
        for i in range(self.rank + 1, self.total.limit + 1):
            if not self.total.component(i).is_zero():
                raise ValueError("Chern class above the rank must vanish")


def universal_bundles(ctx: Grassmannian) -> tuple[BundleModel, BundleModel]:
    """The dual tautological subbundle and the quotient bundle.

    The subbundle dual has c_i = sigma_{1^i} (i <= k), the quotient has
    c_r = sigma_r (r <= n-k); their duals satisfy the Whitney relation
    c(sub.dual) * c(quot) = 1.
    """
    sub = TotalChernClass(ctx, [sigma(ctx, *([1] * i)) for i in range(ctx.k + 1)])
    quot = TotalChernClass(ctx, [sigma(ctx, r) for r in range(ctx.width + 1)])
    return BundleModel(ctx.k, sub), BundleModel(ctx.width, quot)


@lru_cache(maxsize=None)
def tangent_bundle(ctx: Grassmannian) -> BundleModel:
    """Tangent bundle: (dual subbundle) tensor (quotient bundle)."""
    sub, quot = universal_bundles(ctx)
    return BundleModel(ctx.dim, tensor_chern(sub, quot))


# ---------------------------------------------------------------------------
# exact polynomial support for the splitting-principle expansion

_Poly = dict  # exponent tuple -> int coefficient


def _poly_mul(p: _Poly, q: _Poly, cap: int | None = None) -> _Poly:
    out: _Poly = {}
    for e1, c1 in p.items():
        d1 = sum(e1)
        for e2, c2 in q.items():
            if cap is not None and d1 + sum(e2) > cap:
                continue
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
            if not out[key]:
                del out[key]
    return out


def _elementary(nv: int, var_indices: tuple[int, ...], degree: int) -> _Poly:
    """e_degree over the chosen variables, inside an nv-variable ring."""
    out: _Poly = {}

    def rec(start, left, exps):
        if left == 0:
            out[tuple(exps)] = 1
            return
        for pos in range(start, len(var_indices) - left + 1):
            exps2 = list(exps)
            exps2[var_indices[pos]] = 1
            rec(pos + 1, left - 1, exps2)

    rec(0, degree, [0] * nv)
    return out


@lru_cache(maxsize=None)
def _tensor_product_poly(ra: int, rb: int, cap: int) -> tuple[_Poly, ...]:
    """prod_{i,j} (1 + x_i + y_j) truncated at total degree cap, split by degree."""
    nv = ra + rb
    poly: _Poly = {(0,) * nv: 1}
    for i in range(ra):
        for j in range(rb):
            factor: _Poly = {(0,) * nv: 1}
            ei = [0] * nv
            ei[i] = 1
            factor[tuple(ei)] = 1
            ej = [0] * nv
            ej[ra + j] = 1
            factor[tuple(ej)] = 1
            poly = _poly_mul(poly, factor, cap)
    graded: list[_Poly] = [{} for _ in range(cap + 1)]
    for exps, coeff in poly.items():
        graded[sum(exps)][exps] = coeff
    return tuple(graded)


@lru_cache(maxsize=None)
def _tensor_epoly(ra: int, rb: int, degree: int):
    """Degree part of c(A tensor B) written in elementary symmetric monomials.

    Returns a sorted tuple of ((a_mults, b_mults), coeff) where a_mults[i-1]
    is the exponent of e_i(x) and likewise for b_mults over the y-roots.
    """
    nv = ra + rb
    part = dict(_tensor_product_poly(ra, rb, degree)[degree])
    ex = [_elementary(nv, tuple(range(ra)), i) for i in range(ra + 1)]
    ey = [_elementary(nv, tuple(range(ra, nv)), j) for j in range(rb + 1)]
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    guard = 0
    while part:
        guard += 1
        if guard > 100000:
            raise RuntimeError("symmetric reduction failed to terminate")
        lead = max(part)
        coeff = part[lead]
        alpha, beta = lead[:ra], lead[ra:]
        if any(alpha[i] < alpha[i + 1] for i in range(ra - 1)) or any(
            beta[j] < beta[j + 1] for j in range(rb - 1)
        ):
            raise RuntimeError("leading term is not bisymmetric-dominant")
        a_mults = tuple(
            alpha[i] - (alpha[i + 1] if i + 1 < ra else 0) for i in range(ra)
        )
        b_mults = tuple(
            beta[j] - (beta[j + 1] if j + 1 < rb else 0) for j in range(rb)
        )
        factor: _Poly = {(0,) * nv: 1}
        for i, mult in enumerate(a_mults):
            for _ in range(mult):
                factor = _poly_mul(factor, ex[i + 1])
        for j, mult in enumerate(b_mults):
            for _ in range(mult):
                factor = _poly_mul(factor, ey[j + 1])
        for exps, c in factor.items():
            key = exps
            part[key] = part.get(key, 0) - coeff * c
            if not part[key]:
                del part[key]
        key = (a_mults, b_mults)
        out[key] = out.get(key, 0) + coeff
    return tuple(sorted((k, v) for k, v in out.items() if v))


def tensor_chern(a: BundleModel, b: BundleModel) -> TotalChernClass:
    """Total Chern class of a tensor product of bundle models."""
    if a.total.context != b.total.context:
        raise ContextMismatchError("bundle models from different contexts")
    if a.rank > _MAX_TENSOR_RANK or b.rank > _MAX_TENSOR_RANK:
        raise ValueError(f"tensor ranks above {_MAX_TENSOR_RANK} are not supported")
    ctx = a.total.context
    limit = min(ctx.dim, a.rank * b.rank)
    comps = [unit(ctx)]
    for m in range(1, limit + 1):
        acc = zero(ctx, m)
        for (a_mults, b_mults), coeff in _tensor_epoly(a.rank, b.rank, m):
            cyc = unit(ctx)
            for i, mult in enumerate(a_mults):
                for _ in range(mult):
                    cyc = cyc * a.total.component(i + 1)
                    if cyc.is_zero():
                        break
            for j, mult in enumerate(b_mults):
                if cyc.is_zero():
                    break
                for _ in range(mult):
                    cyc = cyc * b.total.component(j + 1)
                    if cyc.is_zero():
                        break
            acc = acc + coeff * cyc
        comps.append(acc)
    return TotalChernClass(ctx, comps)


# ---------------------------------------------------------------------------
# linear sections

@dataclass(frozen=True)
class SectionModel:
    """A smooth intersection of ``codim`` hyperplane sections of Gr(k, n).

    ``chern`` holds the restriction-valued total class: components live in the
    ambient ring and stand for their restrictions to the section.
    """

    context: Grassmannian
    codim: int
    chern: TotalChernClass

    @property
    def dim(self) -> int:
        return self.context.dim - self.codim

    @property
    def index(self) -> int:
        """r with c_1 = r * sigma_1."""
        c1 = self.chern.component(1)
        terms = c1.terms
        if set(terms) != {(1,)}:
            raise ValueError(f"first Chern class {c1} is not a multiple of sigma_1")
        return terms[(1,)]


def section_chern(ambient: TotalChernClass, codim: int, limit: int | None = None) -> SectionModel:
    """Adjunction along ``codim`` hyperplanes: divide by (1 + sigma_1)^codim."""
    ctx = ambient.context
    if codim < 0 or codim >= ctx.dim:
        raise ValueError("section codimension must satisfy 0 <= codim < dim")
    sdim = ctx.dim - codim
    limit = sdim if limit is None else min(limit, ctx.dim)
    s1 = sigma(ctx, 1)
    comps = []
    for m in range(limit + 1):
        acc = zero(ctx, m)
        for j in range(m + 1):
            # coefficient of sigma_1^(m-j) in (1 + sigma_1)^(-codim)
            t = m - j
            coeff = 1 if t == 0 else (-1) ** t * math.comb(codim + t - 1, t)
            if coeff:
                acc = acc + coeff * (ambient.component(j) * s1 ** (m - j))
        comps.append(acc)
    return SectionModel(ctx, codim, TotalChernClass(ctx, comps))


def section_degree(model: SectionModel, cycle: SchubertCycle) -> int:
    """Degree on the section of an ambient cycle: integrate against sigma_1^codim."""
    if cycle.context != model.context:
        raise ContextMismatchError("cycle from a different context")
    return (cycle * sigma(model.context, 1) ** model.codim).integral()


def euler_of_section(model: SectionModel) -> int:
    """Euler number: degree of the top Chern class of the section."""
    return section_degree(model, model.chern.component(model.dim))


@dataclass(frozen=True)
class PlaneClass:
    """A plane (linearly embedded P^2) inside a section, named by its box partition."""

    context: Grassmannian
    parts: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        parts = normalize_partition(self.parts)
        object.__setattr__(self, "parts", parts)
        if not self.context.contains(parts):
            raise ValueError(f"{parts} violates the box of {self.context}")

    def cycle(self) -> SchubertCycle:
        return sigma(self.context, *self.parts)


def plane_normal_bundle(model: SectionModel, plane: PlaneClass) -> tuple[int, int]:
    """(c_1, c_2) of the normal bundle of a plane inside the section.

    c_1 is reported by its degree on a line: (index - 3), since the plane's
    own Chern classes are 3l and 3.  c_2 comes from restricting the Whitney
    identity c(N) c(plane) = c(section)|_plane and pairing in the ambient
    ring.
    """
    if plane.context != model.context:
        raise ContextMismatchError("plane from a different context")
    if sum(plane.parts) != model.context.dim - 2:
        raise ValueError("plane class must have the codimension of a surface")
    a = model.index - 3
    pairing = (model.chern.component(2) * plane.cycle()).integral()
    return a, pairing - 3 * a - 3


def plane_intersection_matrix(
    model: SectionModel,
    planes: tuple[PlaneClass, PlaneClass],
    h2_coefficients: tuple[int, int] | None = None,
) -> list[list[int]]:
    """Intersection matrix of two plane classes spanning the middle cohomology.

    Diagonal entries are the normal-bundle c_2's (self-intersections).  The
    square of the hyperplane class decomposes as u * plane_0 + v * plane_1;
    by default u and v are read off from the ambient expansion of
    sigma_1^(codim + 2).  The off-diagonal entry is then solved from the two
    pairings deg(sigma_1^2 . plane_i); disagreement between the two
    equations, or a non-integral solution, raises
    :class:`InconsistentPairingError`.
    """
    if len(planes) != 2:
        raise ValueError("exactly two plane classes are required")
    if h2_coefficients is None:
        push = sigma(model.context, 1) ** (model.codim + 2)
        u = push.coefficient(planes[0].parts)
        v = push.coefficient(planes[1].parts)
    else:
        u, v = h2_coefficients
    diag = [plane_normal_bundle(model, p)[1] for p in planes]
    s1sq = sigma(model.context, 1) ** 2
    pairings = [(s1sq * p.cycle()).integral() for p in planes]
    # pairings[0] = u*diag[0] + v*x ; pairings[1] = u*x + v*diag[1]
    candidates = []
    if v != 0:
        candidates.append((pairings[0] - u * diag[0], v))
    if u != 0:
        candidates.append((pairings[1] - v * diag[1], u))
    if not candidates:
        raise InconsistentPairingError("inconsistent pairing system: u = v = 0")
    values = []
    for num, den in candidates:
        if num % den:
            raise InconsistentPairingError(
                f"inconsistent pairing system: {num} is not divisible by {den}"
            )
        values.append(num // den)
    if len(set(values)) != 1:
        raise InconsistentPairingError(
            f"inconsistent pairing system: off-diagonal candidates {values}"
        )
    x = values[0]
    return [[diag[0], x], [x, diag[1]]]
