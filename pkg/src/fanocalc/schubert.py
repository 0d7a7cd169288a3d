"""Exact Schubert calculus on the Grassmannian Gr(k, n).

Cycles are integer combinations of Schubert classes sigma_lambda, indexed by
partitions lying in the k x (n-k) box.  Products are computed by expanding
one factor through the Giambelli determinant into special classes sigma_p
and applying the Pieri rule repeatedly, so every structure constant is an
exact (arbitrary-precision) integer.  All values are immutable and all
operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations


class ContextMismatchError(ValueError):
    """Two cycles from different Grassmannians were combined."""


def _check_kn(k: int, n: int) -> None:
    if k < 1 or n <= k:
        raise ValueError(f"need n > k >= 1, got k={k}, n={n}")


def grass_dim(k: int, n: int) -> int:
    """Dimension k(n-k) of Gr(k, n)."""
    _check_kn(k, n)
    return k * (n - k)


def grass_euler(k: int, n: int) -> int:
    """Euler number of Gr(k, n): the number C(n, k) of Schubert cells."""
    _check_kn(k, n)
    return math.comb(n, k)


def normalize_partition(parts) -> tuple[int, ...]:
    """Validate a weakly decreasing sequence of non-negative integers.

    Trailing zeros are stripped; the weight (sum of parts) is the
    codimension of the class the partition names.
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in partition {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def dual_partition(ctx: "Grassmannian", parts) -> tuple[int, ...]:
    """Complement of a box partition: the Poincare-dual basis label."""
    parts = normalize_partition(parts)
    if not ctx.contains(parts):
        raise ValueError(f"{parts} does not fit in the box of {ctx}")
    padded = parts + (0,) * (ctx.k - len(parts))
    return normalize_partition(ctx.width - p for p in reversed(padded))


@dataclass(frozen=True)
class Grassmannian:
    """Ambient context: the space of k-planes in an n-space."""

    k: int
    n: int

    def __post_init__(self):
        _check_kn(self.k, self.n)

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def point(self) -> tuple[int, ...]:
        """The full-box partition, i.e. the class of a point."""
        return (self.width,) * self.k

    def contains(self, parts: tuple[int, ...]) -> bool:
        return len(parts) <= self.k and (not parts or parts[0] <= self.width)

    def basis(self, codim: int | None = None) -> list[tuple[int, ...]]:
        """All box partitions, optionally restricted to one codimension."""
        every = _box_partitions(self.k, self.width)
        if codim is None:
            return sorted(every)
        return sorted(p for p in every if sum(p) == codim)

    def __repr__(self):
        return f"Gr({self.k},{self.n})"


@lru_cache(maxsize=None)
def _box_partitions(k: int, width: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(prefix, maxpart):
        out.append(tuple(prefix))
        if len(prefix) == k:
            return
        for p in range(1, maxpart + 1):
            rec(prefix + [p], p)

    rec([], width)
    return tuple(out)


class SchubertCycle:
    """A homogeneous integer combination of Schubert classes.

    ``terms`` maps box partitions to non-zero integer coefficients; every key
    has weight ``codim``.  The zero cycle keeps its declared codimension, so
    products that land above the dimension of the ambient Grassmannian stay
    well-typed.
    """

    __slots__ = ("context", "codim", "_terms")

    def __init__(self, context: Grassmannian, codim: int, terms: dict | None = None):
        if codim < 0:
            raise ValueError("codimension must be non-negative")
        clean: dict[tuple[int, ...], int] = {}
        for parts, coeff in (terms or {}).items():
            parts = normalize_partition(parts)
            if not context.contains(parts):
                raise ValueError(f"{parts} violates the box of {context}")
            if sum(parts) != codim:
                raise ValueError(
                    f"mixed codimension: {parts} has weight {sum(parts)}, expected {codim}"
                )
            if coeff:
                clean[parts] = clean.get(parts, 0) + int(coeff)
        self.context = context
        self.codim = codim
        self._terms = {p: c for p, c in clean.items() if c}

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coefficient(self, parts) -> int:
        return self._terms.get(normalize_partition(parts), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _require_same_context(self, other: "SchubertCycle"):
        if self.context != other.context:
            raise ContextMismatchError(
                f"cycles live in {self.context} and {other.context}"
            )

    def __eq__(self, other):
        if not isinstance(other, SchubertCycle):
            return NotImplemented
        if self.context != other.context or self._terms != other._terms:
            return False
        # two zero cycles of different codimension are still distinct
        return self._terms or self.codim == other.codim

    def __hash__(self):
        return hash((self.context, self.codim, tuple(sorted(self._terms.items()))))

    def __add__(self, other):
        if not isinstance(other, SchubertCycle):
            return NotImplemented
        self._require_same_context(other)
        if self._terms and other._terms and self.codim != other.codim:
            raise ValueError("cannot add cycles of different codimension")
        codim = self.codim if self._terms or not other._terms else other.codim
        merged = dict(self._terms)
        for p, c in other._terms.items():
            merged[p] = merged.get(p, 0) + c
        return SchubertCycle(self.context, codim, merged)

    def __neg__(self):
        return SchubertCycle(
            self.context, self.codim, {p: -c for p, c in self._terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertCycle(
                self.context, self.codim, {p: c * other for p, c in self._terms.items()}
            )
        if isinstance(other, SchubertCycle):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("cycle powers need a non-negative integer exponent")
        out = unit(self.context)
        for _ in range(exponent):
            out = out * self
        return out

    def pieri(self, p: int, kind: str = "row") -> "SchubertCycle":
        """Multiply by the special class sigma_p (``row``) or sigma_{1^p} (``column``).

        Out-of-box partitions are dropped, which is exactly the quotient-ring
        product; ``p = 0`` is the identity.
        """
        if p < 0:
            raise ValueError("Pieri step needs p >= 0")
        if p == 0:
            return self
        ctx = self.context
        strips = _row_strips if kind == "row" else _column_strips
        if kind not in ("row", "column"):
            raise ValueError(f"unknown strip kind {kind!r}")
        out: dict[tuple[int, ...], int] = {}
        for mu, coeff in self._terms.items():
            for lam in strips(mu, p, ctx.k, ctx.width):
                out[lam] = out.get(lam, 0) + coeff
        return SchubertCycle(ctx, self.codim + p, out)

    def integral(self) -> int:
        """Coefficient of the point class when codim equals dim, else 0."""
        if self.codim != self.context.dim:
            return 0
        return self._terms.get(self.context.point, 0)

    def __repr__(self):
        if not self._terms:
            return "0"
        chunks = []
        for parts, coeff in sorted(self._terms.items()):
            name = "sigma[" + ",".join(str(p) for p in parts) + "]" if parts else "1"
            if name == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = name
            else:
                body = f"{abs(coeff)}*{name}"
            chunks.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def sigma(ctx: Grassmannian, *parts) -> SchubertCycle:
    """The Schubert class sigma_lambda; identically zero outside the box."""
    lam = normalize_partition(parts)
    if not ctx.contains(lam):
        return SchubertCycle(ctx, sum(lam), {})
    return SchubertCycle(ctx, sum(lam), {lam: 1})


def unit(ctx: Grassmannian) -> SchubertCycle:
    return sigma(ctx)


def zero(ctx: Grassmannian, codim: int = 0) -> SchubertCycle:
    return SchubertCycle(ctx, codim, {})


def point_class(ctx: Grassmannian) -> SchubertCycle:
    return sigma(ctx, *ctx.point)


def _row_strips(mu, p, k, width):
    """Partitions lam >= mu with lam/mu a horizontal p-strip inside the box."""
    mu = tuple(mu) + (0,) * (k - len(mu))
    out = []

    def rec(i, rem, prefix):
        if i == k:
            if rem == 0:
                out.append(normalize_partition(prefix))
            return
        lo = mu[i]
        hi = min(width if i == 0 else mu[i - 1], lo + rem)
        for lam_i in range(lo, hi + 1):
            rec(i + 1, rem - (lam_i - lo), prefix + [lam_i])

    rec(0, p, [])
    return out


def _column_strips(mu, p, k, width):
    """Partitions lam >= mu with lam/mu a vertical p-strip inside the box."""
    mu = tuple(mu) + (0,) * (k - len(mu))
    out = []

    def rec(i, rem, prefix):
        if i == k:
            if rem == 0:
                out.append(normalize_partition(prefix))
            return
        for extra in (0, 1):
            lam_i = mu[i] + extra
            if extra > rem:
                continue
            if i == 0:
                if lam_i > width:
                    continue
            elif lam_i > prefix[i - 1]:
                continue
            rec(i + 1, rem - extra, prefix + [lam_i])

    rec(0, p, [])
    return out


@lru_cache(maxsize=None)
def _giambelli_monomials(lam: tuple[int, ...]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Expansion of det(sigma_{lam_i + j - i}) into signed special-class words.

    Entries sigma_m with m < 0 kill the permutation term; m = 0 is the unit
    and is skipped.  Box truncation is left to the Pieri step, which never
    produces out-of-box rows.
    """
    r = len(lam)
    words = []
    for perm in permutations(range(r)):
        sign = 1
        for i in range(r):
            for j in range(i + 1, r):
                if perm[i] > perm[j]:
                    sign = -sign
        entries = []
        dead = False
        for i in range(r):
            m = lam[i] + perm[i] - i
            if m < 0:
                dead = True
                break
            if m > 0:
                entries.append(m)
        if not dead:
            words.append((sign, tuple(entries)))
    return tuple(words)


def multiply(a: SchubertCycle, b: SchubertCycle) -> SchubertCycle:
    """Chow-ring product, via Giambelli expansion of ``a`` and iterated Pieri."""
    a._require_same_context(b)
    ctx = a.context
    codim = a.codim + b.codim
    if codim > ctx.dim or a.is_zero() or b.is_zero():
        return zero(ctx, codim)
    total = zero(ctx, codim)
    for lam, ca in sorted(a._terms.items()):
        for sign, word in _giambelli_monomials(lam):
            cur = b
            for m in word:
                cur = cur.pieri(m, "row")
                if cur.is_zero():
                    break
            total = total + (ca * sign) * cur
    return total


def pieri_multiply(cycle: SchubertCycle, p: int, kind: str = "row") -> SchubertCycle:
    """Free-function form of :meth:`SchubertCycle.pieri`."""
    return cycle.pieri(p, kind)


def integrate(cycle: SchubertCycle) -> int:
    """Free-function form of :meth:`SchubertCycle.integral`."""
    return cycle.integral()
