"""Bohr-Sommerfeld points of the double Gelfand-Cetlin system.

A BS point is an integer vector of length 2b, b = n(n+1)/2, laid out as the
GC vector of the first moment-map component followed by that of the second:

    values[0:n]      weight alpha
    values[n:b]      point of GC_alpha
    values[b:b+n]    dual weight alpha* = (-alpha_n, ..., -alpha_1)
    values[b+n:2b]   point of GC_alpha*

Two variants are supported. ``CLOSURE`` uses the full image of the system
(non-increasing weights, closed polytopes). ``STRICT`` uses the image of the
strongly regular locus (strictly decreasing weights, polytope interiors).
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from numbers import Integral, Rational

import numpy as np

from .errors import CapacityError, DomainError
from .gc import CotangentPoint, DoubleGCVector, GCVector, gc_preimage, triangular_size
from .linalg import UnitaryMatrix
from .polytope import (
    DEFAULT_CAP,
    DominantWeight,
    GCPattern,
    contains,
    contains_interior,
    count_integral_points,
    dominant_weights,
    dual_weight,
    enumerate_integral_points,
)

__all__ = [
    "BSVariant",
    "BSPoint",
    "n_from_length",
    "is_bs_point",
    "enumerate_bs_points",
    "count_bs_points",
    "to_triple",
    "from_triple",
    "round_to_lattice",
    "realize",
    "to_jsonl",
    "to_csv",
]


class BSVariant(enum.Enum):
    STRICT = "strict"
    CLOSURE = "closure"

    @property
    def strict(self):
        return self is BSVariant.STRICT


def n_from_length(length: int) -> int:
    """Solve length = n(n+1) for n >= 1."""
    n = (math.isqrt(4 * length + 1) - 1) // 2
    if n < 1 or n * (n + 1) != length:
        raise DomainError(f"length {length} is not of the form n(n+1)")
    return n


@dataclass(frozen=True)
class BSPoint:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n * (self.n + 1):
            raise DomainError(f"BS point for n={self.n} needs {self.n * (self.n + 1)} values")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def b(self):
        return triangular_size(self.n)

    def weight(self) -> tuple[int, ...]:
        return self.values[:self.n]

    def dual_weight(self) -> tuple[int, ...]:
        return self.values[self.b:self.b + self.n]

    def pattern(self) -> tuple[int, ...]:
        return self.values[self.n:self.b]

    def dual_pattern(self) -> tuple[int, ...]:
        return self.values[self.b + self.n:]

    def mirror(self) -> "BSPoint":
        """Swap the two halves: the BS point of (alpha*, dual pattern, pattern)."""
        b = self.b
        return BSPoint(self.n, self.values[b:] + self.values[:b])

    def to_json(self) -> str:
        return json.dumps(list(self.values))


def _exact_ints(values):
    out = []
    for v in values:
        if isinstance(v, bool):
            return None
        if isinstance(v, Integral):
            out.append(int(v))
        elif isinstance(v, Rational) and v.denominator == 1:
            out.append(int(v.numerator))
        else:
            return None
    return out


def is_bs_point(values, variant: BSVariant = BSVariant.CLOSURE) -> bool:
    """Decide membership of an integer vector in the Bohr-Sommerfeld set.

    Only exact integers qualify; floats must go through ``round_to_lattice``
    first. The length must be n(n+1) for some n.
    """
    values = list(values)
    n = n_from_length(len(values))
    ints = _exact_ints(values)
    if ints is None:
        return False
    b = triangular_size(n)
    alpha = ints[:n]
    if variant.strict:
        if any(x <= y for x, y in zip(alpha, alpha[1:])):
            return False
    elif any(x < y for x, y in zip(alpha, alpha[1:])):
        return False
    if any(ints[b + j] != -alpha[n - 1 - j] for j in range(n)):
        return False
    member = contains_interior if variant.strict else contains
    alpha_star = dual_weight(alpha)
    return member(alpha, ints[n:b]) and member(alpha_star, ints[b + n:])


def from_triple(alpha, pattern: GCPattern, dual_pattern: GCPattern) -> BSPoint:
    """Assemble (alpha, pattern over alpha, pattern over alpha*) into a BS point."""
    w = alpha if isinstance(alpha, DominantWeight) else DominantWeight(tuple(alpha))
    if pattern.alpha != w or dual_pattern.alpha != dual_weight(w):
        raise DomainError("patterns must sit over alpha and alpha*")
    return BSPoint(w.n, w.alpha + pattern.lower + dual_pattern.alpha.alpha + dual_pattern.lower)


def to_triple(p: BSPoint) -> tuple[DominantWeight, GCPattern, GCPattern]:
    if not is_bs_point(p.values, BSVariant.CLOSURE):
        raise DomainError(f"{p.values} is not a Bohr-Sommerfeld point")
    w = DominantWeight(p.weight())
    return (
        w,
        GCPattern.from_flat(w, p.pattern()),
        GCPattern.from_flat(dual_weight(w), p.dual_pattern()),
    )


def _check_box(n, bound):
    if n < 1 or bound < 0:
        raise DomainError("need n >= 1 and N >= 0")


def count_bs_points(n: int, bound: int, variant: BSVariant = BSVariant.CLOSURE) -> int:
    """Number of BS points whose weight entries satisfy |alpha_i| <= bound."""
    _check_box(n, bound)
    strict = variant.strict
    total = 0
    for w in dominant_weights(n, bound, strict=strict):
        c = count_integral_points(w, strict=strict)
        if c:
            total += c * count_integral_points(dual_weight(w), strict=strict)
    return total


def enumerate_bs_points(
    n: int, bound: int, variant: BSVariant = BSVariant.CLOSURE, cap: int = DEFAULT_CAP
) -> list[BSPoint]:
    """All BS points with |alpha_i| <= bound.

    Ordered by weight (lexicographically descending), then pattern, then dual
    pattern (both lexicographically ascending). Raises ``CapacityError`` if
    the total exceeds ``cap``.
    """
    total = count_bs_points(n, bound, variant)
    if total > cap:
        raise CapacityError(total, cap)
    strict = variant.strict
    out = []
    for w in dominant_weights(n, bound, strict=strict):
        pats = enumerate_integral_points(w, cap=cap, strict=strict)
        if not pats:
            continue
        duals = enumerate_integral_points(dual_weight(w), cap=cap, strict=strict)
        for p in pats:
            for q in duals:
                out.append(from_triple(w, p, q))
    return out


def round_to_lattice(v: DoubleGCVector, tol: float = 1e-6) -> BSPoint | None:
    """Round every entry to the nearest integer, or return None if any is off by more than ``tol``."""
    vals = np.asarray(v.values, dtype=float)
    nearest = np.rint(vals)
    if np.max(np.abs(vals - nearest)) > tol:
        return None
    return BSPoint(v.n, tuple(int(x) for x in nearest))


def realize(p: BSPoint) -> CotangentPoint:
    """A cotangent point whose double GC vector is ``p``.

    Needs a strictly dominant weight and interior patterns. Builds eta with
    GC vector the first half and xi with GC vector the second half, then
    returns (g, -xi) with g (-xi) g^H = eta.
    """
    b = p.b
    first = GCVector(p.n, tuple(float(x) for x in p.values[:b]))
    second = GCVector(p.n, tuple(float(x) for x in p.values[b:]))
    eta, u_eta = gc_preimage(first)
    xi, u_xi = gc_preimage(second)
    # -xi has spectrum alpha on the reversed eigenbasis of xi
    u_neg = u_xi.entries[:, ::-1]
    g = UnitaryMatrix(u_eta.entries @ u_neg.conj().T, tol=1e-8)
    return CotangentPoint(g, -xi)


def to_jsonl(points) -> str:
    return "".join(json.dumps(list(p.values)) + "\n" for p in points)


def _join(xs):
    return " ".join(str(x) for x in xs)


def to_csv(points) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "pattern", "dual_pattern"])
    for p in points:
        writer.writerow([_join(p.weight()), _join(p.pattern()), _join(p.dual_pattern())])
    return buf.getvalue()
