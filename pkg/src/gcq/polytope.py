"""Gelfand-Cetlin polytopes GC_alpha and their integral points.

GC_alpha is cut out by the interlacing inequalities

    rows[j][k] >= rows[j+1][k] >= rows[j][k+1]

on a triangular array whose top row is alpha. A point of GC_alpha is the
flattened list of rows 1..n-1. All comparisons here are exact: integers
and ``fractions.Fraction`` only.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

from .errors import CapacityError, DomainError

__all__ = [
    "DominantWeight",
    "GCPattern",
    "DEFAULT_CAP",
    "exact_point",
    "contains",
    "contains_interior",
    "enumerate_integral_points",
    "count_integral_points",
    "weyl_dim",
    "dual_weight",
    "dominant_weights",
    "count_dominant_weights",
]

DEFAULT_CAP = 10**7


def _as_int(x):
    if isinstance(x, bool) or not isinstance(x, Integral):
        if isinstance(x, Rational) and x.denominator == 1:
            return int(x.numerator)
        raise DomainError(f"expected an integer, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class DominantWeight:
    """A non-increasing integer vector, the highest weight of a U(n) irrep."""

    alpha: tuple[int, ...]

    def __post_init__(self):
        alpha = tuple(_as_int(a) for a in self.alpha)
        if not alpha:
            raise DomainError("a weight needs at least one entry")
        if any(a < b for a, b in zip(alpha, alpha[1:])):
            raise DomainError(f"weight {alpha} is not non-increasing")
        object.__setattr__(self, "alpha", alpha)

    @property
    def n(self):
        return len(self.alpha)

    def is_strict(self):
        return all(a > b for a, b in zip(self.alpha, self.alpha[1:]))

    def dual(self):
        return dual_weight(self)

    def __iter__(self):
        return iter(self.alpha)

    def __len__(self):
        return len(self.alpha)


def _weight(alpha) -> DominantWeight:
    return alpha if isinstance(alpha, DominantWeight) else DominantWeight(tuple(alpha))


@dataclass(frozen=True)
class GCPattern:
    """Integer triangular array; row j has n - j entries and row 0 is the weight."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n - j for j, r in enumerate(rows)):
            raise DomainError("pattern rows must have lengths n, n-1, ..., 1")
        object.__setattr__(self, "rows", rows)
        DominantWeight(rows[0])
        if not _interlaces(rows, strict=False):
            raise DomainError(f"pattern {rows} does not interlace")

    @classmethod
    def from_flat(cls, alpha, lower):
        return cls(_assemble(_weight(alpha).alpha, tuple(lower)))

    @property
    def n(self):
        return len(self.rows)

    @property
    def alpha(self) -> DominantWeight:
        return DominantWeight(self.rows[0])

    @property
    def lower(self) -> tuple[int, ...]:
        """Rows 1..n-1 flattened: the point of GC_alpha."""
        return tuple(x for r in self.rows[1:] for x in r)

    def to_dict(self):
        return {"alpha": list(self.rows[0]), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        pattern = cls(tuple(tuple(r) for r in doc["rows"]))
        if list(pattern.rows[0]) != list(doc["alpha"]):
            raise DomainError("'alpha' must equal the first row")
        return pattern


def _assemble(alpha, lower):
    n = len(alpha)
    if len(lower) != n * (n - 1) // 2:
        raise DomainError(f"point for n={n} needs {n * (n - 1) // 2} entries, got {len(lower)}")
    rows = [tuple(alpha)]
    i = 0
    for j in range(1, n):
        rows.append(tuple(lower[i:i + n - j]))
        i += n - j
    return tuple(rows)


def _interlaces(rows, strict, slack=0):
    for upper, lower in zip(rows, rows[1:]):
        for k, x in enumerate(lower):
            if strict:
                if not (upper[k] > x > upper[k + 1]):
                    return False
            elif not (upper[k] + slack >= x >= upper[k + 1] - slack):
                return False
    return True


def exact_point(values) -> tuple[Fraction, ...]:
    """Convert numbers to exact rationals without rounding (floats convert exactly)."""
    return tuple(Fraction(v) for v in values)


def _rational(x):
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise DomainError(
            f"membership needs exact rationals, got {type(x).__name__}; convert with exact_point()"
        )
    return x


def contains(alpha, point, tol=0) -> bool:
    """Whether ``point`` lies in the closed polytope GC_alpha.

    ``tol`` (an exact rational, default 0) widens every inequality; use it to
    absorb eigensolver noise without rounding the point itself.
    """
    w = _weight(alpha)
    pt = tuple(_rational(x) for x in point)
    return _interlaces(_assemble(w.alpha, pt), strict=False, slack=_rational(tol))


def contains_interior(alpha, point) -> bool:
    """Whether ``point`` satisfies every interlacing inequality strictly."""
    w = _weight(alpha)
    pt = tuple(_rational(x) for x in point)
    return _interlaces(_assemble(w.alpha, pt), strict=True)


def _child_rows(row, strict):
    # row entries r_0 >= ... >= r_m; child x_k in [r_{k+1}, r_k] (open if strict)
    shrink = 1 if strict else 0
    ranges = [range(row[k + 1] + shrink, row[k] - shrink + 1) for k in range(len(row) - 1)]
    return itertools.product(*ranges)


def count_integral_points(alpha, strict=False) -> int:
    """Number of integral points of GC_alpha (of its interior if ``strict``).

    Row-by-row dynamic programming over the distinct rows that can occur.
    """
    w = _weight(alpha)
    layer = Counter({w.alpha: 1})
    for _ in range(w.n - 1):
        nxt = Counter()
        for row, mult in layer.items():
            for child in _child_rows(row, strict):
                nxt[child] += mult
        layer = nxt
    return sum(layer.values())


def enumerate_integral_points(alpha, cap=DEFAULT_CAP, strict=False) -> list[GCPattern]:
    """All GC patterns with top row alpha, lexicographic in the flattened rows.

    With ``strict`` only patterns in the interior are returned. Raises
    ``CapacityError`` before materializing anything if the count exceeds ``cap``.
    """
    w = _weight(alpha)
    total = count_integral_points(w, strict=strict)
    if total > cap:
        raise CapacityError(total, cap)
    out = []

    def extend(rows):
        if len(rows) == w.n:
            out.append(GCPattern(tuple(rows)))
            return
        for child in _child_rows(rows[-1], strict):
            rows.append(child)
            extend(rows)
            rows.pop()

    extend([w.alpha])
    return out


def weyl_dim(alpha) -> int:
    """dim V_alpha = prod_{i<j} (alpha_i - alpha_j + j - i) / (j - i)."""
    a = _weight(alpha).alpha
    num = 1
    den = 1
    for i, j in itertools.combinations(range(len(a)), 2):
        num *= a[i] - a[j] + j - i
        den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def dual_weight(alpha) -> DominantWeight:
    """(a_1, ..., a_n) -> (-a_n, ..., -a_1), the highest weight of the dual irrep."""
    return DominantWeight(tuple(-x for x in reversed(_weight(alpha).alpha)))


def dominant_weights(n: int, bound: int, strict=False):
    """Dominant weights with every |alpha_i| <= bound, lexicographically descending."""
    if n < 1 or bound < 0:
        raise DomainError("need n >= 1 and bound >= 0")
    gap = 1 if strict else 0

    def rec(prefix, hi):
        if len(prefix) == n:
            yield DominantWeight(tuple(prefix))
            return
        for a in range(hi, -bound - 1, -1):
            prefix.append(a)
            yield from rec(prefix, a - gap)
            prefix.pop()

    yield from rec([], bound)


def count_dominant_weights(n: int, bound: int, strict=False) -> int:
    m = 2 * bound + 1
    return math.comb(m, n) if strict else math.comb(m + n - 1, n)
