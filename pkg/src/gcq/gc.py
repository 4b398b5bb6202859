"""Gelfand-Cetlin map, strong regularity, and the double GC system on T*U(n).

A GC vector lists the sorted spectra of the bottom-right corners of a
Hermitian matrix, largest corner first:

    (l_{01}, ..., l_{0n}, l_{11}, ..., l_{1(n-1)}, ..., l_{(n-1)1})

Row j holds the n - j eigenvalues of the (n - j) x (n - j) corner. This
flattening order is also the JSON wire order.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import (
    HermitianMatrix,
    UnitaryMatrix,
    coadjoint,
    corner,
    eigenvalues_desc,
)

__all__ = [
    "GCVector",
    "CotangentPoint",
    "DoubleGCVector",
    "triangular_size",
    "gc_map",
    "is_strongly_regular",
    "moment_map",
    "double_gc",
    "in_B",
    "subtorus_generators",
    "is_sreg_point",
    "perp_defect",
    "interlacing_defect",
    "gc_preimage",
]


def triangular_size(n: int) -> int:
    return n * (n + 1) // 2


def row_offsets(n: int) -> list[int]:
    """Start index of each row in the flattened order, plus the end."""
    offs = [0]
    for j in range(n):
        offs.append(offs[-1] + n - j)
    return offs


def default_tol(xi: HermitianMatrix) -> float:
    return 1e-9 * max(1.0, xi.norm())


@dataclass(frozen=True)
class GCVector:
    n: int
    values: tuple[float, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be positive")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) != triangular_size(self.n):
            raise DomainError(
                f"GC vector for n={self.n} needs {triangular_size(self.n)} values, got {len(self.values)}"
            )

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(r) for r in rows]
        return cls(len(rows), tuple(v for r in rows for v in r))

    def row(self, j: int) -> tuple[float, ...]:
        if not 0 <= j < self.n:
            raise DomainError(f"row index {j} outside 0..{self.n - 1}")
        offs = row_offsets(self.n)
        return self.values[offs[j]:offs[j + 1]]

    def rows(self) -> list[tuple[float, ...]]:
        return [self.row(j) for j in range(self.n)]

    def to_json(self) -> str:
        return json.dumps(list(self.values))


@dataclass(frozen=True)
class CotangentPoint:
    """A point (g, xi) of T*U(n) in the left trivialization U(n) x u(n)*."""

    g: UnitaryMatrix
    xi: HermitianMatrix

    def __post_init__(self):
        if self.g.n != self.xi.n:
            raise DomainError(f"dimension mismatch: g is {self.g.n}, xi is {self.xi.n}")

    @property
    def n(self):
        return self.xi.n


@dataclass(frozen=True)
class DoubleGCVector:
    first: GCVector
    second: GCVector

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise DomainError("both halves must have the same n")

    @property
    def n(self):
        return self.first.n

    @property
    def values(self) -> tuple[float, ...]:
        return self.first.values + self.second.values

    @classmethod
    def from_flat(cls, n: int, values):
        b = triangular_size(n)
        values = tuple(values)
        if len(values) != 2 * b:
            raise DomainError(f"double GC vector for n={n} needs {2 * b} values")
        return cls(GCVector(n, values[:b]), GCVector(n, values[b:]))

    def to_json(self) -> str:
        return json.dumps(list(self.values))


def gc_map(xi: HermitianMatrix) -> GCVector:
    """Sorted spectra of all bottom-right corners of ``xi``."""
    vals = []
    for j in range(xi.n):
        vals.extend(eigenvalues_desc(corner(xi, j)))
    return GCVector(xi.n, tuple(vals))


def _strictly_decreasing(chain, tol):
    return all(a - b > tol for a, b in zip(chain, chain[1:]))


def _gc_strongly_regular(v: GCVector, tol: float) -> bool:
    rows = v.rows()
    if not all(_strictly_decreasing(r, tol) for r in rows):
        return False
    # column k: l_{0k} > l_{1k} > ... > l_{(n-k)k}
    for k in range(v.n):
        if not _strictly_decreasing([rows[j][k] for j in range(v.n - k)], tol):
            return False
    return True


def is_strongly_regular(xi: HermitianMatrix, tol: float | None = None) -> bool:
    """Every row chain and every column chain of gc_map(xi) strictly decreases.

    Gaps must exceed ``tol`` (default ``1e-9 * max(1, ||xi||)``).
    """
    if tol is None:
        tol = default_tol(xi)
    if tol < 0:
        raise DomainError("tol must be non-negative")
    return _gc_strongly_regular(gc_map(xi), tol)


def moment_map(p: CotangentPoint) -> tuple[HermitianMatrix, HermitianMatrix]:
    """(g, xi) -> (g xi g^H, -xi)."""
    return coadjoint(p.g, p.xi), -p.xi


def double_gc(p: CotangentPoint) -> DoubleGCVector:
    phi1, phi2 = moment_map(p)
    return DoubleGCVector(gc_map(phi1), gc_map(phi2))


def perp_defect(v: DoubleGCVector) -> float:
    """max_k |second.row(0)[k] + first.row(0)[n-1-k]|; zero exactly on B."""
    top1, top2 = v.first.row(0), v.second.row(0)
    n = v.n
    return max(abs(top2[k] + top1[n - 1 - k]) for k in range(n))


def subtorus_generators(n: int) -> np.ndarray:
    """Basis of the Lie algebra of the diagonal subtorus, as rows in R^{2b}.

    Generator k has a 1 at position k of the first half and at position
    n-1-k of the second half.
    """
    b = triangular_size(n)
    gens = np.zeros((n, 2 * b))
    for k in range(n):
        gens[k, k] = 1.0
        gens[k, b + n - 1 - k] = 1.0
    return gens


def in_B(v: DoubleGCVector, tol: float = 1e-8) -> bool:
    """Whether ``v`` is orthogonal to every subtorus generator, within ``tol``."""
    if tol < 0:
        raise DomainError("tol must be non-negative")
    dots = subtorus_generators(v.n) @ np.asarray(v.values)
    return bool(np.all(np.abs(dots) <= tol))


def is_sreg_point(p: CotangentPoint, tol: float | None = None) -> bool:
    phi1, phi2 = moment_map(p)
    return is_strongly_regular(phi1, tol) and is_strongly_regular(phi2, tol)


def interlacing_defect(v: GCVector) -> float:
    """Largest violation of row monotonicity or of row(j)[k] >= row(j+1)[k] >= row(j)[k+1].

    Zero when all GC inequalities hold.
    """
    rows = v.rows()
    worst = -math.inf
    for r in rows:
        for a, b in zip(r, r[1:]):
            worst = max(worst, b - a)
    for j in range(v.n - 1):
        upper, lower = rows[j], rows[j + 1]
        for k, x in enumerate(lower):
            worst = max(worst, x - upper[k], upper[k + 1] - x)
    return max(worst, 0.0)


def gc_preimage(v: GCVector) -> tuple[HermitianMatrix, UnitaryMatrix]:
    """A Hermitian matrix X with gc_map(X) == v, and a unitary U with U^H X U diagonal.

    The diagonal of U^H X U is row(0) in order. Needs strict interlacing
    everywhere (an interior point of the GC polytope). The matrix is built
    from the smallest corner outward: each step borders the previous corner
    so that, in its eigenbasis, the new matrix is an arrowhead with the
    prescribed spectrum.
    """
    rows = [np.array(r, dtype=float) for r in v.rows()]
    n = v.n
    x = np.array([[rows[n - 1][0]]], dtype=complex)
    u = np.eye(1, dtype=complex)
    for j in range(n - 2, -1, -1):
        lam, mu = rows[j], rows[j + 1]
        m = lam.size
        b2 = np.empty(m - 1)
        for i in range(m - 1):
            num = -np.prod(mu[i] - lam)
            den = np.prod(np.delete(mu[i] - mu, i))
            b2[i] = num / den
        if not np.all(b2 > 0):
            raise DomainError("gc_preimage needs strictly interlacing rows")
        b = np.sqrt(b2)
        a = lam.sum() - mu.sum()
        c = u @ b
        nx = np.empty((m, m), dtype=complex)
        nx[0, 0] = a
        nx[0, 1:] = c.conj()
        nx[1:, 0] = c
        nx[1:, 1:] = x
        # eigenvector of the arrowhead for eigenvalue l: (1, b_i / (l - mu_i))
        vecs = np.empty((m, m), dtype=complex)
        for k, l in enumerate(lam):
            w = np.concatenate(([1.0], b / (l - mu)))
            vecs[:, k] = w / np.linalg.norm(w)
        block = np.eye(m, dtype=complex)
        block[1:, 1:] = u
        x, u = nx, block @ vecs
    return HermitianMatrix(x, tol=1e-9 * max(1.0, float(np.abs(x).max()))), UnitaryMatrix(u, tol=1e-8)
