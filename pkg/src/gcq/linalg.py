"""Small dense complex linear algebra on Hermitian and unitary matrices.

Hermitian matrices stand in for points of the dual of the Lie algebra of
U(n), so everything here is sized for n <= 64. The eigensolver is a cyclic
complex Jacobi iteration with closed forms for 1x1 and 2x2 inputs.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError

__all__ = [
    "HermitianMatrix",
    "UnitaryMatrix",
    "corner",
    "eigenvalues_desc",
    "sweep",
    "coadjoint",
    "haar_unitary",
    "random_hermitian",
    "make_rng",
    "matrix_to_json",
    "matrix_from_json",
]

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

# Haar sampling draws from numpy's PCG64 bit generator via default_rng(seed).
RNG_ALGORITHM = "numpy.random.PCG64"


def _frozen(a):
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


def _square(entries):
    a = np.asarray(entries, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DomainError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix entries must be finite")
    return a


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """A Hermitian n x n matrix, stored symmetrized and read-only.

    Construction rejects inputs whose deviation from Hermitian exceeds
    ``HERMITIAN_TOL`` and then replaces the entries by ``(X + X^H) / 2``.
    """

    entries: np.ndarray

    def __init__(self, entries, tol=HERMITIAN_TOL):
        a = _square(entries)
        dev = float(np.max(np.abs(a - a.conj().T)))
        if dev > tol:
            raise DomainError(f"matrix is not Hermitian (max deviation {dev:.3e})")
        object.__setattr__(self, "entries", _frozen((a + a.conj().T) / 2))

    @classmethod
    def diag(cls, values):
        return cls(np.diag(np.asarray(values, dtype=float)))

    @property
    def n(self):
        return self.entries.shape[0]

    def norm(self):
        """Frobenius norm."""
        return float(np.linalg.norm(self.entries))

    def trace(self):
        return float(np.trace(self.entries).real)

    def __neg__(self):
        return HermitianMatrix(-self.entries)

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"HermitianMatrix(n={self.n})"


@dataclass(frozen=True, eq=False)
class UnitaryMatrix:
    entries: np.ndarray

    def __init__(self, entries, tol=UNITARY_TOL):
        a = _square(entries)
        dev = float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))
        if dev > tol:
            raise DomainError(f"matrix is not unitary (max deviation {dev:.3e})")
        object.__setattr__(self, "entries", _frozen(a))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n))

    @property
    def n(self):
        return self.entries.shape[0]

    def __repr__(self):
        return f"UnitaryMatrix(n={self.n})"


def corner(xi: HermitianMatrix, j: int) -> HermitianMatrix:
    """Bottom-right (n - j) x (n - j) principal submatrix of ``xi``."""
    if not 0 <= j < xi.n:
        raise DomainError(f"corner index {j} outside 0..{xi.n - 1}")
    return HermitianMatrix(xi.entries[j:, j:])


def _eig_2x2(a):
    p, q = a[0, 0].real, a[1, 1].real
    mean = 0.5 * (p + q)
    rad = math.hypot(0.5 * (p - q), abs(a[0, 1]))
    return [mean + rad, mean - rad]


def _jacobi(a):
    """Cyclic complex Jacobi; returns the diagonal after convergence."""
    n = a.shape[0]
    scale = np.linalg.norm(a)
    threshold = JACOBI_REL_TOL * scale
    off = np.linalg.norm(a - np.diag(np.diag(a)))
    for _ in range(JACOBI_MAX_SWEEPS):
        if off <= threshold:
            return a.diagonal().real.copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # Phase-strip the pivot to a real 2x2 block, then rotate it away.
                ph = apq / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                u10 = -s * ph.conjugate()
                u11 = c * ph.conjugate()
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp + u10 * colq
                a[:, q] = s * colp + u11 * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp + np.conj(u10) * rowq
                a[q, :] = s * rowp + np.conj(u11) * rowq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        off = np.linalg.norm(a - np.diag(np.diag(a)))
    if off <= threshold:
        return a.diagonal().real.copy()
    raise NumericalError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps", off)


def eigenvalues_desc(xi: HermitianMatrix) -> tuple[float, ...]:
    """All eigenvalues of ``xi`` sorted non-increasing."""
    a = xi.entries
    if xi.n == 1:
        vals = [a[0, 0].real]
    elif xi.n == 2:
        vals = _eig_2x2(a)
    else:
        vals = _jacobi(np.array(a, dtype=complex))
    return tuple(sorted((float(v) for v in vals), reverse=True))


def sweep(xi: HermitianMatrix) -> HermitianMatrix:
    """The diagonal representative of the orbit of ``xi`` in the positive chamber."""
    return HermitianMatrix.diag(eigenvalues_desc(xi))


def coadjoint(g: UnitaryMatrix, xi: HermitianMatrix) -> HermitianMatrix:
    """g xi g^H, re-symmetrized."""
    if g.n != xi.n:
        raise DomainError(f"dimension mismatch: g is {g.n}x{g.n}, xi is {xi.n}x{xi.n}")
    u = g.entries
    return HermitianMatrix(u @ xi.entries @ u.conj().T, tol=1e-10 * max(1.0, xi.norm()))


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def haar_unitary(n: int, seed=0) -> UnitaryMatrix:
    """Haar-distributed element of U(n).

    QR of a complex Ginibre matrix, with the phases of diag(R) pushed back
    into Q so the result is Haar rather than QR-convention biased.
    ``seed`` may be an int or a ``numpy.random.Generator``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    rng = make_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return UnitaryMatrix(q)


def random_hermitian(n: int, seed=0, scale=1.0) -> HermitianMatrix:
    """A GUE-style random Hermitian matrix."""
    rng = make_rng(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return HermitianMatrix(scale * (z + z.conj().T) / 2)


def matrix_to_json(m) -> str:
    a = m.entries if hasattr(m, "entries") else np.asarray(m, dtype=complex)
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in a]
    return json.dumps({"n": int(a.shape[0]), "entries": rows})


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} in matrix JSON")


def matrix_from_json(text: str) -> HermitianMatrix:
    """Parse ``{"n": int, "entries": [[[re, im], ...], ...]}`` into a Hermitian matrix.

    Raises ``ValueError`` (or ``DomainError``) on malformed input.
    """
    doc = json.loads(text, parse_constant=_reject_constant)
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise ValueError("matrix JSON needs keys 'n' and 'entries'")
    n = doc["n"]
    rows = doc["entries"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("'n' must be a positive integer")
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"'entries' must be {n}x{n}")
    a = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        for j, z in enumerate(row):
            if len(z) != 2 or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in z):
                raise ValueError(f"entry ({i}, {j}) must be a [re, im] pair of numbers")
            a[i, j] = complex(z[0], z[1])
    return HermitianMatrix(a)
