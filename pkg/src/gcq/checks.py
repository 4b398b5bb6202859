"""Batch invariant checks over seeded random cotangent points."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gc import (
    CotangentPoint,
    DoubleGCVector,
    GCVector,
    double_gc,
    gc_map,
    in_B,
    interlacing_defect,
    perp_defect,
    subtorus_generators,
)
from .linalg import haar_unitary, random_hermitian

INVARIANTS = ("perp", "in_B", "interlacing", "top_row_invariance")


@dataclass
class SampleReport:
    n: int
    count: int
    seed: int
    tol: float
    violations: dict = field(default_factory=lambda: {k: 0 for k in INVARIANTS})
    worst: dict = field(default_factory=lambda: {k: 0.0 for k in INVARIANTS})

    @property
    def ok(self):
        return not any(self.violations.values())

    def lines(self):
        out = [f"n={self.n} samples={self.count} seed={self.seed} tol={self.tol:g}"]
        for k in INVARIANTS:
            status = "PASS" if self.violations[k] == 0 else "FAIL"
            out.append(f"{k}: {status} violations={self.violations[k]} worst={self.worst[k]:.3e}")
        return out


def _perturb(v: DoubleGCVector, eps: float) -> DoubleGCVector:
    # shifts the second top row off the pairing with the first
    second = list(v.second.values)
    second[0] += eps
    return DoubleGCVector(v.first, GCVector(v.n, tuple(second)))


def sample_points(n: int, count: int, seed: int):
    """Deterministic stream of (g, xi) with g Haar and xi GUE-like."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        g = haar_unitary(n, rng)
        xi = random_hermitian(n, rng, scale=float(rng.uniform(0.5, 5.0)))
        yield CotangentPoint(g, xi)


def run_sample_checks(n: int, count: int, seed: int, tol: float = 1e-8, inject: float = 0.0) -> SampleReport:
    """Check the pairing, B-membership, interlacing and top-row invariance on random points.

    ``inject`` perturbs each double GC vector before checking (a negative
    control: any nonzero value above ``tol`` must be reported).
    """
    rep = SampleReport(n, count, seed, tol)

    def record(key, defect):
        rep.worst[key] = max(rep.worst[key], defect)
        if defect > tol:
            rep.violations[key] += 1

    for p in sample_points(n, count, seed):
        v = double_gc(p)
        if inject:
            v = _perturb(v, inject)
        record("perp", perp_defect(v))
        dots = subtorus_generators(n) @ np.asarray(v.values)
        record("in_B", 0.0 if in_B(v, tol) else float(np.max(np.abs(dots))))
        record("interlacing", max(interlacing_defect(v.first), interlacing_defect(v.second)))
        top = np.array(gc_map(p.xi).row(0))
        record("top_row_invariance", float(np.max(np.abs(np.array(v.first.row(0)) - top))))
    return rep
