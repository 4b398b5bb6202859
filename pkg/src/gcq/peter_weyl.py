"""Truncated Peter-Weyl check.

Over all dominant weights with |alpha_i| <= N, the closure Bohr-Sommerfeld
count must equal sum_alpha #GC_alpha * #GC_alpha*, and that in turn must
equal sum_alpha dim(V_alpha) * dim(V_alpha*) with dimensions from the Weyl
formula. Everything is an exact integer.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .bohr_sommerfeld import BSVariant, count_bs_points
from .errors import CapacityError, DomainError
from .polytope import (
    count_dominant_weights,
    count_integral_points,
    dominant_weights,
    dual_weight,
    weyl_dim,
)

__all__ = ["PWRow", "PWReport", "pw_check", "pw_table", "DEFAULT_WEIGHT_LIMIT"]

DEFAULT_WEIGHT_LIMIT = 10**6
CSV_COLUMNS = ("alpha", "dim", "dim_dual", "gc", "gc_dual", "contribution")


@dataclass(frozen=True)
class PWRow:
    alpha: tuple[int, ...]
    dim_Valpha: int
    dim_Valpha_dual: int
    gc_count: int
    gc_dual_count: int

    @property
    def contribution(self) -> int:
        return self.gc_count * self.gc_dual_count


@dataclass(frozen=True)
class PWReport:
    n: int
    N: int
    rows: tuple[PWRow, ...]
    total_bs: int
    total_sum: int
    total_weyl: int

    @property
    def agree(self) -> bool:
        rows_ok = all(r.gc_count == r.dim_Valpha and r.gc_dual_count == r.dim_Valpha_dual for r in self.rows)
        return rows_ok and self.total_bs == self.total_sum == self.total_weyl


def _row(alpha) -> PWRow:
    dual = dual_weight(alpha)
    return PWRow(
        alpha=tuple(alpha),
        dim_Valpha=weyl_dim(alpha),
        dim_Valpha_dual=weyl_dim(dual),
        gc_count=count_integral_points(alpha),
        gc_dual_count=count_integral_points(dual),
    )


def pw_check(n: int, N: int, weight_limit: int = DEFAULT_WEIGHT_LIMIT, workers: int = 1) -> PWReport:
    """Compare the closure BS count with the Weyl-dimension sum of squares.

    ``workers > 1`` computes per-weight rows in a process pool; row order is
    the same either way.
    """
    if n < 1 or N < 0:
        raise DomainError("need n >= 1 and N >= 0")
    n_weights = count_dominant_weights(n, N)
    if n_weights > weight_limit:
        raise CapacityError(n_weights, weight_limit)
    weights = list(dominant_weights(n, N))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(_row, weights, chunksize=max(1, len(weights) // (4 * workers))))
    else:
        rows = tuple(_row(w) for w in weights)
    return PWReport(
        n=n,
        N=N,
        rows=rows,
        total_bs=count_bs_points(n, N, BSVariant.CLOSURE),
        total_sum=sum(r.contribution for r in rows),
        total_weyl=sum(r.dim_Valpha * r.dim_Valpha_dual for r in rows),
    )


def _alpha_str(alpha):
    return "(" + ",".join(str(a) for a in alpha) + ")"


def pw_table(report: PWReport, fmt: str = "pretty") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in report.rows:
            w.writerow([_alpha_str(r.alpha), r.dim_Valpha, r.dim_Valpha_dual,
                        r.gc_count, r.gc_dual_count, r.contribution])
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "n": report.n,
            "N": report.N,
            "rows": [dict(asdict(r), alpha=list(r.alpha), contribution=r.contribution) for r in report.rows],
            "total_bs": report.total_bs,
            "total_sum": report.total_sum,
            "total_weyl": report.total_weyl,
            "agree": report.agree,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "pretty":
        raise DomainError(f"unknown format {fmt!r}")
    header = ("alpha", "dim", "dim*", "#GC", "#GC*", "contrib")
    body = [(_alpha_str(r.alpha), str(r.dim_Valpha), str(r.dim_Valpha_dual), str(r.gc_count),
             str(r.gc_dual_count), str(r.contribution)) for r in report.rows]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = [f"U({report.n}) weights with |alpha_i| <= {report.N}"]
    for line in [header, *body]:
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(line, widths)))
    lines.append(f"BS points (closure): {report.total_bs}")
    lines.append(f"sum #GC * #GC*: {report.total_sum}")
    lines.append(f"sum dim V * dim V*: {report.total_weyl}")
    lines.append("AGREE" if report.agree else "MISMATCH")
    return "\n".join(lines) + "\n"
