"""Brute-force maximum facet count over all color-shifted complexes with given budgets.

Any 3-colored complex can be color-shifted without changing its flag numbers, so it
is enough to search triples of staircases (boxed partitions).  Exponential; meant
only as ground truth on tiny instances.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .complexes import TriComplex
from .flagvec import FlagVector, validate

DEFAULT_CAP = 10**8
# Above this much counting work, the instance is declared too large without counting.
_COUNT_WORK_LIMIT = 5 * 10**6


class CapExceeded(RuntimeError):
    pass


class InfeasibleEdges(ValueError):
    pass


@dataclass(frozen=True)
class BoxedPartition:
    weight: int
    max_rows: int
    max_cols: int
    rows: tuple


def _partitions(weight: int, max_rows: int, max_cols: int) -> Iterator[tuple]:
    """Weakly decreasing tuples of positive parts, decreasing lexicographic order."""
    if weight == 0:
        yield ()
        return
    if max_rows <= 0 or max_cols <= 0 or weight > max_rows * max_cols:
        return
    lo = -(-weight // max_rows)
    for first in range(min(max_cols, weight), lo - 1, -1):
        for rest in _partitions(weight - first, max_rows - 1, first):
            yield (first,) + rest


def enumerate_partitions(weight: int, max_rows: int, max_cols: int) -> Iterator[BoxedPartition]:
    if weight < 0:
        return
    for rows in _partitions(weight, max_rows, max_cols):
        yield BoxedPartition(weight, max_rows, max_cols, rows)


def count_partitions(weight: int, max_rows: int, max_cols: int) -> int:
    """Partitions of weight inside a max_rows x max_cols box (Gaussian binomial coefficient)."""
    if weight < 0 or weight > max_rows * max_cols:
        return 0
    n = min(weight, max_rows * max_cols - weight)
    k, m = sorted((min(max_rows, n), min(max_cols, n)))
    if n == 0 or k <= 1:
        return 1
    if k * n > _COUNT_WORK_LIMIT:
        raise CapExceeded(f"box {max_rows}x{max_cols} with weight {weight} is too large to enumerate")
    # coefficients of prod_{i=1..k} (1 - q^(m+i)) / (1 - q^i), truncated at degree n
    poly = [1] + [0] * n
    for i in range(1, k + 1):
        a = m + i
        for d in range(n, a - 1, -1):
            poly[d] -= poly[d - a]
        for d in range(i, n + 1):
            poly[d] += poly[d - i]
    return poly[n]


def _facet_table(r12: tuple, r23: tuple, n3: int) -> list[list[int]]:
    """table[i][a] = facets through row i of color 1 if that row has a 13-edges."""
    table = []
    for k in r12:
        cols = r23[:k]
        table.append([sum(min(a, c) for c in cols) for a in range(n3 + 1)])
    return table


def _best_for_block(args) -> Optional[tuple]:
    block12, parts13, parts23, n3 = args
    best = None
    for r12 in block12:
        for r23 in parts23:
            table = _facet_table(r12, r23, n3)
            rows = len(table)
            for r13 in parts13:
                total = 0
                for i in range(min(rows, len(r13))):
                    total += table[i][r13[i]]
                key = (total, r12, r13, r23)
                if best is None or key > best:
                    best = key
    return best


def facet_count_rows(r12, r13, r23) -> int:
    """List-based facet count, kept separate from the run-length production counter."""
    total = 0
    for i, k in enumerate(r12):
        a = r13[i] if i < len(r13) else 0
        for j in range(k):
            total += min(a, r23[j] if j < len(r23) else 0)
    return total


@dataclass(frozen=True)
class OracleResult:
    m: int
    witness: TriComplex
    rows: tuple  # (rows12, rows13, rows23)
    triples: int

    def to_json(self, explicit_edges=False) -> dict:
        return {"m": str(self.m), "triples": self.triples, "witness": self.witness.to_json(explicit_edges=explicit_edges)}


def _search_space(fv: FlagVector, weights) -> tuple[list, list, list]:
    f1, f2, f3 = fv.vertices
    w12, w13, w23 = weights
    return (
        list(_partitions(w12, f1, f2)),
        list(_partitions(w13, f1, f3)),
        list(_partitions(w23, f2, f3)),
    )


def brute_max(
    fv: FlagVector, cap: int = DEFAULT_CAP, workers: int = 1, below_weight: bool = False
) -> OracleResult:
    """Maximum facet count by exhaustive search.

    With ``below_weight`` every edge count up to the budget is tried instead of
    exactly the budget; the answer must not change since facets are monotone in edges.
    Ties go to the lexicographically greatest (rows12, rows13, rows23).
    """
    report = validate(fv)
    if not report.ok:
        raise InfeasibleEdges("; ".join(report.reasons()))
    f1, f2, f3 = fv.vertices
    if below_weight:
        weight_sets = [
            (a, b, c) for a in range(fv.f12 + 1) for b in range(fv.f13 + 1) for c in range(fv.f23 + 1)
        ]
    else:
        weight_sets = [fv.edges]

    size = 0
    for w in weight_sets:
        size += (
            count_partitions(w[0], f1, f2) * count_partitions(w[1], f1, f3) * count_partitions(w[2], f2, f3)
        )
        if size > cap:
            raise CapExceeded(f"{size} staircase triples exceed cap {cap}")

    best = None
    for w in weight_sets:
        p12, p13, p23 = _search_space(fv, w)
        if not (p12 and p13 and p23):
            continue
        if workers > 1 and len(p12) > 1:
            chunks = [p12[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                found = list(pool.map(_best_for_block, [(c, p13, p23, f3) for c in chunks if c]))
        else:
            found = [_best_for_block((p12, p13, p23, f3))]
        for key in found:
            if key is not None and (best is None or key > best):
                best = key

    m, r12, r13, r23 = best
    witness = TriComplex.from_rows(r12, r13, r23, fv.vertices)
    return OracleResult(m, witness, (r12, r13, r23), size)
