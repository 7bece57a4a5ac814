"""Worked reference instances and the candidate-count sampling study."""

from __future__ import annotations

import csv
import random
import statistics
import time
from math import isqrt
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .flagvec import FlagVector, canonical_relabel, validate
from .maximize import EdgeInfeasible, MaxResult, candidate_bound_ok, maximize


@dataclass(frozen=True)
class LedgerRow:
    """Expected ledger entry; ``facets`` is an int, "undefined", or "unsaturated"."""

    step: int
    g: tuple
    r: int
    facets: object


@dataclass(frozen=True)
class GoldenCase:
    name: str
    fv: FlagVector
    m: Optional[int] = None
    infeasible: bool = False
    shortcut: Optional[str] = None
    permutation: Optional[tuple] = None
    b: Optional[tuple] = None
    witness: tuple = ()  # acceptable (g, p, q) triples in original colors
    witness_g2: Optional[int] = None
    witness_r: Optional[int] = None
    rows: tuple = ()
    sweep_order: tuple = ()  # g2 values of the sweep rows, in order
    sweep_window: Optional[tuple] = None


def _fv(v, e) -> FlagVector:
    return FlagVector.of(v, e)


GOLDEN_CASES = (
    GoldenCase("edge-infeasible", _fv((3, 5, 7), (23, 14, 18)), infeasible=True),
    GoldenCase("vertex-edge shortcut", _fv((3, 5, 7), (13, 16, 18)), m=54, shortcut="vertedge:1"),
    GoldenCase(
        "b1 = 0 after relabel",
        _fv((17, 31, 25), (15, 12, 279)),
        m=180,
        shortcut="b1-zero",
        permutation=(1, 3, 2),
    ),
    GoldenCase(
        "small full run",
        _fv((533, 471, 818), (4972, 5311, 5630)),
        m=382896,
        b=(68, 72, 77),
        witness_g2=73,
        witness_r=2,
        rows=(
            LedgerRow(5, (68, 73, 78), 1, "undefined"),
            LedgerRow(5, (69, 72, 78), 2, "undefined"),
            LedgerRow(6, (68, 73, 77), 2, 382896),
            LedgerRow(8, (69, 72, 76), 1, 382736),
            LedgerRow(9, (6, 6, 818), 3, "unsaturated"),
        ),
    ),
    GoldenCase(
        "pruned sweep",
        _fv((13, 5471, 3818), (1843, 2157, 3150248)),
        m=3198156,
        b=(1, 1640, 1920),
        witness_g2=1640,
        witness_r=2,
        rows=(
            LedgerRow(5, (1, 1842, 2156), 1, "undefined"),
            LedgerRow(5, (1, 1640, 1920), 2, 3198156),
            LedgerRow(9, (0, 825, 3818), 3, "unsaturated"),
            LedgerRow(11, (1, 1640, 1920), 2, 3198156),
            LedgerRow(11, (1, 1641, 1919), 2, 3198122),
            LedgerRow(11, (1, 1642, 1918), 2, 3198086),
            LedgerRow(11, (1, 1643, 1917), 2, 3198048),
            LedgerRow(11, (1, 1644, 1916), 2, 3198008),
            LedgerRow(11, (1, 1639, 1922), 2, 3198098),
            LedgerRow(11, (1, 1638, 1923), 2, 3198013),
            LedgerRow(11, (1, 1637, 1924), 2, 3198040),
        ),
        sweep_order=(1640, 1641, 1642, 1643, 1644, 1639, 1638, 1637),
        sweep_window=(1637, 1644),
    ),
    GoldenCase(
        "perturbation, unique optimum",
        _fv((2, 6683, 7000), (10000, 10200, 45331745)),
        m=56664978,
        witness=(((1, 6683, 6783), 1, 3),),
    ),
    GoldenCase(
        "perturbation, f2 - 1",
        _fv((2, 6682, 7000), (10000, 10200, 45331745)),
        m=56664977,
        witness=(((1, 6643, 6823), 3, 1), ((1, 6642, 6824), 2, 1)),
    ),
    GoldenCase("perturbation, f13 + 1", _fv((2, 6683, 7000), (10000, 10201, 45331745)), m=56668334),
    GoldenCase(
        "far from b2, t = 2",
        _fv((2, 10000, 10000), (10000, 10200, 45331753)),
        b=(1, 6666, 6799),
        witness_g2=6643,
    ),
    GoldenCase(
        "far from b2, t = 4",
        _fv((2, 10**8, 10**8), (10**8, 100020000, 4445333316613330)),
        m=5556666649191260,
        b=(1, 66666666, 66679999),
        witness_g2=66664202,
        witness_r=2,
    ),
    GoldenCase(
        "far from b2, t = 3, w = 100",
        _fv((2, 10**6, 10**8), (10**6, 100020000, 44453289179999)),
        m=55566644505542,
        b=(1, 666666, 66679966),
        witness_g2=666643,
    ),
)


@dataclass
class CaseResult:
    name: str
    checks: list = field(default_factory=list)  # (label, ok, detail)
    seconds: float = 0.0
    result: Optional[MaxResult] = None

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list:
        return [(label, detail) for label, ok, detail in self.checks if not ok]


def _row_matches(res: MaxResult, row: LedgerRow) -> tuple[bool, str]:
    found = [rep for rep in res.ledger if rep.step == row.step and tuple(rep.g) == row.g and rep.r == row.r]
    if not found:
        return False, "no such ledger row"
    rep = found[0]
    got = rep.outcome if rep.facets is None else rep.facets
    if row.facets == "undefined":
        return rep.outcome == "undefined", f"got {got}"
    if row.facets == "unsaturated":
        return rep.facets is not None and rep.saturated is False, f"got {got}, saturated={rep.saturated}"
    return rep.facets == row.facets, f"got {got}"


def check_case(case: GoldenCase) -> CaseResult:
    out = CaseResult(case.name)
    start = time.perf_counter()
    if case.infeasible:
        try:
            maximize(case.fv)
        except EdgeInfeasible as exc:
            out.checks.append(("edge-infeasible", True, str(exc)))
        else:
            out.checks.append(("edge-infeasible", False, "maximize accepted the input"))
        out.seconds = time.perf_counter() - start
        return out

    res = maximize(case.fv)
    out.seconds = time.perf_counter() - start
    out.result = res
    add = out.checks.append
    if case.m is not None:
        add(("m", res.m == case.m, f"got {res.m}, expected {case.m}"))
    add(("witness facets", res.witness.facet_count() == res.m, ""))
    if case.shortcut is not None:
        add(("shortcut", res.shortcut == case.shortcut, f"got {res.shortcut}"))
    if case.permutation is not None:
        add(("permutation", res.permutation.image == case.permutation, f"got {res.permutation.image}"))
    if case.b is not None:
        got = (res.b.b1, res.b.b2, res.b.b3) if res.b else None
        add(("b", got == case.b, f"got {got}"))
    wp = res.witness_params
    if case.witness:
        got = (wp.g, wp.p, wp.q) if wp else None
        add(("witness params", got in case.witness, f"got {got}"))
    if case.witness_g2 is not None:
        add(("witness g2", wp is not None and wp.g2 == case.witness_g2, f"got {wp.g2 if wp else None}"))
    if case.witness_r is not None:
        add(("witness r", wp is not None and wp.r == case.witness_r, f"got {wp.r if wp else None}"))
    for row in case.rows:
        ok, detail = _row_matches(res, row)
        add((f"row step {row.step} g={row.g} r={row.r} -> {row.facets}", ok, detail))
    if case.sweep_order:
        got = tuple(rep.g[1] for rep in res.ledger if rep.step in (11, 12, 13))
        add(("sweep order", got == case.sweep_order, f"got {got}"))
    if case.sweep_window is not None:
        add(("sweep window", res.sweep_window == case.sweep_window, f"got {res.sweep_window}"))
    return out


def reproduce_examples(cases=GOLDEN_CASES) -> list[CaseResult]:
    return [check_case(case) for case in cases]


def format_table(results: list[CaseResult]) -> str:
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        m = res.result.m if res.result else "-"
        lines.append(f"{status}  {res.name:<30} m={m}  ({res.seconds * 1000:.1f} ms)")
        for label, detail in res.failures():
            lines.append(f"        mismatch: {label}: {detail}")
    return "\n".join(lines)


@dataclass
class StatsReport:
    n: int
    edge_max: int
    vertex_mode: str
    seed: int
    mean: float
    max: int
    violations: int
    shortcuts: dict
    rows: list = field(repr=False, default_factory=list)

    def summary(self) -> str:
        return (
            f"n={self.n} edge_max={self.edge_max} vertices={self.vertex_mode} seed={self.seed}: "
            f"mean candidates {self.mean:.3f}, max {self.max}, bound violations {self.violations}, "
            f"shortcuts {dict(self.shortcuts)}"
        )

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["seed", "index", "f1", "f2", "f3", "f12", "f13", "f23", "m", "candidates", "shortcut"])
            writer.writerows(self.rows)


def sample_budgets(rng: random.Random, edge_max: int, vertex_mode: str) -> FlagVector:
    """Edges i.i.d. uniform on [1, edge_max].

    "ample": every f_i = edge_max.  "random": f_i uniform on [isqrt(edge_max - 1) + 1, edge_max],
    which keeps every vertex product >= edge_max so the draw is always edge-feasible.
    """
    edges = tuple(rng.randint(1, edge_max) for _ in range(3))
    if vertex_mode == "ample":
        verts = (edge_max,) * 3
    elif vertex_mode == "random":
        lo = isqrt(edge_max - 1) + 1 if edge_max > 1 else 1
        verts = tuple(rng.randint(lo, edge_max) for _ in range(3))
    else:
        raise ValueError(f"unknown vertex mode {vertex_mode!r}")
    fv = FlagVector.of(verts, edges)
    assert validate(fv).ok
    return fv


def sample_candidate_stats(n: int, edge_max: int, vertex_mode: str = "ample", seed: int = 0) -> StatsReport:
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    counts, rows, shortcuts, violations = [], [], Counter(), 0
    for idx in range(n):
        fv = sample_budgets(rng, edge_max, vertex_mode)
        res = maximize(fv)
        counts.append(res.candidates_constructed)
        shortcuts[res.shortcut or "none"] += 1
        if not candidate_bound_ok(res.candidates_constructed, canonical_relabel(fv)[0]):
            violations += 1
        rows.append([seed, idx, *fv.budgets, res.m, res.candidates_constructed, res.shortcut or ""])
    return StatsReport(
        n, edge_max, vertex_mode, seed, statistics.fmean(counts), max(counts), violations, dict(shortcuts), rows
    )
