"""Exact maximum facet count m for given vertex and edge budgets.

The driver tries a handful of shortcuts, then evaluates a short, deterministic list
of candidate constructions plus a pruned sweep over the middle core size.  Every
attempt is recorded in a ledger so a run can be audited step by step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complexes import TriComplex, relabel
from .construct import (
    BConstants,
    BuildResult,
    CandidateParams,
    G2Range,
    Undefined,
    b1g2_range,
    bibr_candidates,
    build,
    compute_b,
    determinize,
    v_bound,
)
from .flagvec import (
    COLORS,
    ColorPermutation,
    FlagVector,
    _json_int,
    canonical_relabel,
    validate,
)


class EdgeInfeasible(ValueError):
    """Some edge budget exceeds the product of its two vertex budgets."""

    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


@dataclass(frozen=True)
class CandidateReport:
    step: int
    r: Optional[int]
    g: tuple
    params: Optional[CandidateParams] = None
    outcome: str = "defined"  # "defined" | "undefined" | "previous"
    facets: Optional[int] = None
    saturated: Optional[bool] = None
    reason: str = ""
    previous_step: Optional[int] = None

    def to_json(self) -> dict:
        doc = {
            "step": self.step,
            "g": [_json_int(x) for x in self.g],
            "r": self.r,
            "p": self.params.p if self.params else None,
            "q": self.params.q if self.params else None,
            "outcome": self.outcome,
            "facets": None if self.facets is None else str(self.facets),
        }
        if self.saturated is not None:
            doc["saturated"] = self.saturated
        if self.reason:
            doc["reason"] = self.reason
        if self.previous_step is not None:
            doc["previous_step"] = self.previous_step
        return doc


@dataclass
class MaxResult:
    fv: FlagVector
    m: int
    witness: TriComplex
    shortcut: Optional[str] = None  # "zero-budget" | "vertedge:<c>" | "b1-zero" | None
    ledger: list = field(default_factory=list)
    candidates_constructed: int = 0
    permutation: ColorPermutation = ColorPermutation()
    witness_params: Optional[CandidateParams] = None  # original colors
    b: Optional[BConstants] = None
    g2_range: Optional[G2Range] = None
    sweep_window: Optional[tuple] = None  # (min, max) g2 actually evaluated by the sweep
    vertedge_colors: tuple = ()

    def within_candidate_bound(self) -> bool:
        return candidate_bound_ok(self.candidates_constructed, canonical_relabel(self.fv)[0])

    def to_json(self, trace=False, explicit_edges=False) -> dict:
        doc = {
            "input": self.fv.to_json(),
            "m": str(self.m),
            "shortcut": self.shortcut,
            "witness": self.witness.to_json(explicit_edges=explicit_edges),
            "witness_params": self.witness_params.to_json() if self.witness_params else None,
            "permutation": list(self.permutation.image),
            "candidates_constructed": self.candidates_constructed,
        }
        if self.b is not None:
            doc["b"] = [_json_int(x) for x in (self.b.b1, self.b.b2, self.b.b3)]
        if self.g2_range is not None:
            doc["g2_range"] = [_json_int(self.g2_range.lo), _json_int(self.g2_range.hi)]
        if self.sweep_window is not None:
            doc["sweep_window"] = [_json_int(x) for x in self.sweep_window]
        if trace:
            doc["ledger"] = [rep.to_json() for rep in self.ledger]
        return doc


def candidate_bound_ok(count: int, fv: FlagVector) -> bool:
    """count < 15 + 2*sqrt(2)*sqrt(f12*f23)/f13, decided in integers.  fv must be canonical."""
    if count <= 15:
        return True
    return (count - 15) ** 2 * fv.f13**2 < 8 * fv.f12 * fv.f23


def _vertedge_holds(fv: FlagVector, i: int) -> bool:
    j, k = (c for c in COLORS if c != i)
    fi = fv.vertex(i)
    return (fv.edge(i, j) // fi) * (fv.edge(i, k) // fi) >= fv.edge(j, k)


def _swap_to_front(i: int) -> ColorPermutation:
    image = [1, 2, 3]
    image[0], image[i - 1] = image[i - 1], image[0]
    return ColorPermutation(tuple(image))


def vertedge_witness(fv: FlagVector, i: int) -> BuildResult:
    """Complex with f_i * f_jk facets: every jk-edge joined to all color-i vertices."""
    perm = _swap_to_front(i)
    local = perm.apply(fv)
    g1 = local.f1
    g2 = local.f12 // g1
    g3 = local.f23 // g2
    res = build(local, CandidateParams(g1, g2, g3, p=3, q=2))
    assert not isinstance(res, Undefined), res
    back = perm.inverse()
    return BuildResult(
        relabel(res.complex, back), res.params.relabel(back), res.facets, res.saturated, None
    )


def shortcut_vertedge(fv: FlagVector) -> Optional[tuple[int, int]]:
    """(m, color) for the lowest color whose vertex-edge condition holds, else None."""
    for i in COLORS:
        if _vertedge_holds(fv, i):
            j, k = (c for c in COLORS if c != i)
            return fv.vertex(i) * fv.edge(j, k), i
    return None


def shortcut_b10(fv: FlagVector, b: Optional[BConstants] = None) -> Optional[int]:
    """m = f12 * f13 when b1 = 0 (canonical order assumed)."""
    b = b or compute_b(fv)
    if b.b1 == 0:
        return fv.f12 * fv.f13
    return None


class _Ledger:
    def __init__(self, fv: FlagVector):
        self.fv = fv
        self.reports: list[CandidateReport] = []
        self.results: dict = {}  # params -> BuildResult
        self.seen: dict = {}  # key -> step of first occurrence
        self.best: Optional[int] = None
        self.best_params: Optional[CandidateParams] = None
        self.constructed = 0

    def attempt(self, step: int, r: int, cand) -> bool:
        """Record one candidate; returns False when it is undefined."""
        if isinstance(cand, Undefined):
            key = ("undefined", r, cand.g)
            if key in self.seen:
                self.reports.append(
                    CandidateReport(step, r, cand.g, outcome="previous", reason=cand.reason, previous_step=self.seen[key])
                )
                return False
            self.seen[key] = step
            self.constructed += 1
            self.reports.append(CandidateReport(step, r, cand.g, outcome="undefined", reason=cand.reason))
            return False

        if cand in self.seen:
            prev = self.results.get(cand)
            self.reports.append(
                CandidateReport(
                    step,
                    r,
                    cand.g,
                    cand,
                    outcome="previous",
                    facets=prev.facets if prev else None,
                    saturated=prev.saturated if prev else None,
                    previous_step=self.seen[cand],
                )
            )
            return prev is not None
        self.seen[cand] = step
        self.constructed += 1
        res = build(self.fv, cand)
        if isinstance(res, Undefined):
            self.reports.append(CandidateReport(step, r, cand.g, cand, outcome="undefined", reason=res.reason))
            return False
        self.results[cand] = res
        self.reports.append(CandidateReport(step, r, cand.g, cand, facets=res.facets, saturated=res.saturated))
        if self.best is None or res.facets > self.best:
            self.best, self.best_params = res.facets, cand
        return True


def _sweep(fv: FlagVector, b: BConstants, rng: G2Range, ledger: _Ledger) -> tuple[int, int]:
    """Walk g2 outward from b2 (clamped into rng) until the bound or definedness stops it."""
    evaluated = []

    def walk(step, values) -> bool:
        for t in values:
            if ledger.best is not None and v_bound(fv, t, b.b1) <= ledger.best:
                return False
            evaluated.append(t)
            if not ledger.attempt(step, 2, determinize(fv, 2, t)):
                return False
        return True

    b2 = b.b2
    if b2 in rng:
        centre_ok = walk(11, [b2])
        walk(11, range(b2 + 1, rng.hi + 1))
        if centre_ok:
            walk(11, range(b2 - 1, rng.lo - 1, -1))
    elif b2 < rng.lo:
        walk(12, range(rng.lo, rng.hi + 1))
    else:
        walk(13, range(rng.hi, rng.lo - 1, -1))
    if not evaluated:
        return None
    return (min(evaluated), max(evaluated))


def maximize(fv: FlagVector) -> MaxResult:
    report = validate(fv)
    if not report.ok:
        raise EdgeInfeasible(report.reasons())

    if min(fv.budgets) == 0:
        return MaxResult(fv, 0, TriComplex.empty(fv.vertices), shortcut="zero-budget")

    holds = tuple(i for i in COLORS if _vertedge_holds(fv, i))
    if holds:
        i = holds[0]
        res = vertedge_witness(fv, i)
        j, k = (c for c in COLORS if c != i)
        rep = CandidateReport(2, None, res.params.g, res.params, facets=res.facets, saturated=res.saturated)
        return MaxResult(
            fv,
            fv.vertex(i) * fv.edge(j, k),
            res.complex,
            shortcut=f"vertedge:{i}",
            ledger=[rep],
            candidates_constructed=1,
            witness_params=res.params,
            vertedge_colors=holds,
        )

    cfv, perm = canonical_relabel(fv)
    back = perm.inverse()
    b = compute_b(cfv)

    if b.b1 == 0:
        params = CandidateParams(1, cfv.f12, cfv.f13, p=2, q=3)
        core = TriComplex.complete(1, cfv.f12, cfv.f13, cfv.vertices)
        rep = CandidateReport(4, None, params.g, None, facets=core.facet_count(), saturated=False)
        return MaxResult(
            fv,
            cfv.f12 * cfv.f13,
            relabel(core, back),
            shortcut="b1-zero",
            ledger=[rep],
            candidates_constructed=1,
            permutation=perm,
            b=b,
        )

    ledger = _Ledger(cfv)
    ledger.attempt(5, 1, determinize(cfv, 1, b.b1))
    ledger.attempt(5, 2, determinize(cfv, 2, b.b2))
    for step, i, r in ((6, 3, 2), (7, 3, 1), (8, 2, 1)):
        for g_r in bibr_candidates(cfv, i, r, b):
            ledger.attempt(step, r, determinize(cfv, r, g_r))
    ledger.attempt(9, 3, determinize(cfv, 3, cfv.f3))

    rng = b1g2_range(cfv, b)
    window = _sweep(cfv, b, rng, ledger) if rng is not None else None

    if ledger.best is None:
        # Not reachable for valid input with positive budgets; kept as a guard.
        raise RuntimeError(f"no candidate construction was defined for {fv}")
    best = ledger.results[ledger.best_params]
    return MaxResult(
        fv,
        ledger.best,
        relabel(best.complex, back),
        ledger=ledger.reports,
        candidates_constructed=ledger.constructed,
        permutation=perm,
        witness_params=ledger.best_params.relabel(back),
        b=b,
        g2_range=rng,
        sweep_window=window,
    )


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    f123: int
    m: Optional[int]
    witness: Optional[TriComplex]
    reasons: tuple = ()

    def to_json(self, explicit_edges=False) -> dict:
        return {
            "feasible": self.feasible,
            "f123": str(self.f123),
            "m": None if self.m is None else str(self.m),
            "reasons": list(self.reasons),
            "witness": self.witness.to_json(explicit_edges=explicit_edges) if self.witness else None,
        }


def is_feasible(fv: FlagVector) -> Verdict:
    """Is there a 3-colored complex with exactly these flag numbers?

    Dropping facets never hurts the lower faces, so the proposal is realizable
    exactly when it does not exceed m.
    """
    if fv.f123 is None:
        raise ValueError("is_feasible needs a proposed f123")
    report = validate(fv)
    if not report.ok:
        return Verdict(False, fv.f123, None, None, tuple(report.reasons()))
    res = maximize(fv)
    if fv.f123 > res.m:
        return Verdict(False, fv.f123, res.m, res.witness, (f"f123 = {fv.f123} > m = {res.m}",))
    return Verdict(True, fv.f123, res.m, res.witness)
