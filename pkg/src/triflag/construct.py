"""Parametric two-extra-vertex constructions and the bounds that choose their parameters.

A candidate is a complete tripartite core on (g1, g2, g3) vertices plus at most two
extra vertices: one of color p, then one of color q.  Each extra vertex greedily
takes as many leftover edges as it can, attaching to the earliest vertices of the
other colors.  Everything here is exact integer / Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Union

from .complexes import TriComplex
from .flagvec import COLORS, PAIRS, ColorPermutation, FlagVector, floor_sqrt_ratio


@dataclass(frozen=True)
class CandidateParams:
    g1: int
    g2: int
    g3: int
    p: int
    q: int

    def __post_init__(self):
        if self.p == self.q or self.p not in COLORS or self.q not in COLORS:
            raise ValueError(f"p, q must be distinct colors, got {self.p}, {self.q}")
        if min(self.g) < 0:
            raise ValueError(f"core sizes must be nonnegative, got {self.g}")

    @property
    def g(self) -> tuple[int, int, int]:
        return (self.g1, self.g2, self.g3)

    @property
    def r(self) -> int:
        return 6 - self.p - self.q

    def core(self, c: int) -> int:
        return self.g[c - 1]

    def relabel(self, perm: ColorPermutation) -> CandidateParams:
        """Same construction with old color c renamed perm(c)."""
        g = [0, 0, 0]
        for c in COLORS:
            g[perm(c) - 1] = self.core(c)
        return CandidateParams(*g, perm(self.p), perm(self.q))

    def to_json(self) -> dict:
        from .flagvec import _json_int

        return {"g": [_json_int(x) for x in self.g], "p": self.p, "q": self.q}


@dataclass(frozen=True)
class BConstants:
    b1: int
    b2: int
    b3: int

    def __getitem__(self, c: int) -> int:
        return (self.b1, self.b2, self.b3)[c - 1]


@dataclass(frozen=True)
class Leftovers:
    j1: int
    j2: int
    j3: int

    def __getitem__(self, c: int) -> int:
        return (self.j1, self.j2, self.j3)[c - 1]

    @property
    def nonnegative(self) -> bool:
        return min(self.j1, self.j2, self.j3) >= 0


@dataclass(frozen=True)
class Undefined:
    reason: str
    g: Optional[tuple] = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class BuildResult:
    complex: TriComplex
    params: CandidateParams
    facets: int
    saturated: bool
    edges_used: tuple


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def compute_b(fv: FlagVector) -> BConstants:
    """b_i = floor(sqrt(f_ij * f_ik / f_jk)), exactly."""
    if min(fv.edges) <= 0:
        raise ValueError("degenerate, handle upstream: an edge budget is zero")
    bs = []
    for i in COLORS:
        j, k = (c for c in COLORS if c != i)
        bs.append(floor_sqrt_ratio(fv.edge(i, j) * fv.edge(i, k), fv.edge(j, k)))
    return BConstants(*bs)


def leftover_j(fv: FlagVector, g) -> Leftovers:
    g1, g2, g3 = g
    return Leftovers(fv.f23 - g2 * g3, fv.f13 - g1 * g3, fv.f12 - g1 * g2)


def _add_column(runs: list, k: int) -> list:
    """Attach a new column vertex to the first k rows."""
    out = []
    for v, c in runs:
        if k <= 0:
            out.append((v, c))
        elif k >= c:
            out.append((v + 1, c))
            k -= c
        else:
            out.append((v + 1, k))
            out.append((v, c - k))
            k = 0
    if k > 0:
        out.append((1, k))
    return out


def build(fv: FlagVector, params: CandidateParams) -> Union[BuildResult, Undefined]:
    g = params.g
    for c in COLORS:
        if g[c - 1] > fv.vertex(c):
            return Undefined(f"g{c} = {g[c - 1]} > f{c} = {fv.vertex(c)}", g)
    j = leftover_j(fv, g)
    for c in COLORS:
        if j[c] < 0:
            a, b = (x for x in COLORS if x != c)
            return Undefined(f"core needs {g[a - 1] * g[b - 1]} > f{a}{b} = {fv.edge(a, b)} edges", g)

    runs = {(a, b): [(g[b - 1], g[a - 1])] for a, b in PAIRS}
    used = {(a, b): g[a - 1] * g[b - 1] for a, b in PAIRS}
    count = list(g)
    for x in (params.p, params.q):
        if fv.vertex(x) <= count[x - 1]:
            continue
        adj = {}
        for c in COLORS:
            if c == x:
                continue
            key = _pair(x, c)
            adj[c] = min(fv.edge(*key) - used[key], count[c - 1])
            used[key] += adj[c]
        for c, k in adj.items():
            key = _pair(x, c)
            if x < c:
                runs[key].append((k, 1))
            else:
                runs[key] = _add_column(runs[key], k)
        count[x - 1] += 1

    tc = TriComplex.from_runs(runs[(1, 2)], runs[(1, 3)], runs[(2, 3)], fv.vertices)
    edges_used = tuple(used[p] for p in PAIRS)
    return BuildResult(tc, params, tc.facet_count(), edges_used == fv.edges, edges_used)


def determinize(fv: FlagVector, r: int, g_r: int) -> Union[CandidateParams, Undefined]:
    """Fix the core size of color r; derive the other two sizes and the order (p, q)."""
    if g_r < 1:
        raise ValueError("g_r must be positive")
    x, y = (c for c in COLORS if c != r)
    f_xr, f_yr, f_xy = fv.edge(x, r), fv.edge(y, r), fv.edge(x, y)

    if f_xr % g_r:
        g_x = f_xr // g_r
    else:
        a = f_xr // g_r
        # ceil(f_yr / g_r - 1), read with the -1 inside the ceiling
        c = -(-f_yr // g_r) - 1
        g_x = a - 1 if a * c > f_xy else a
    if f_yr % g_r:
        g_y = f_yr // g_r
    else:
        b = f_yr // g_r
        g_y = b - 1 if b * g_x > f_xy else b

    g = [0, 0, 0]
    g[r - 1], g[x - 1], g[y - 1] = g_r, g_x, g_y
    g = tuple(g)
    for c in COLORS:
        if g[c - 1] > fv.vertex(c):
            return Undefined(f"g{c} = {g[c - 1]} > f{c} = {fv.vertex(c)}", g)
        if g[c - 1] < 0:
            return Undefined(f"g{c} = {g[c - 1]} < 0", g)
    j = leftover_j(fv, g)
    if not j.nonnegative:
        return Undefined(f"core overflows an edge budget, leftovers {(j.j1, j.j2, j.j3)}", g)
    p = x if j[x] <= j[y] else y
    q = y if p == x else x
    return CandidateParams(*g, p, q)


def bibr_candidates(fv: FlagVector, i: int, r: int, b: Optional[BConstants] = None) -> list[int]:
    """Possible core sizes of color r when color i's core is pinned near b_i."""
    if i == r:
        raise ValueError("i and r must differ")
    b = b or compute_b(fv)
    bi = b[i]
    if bi == 0:
        return []
    f_ir = fv.edge(i, r)
    lo = -(-f_ir // (bi + 1))
    hi = f_ir // bi
    if lo > hi:
        return []
    return sorted({lo, hi})


@dataclass(frozen=True)
class G2Range:
    lo: int
    hi: int
    fixed: bool = False

    def __contains__(self, t: int) -> bool:
        return self.lo <= t <= self.hi

    def __len__(self):
        return max(0, self.hi - self.lo + 1)


def b1g2_range(fv: FlagVector, b: Optional[BConstants] = None) -> Optional[G2Range]:
    """Interval of g2 values worth sweeping when g1 = b1, or None if there is none."""
    b = b or compute_b(fv)
    b1 = b.b1
    if b1 < 1:
        raise ValueError("b1 must be positive")
    f1, f2, f3, f12, f13, f23 = fv.budgets
    if f1 < b1:
        return None
    if f1 == b1:
        if f12 % f1:
            return None
        return G2Range(f12 // f1, f12 // f1, fixed=True)
    if f13 > f3 * (b1 + 1):
        return None
    lower = max(
        Fraction(f12, f1),
        Fraction(f12, b1 + 1),
        Fraction(f23, f13 // b1 + 1),
        Fraction(f23, f3),
    )
    uppers = [Fraction(f12, b1), Fraction(f2)]
    den = -(-f13 // (b1 + 1)) - 1
    if den > 0:
        uppers.append(Fraction(f23, den))
    lo, hi = ceil(lower), floor(min(uppers))
    if lo > hi:
        return None
    return G2Range(lo, hi)


def v_bound(fv: FlagVector, t, b1: Optional[int] = None) -> Fraction:
    """Upper bound on facets of any candidate with g1 = b1 and g2 = t."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if b1 is None:
        b1 = compute_b(fv).b1
    return b1 * fv.f23 + (fv.f12 - b1 * t) * (fv.f13 - b1 * fv.f23 / t)

