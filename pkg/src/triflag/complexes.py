"""Color-shifted 3-colored complexes stored as three staircase bipartite graphs.

A staircase over a (row color, column color) pair records, for each row vertex in
order, how many of the earliest column vertices it is adjacent to.  Rows are kept
run-length encoded because the constructed complexes have very few distinct row
values but can have ~10^8 rows.  Facets are never materialized: a facet is any
triple whose three edges are all present.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .flagvec import FlagVector, _json_int

DEFAULT_EDGE_CAP = 10**5


def _normalize(runs) -> tuple:
    out = []
    for value, count in runs:
        if count < 0 or value < 0:
            raise ValueError(f"bad run ({value}, {count})")
        if count == 0:
            continue
        if out and out[-1][0] == value:
            out[-1][1] += count
        else:
            out.append([value, count])
    while out and out[-1][0] == 0:
        out.pop()
    return tuple((v, c) for v, c in out)


@dataclass(frozen=True)
class StaircaseGraph:
    """Bipartite graph; row vertex i is adjacent to the first ``rows[i]`` column vertices.

    ``runs`` is ``((value, count), ...)`` with trailing zero rows dropped.
    """

    runs: tuple
    row_cap: int
    col_cap: int

    def __post_init__(self):
        object.__setattr__(self, "runs", _normalize(self.runs))

    @classmethod
    def from_rows(cls, rows, row_cap=None, col_cap=None) -> StaircaseGraph:
        rows = list(rows)
        if row_cap is None:
            row_cap = len(rows)
        if col_cap is None:
            col_cap = max(rows, default=0)
        return cls(tuple((v, 1) for v in rows), row_cap, col_cap)

    @classmethod
    def empty(cls, row_cap=0, col_cap=0) -> StaircaseGraph:
        return cls((), row_cap, col_cap)

    @property
    def rows(self) -> list[int]:
        return [v for v, c in self.runs for _ in range(c)]

    @property
    def length(self) -> int:
        return sum(c for _, c in self.runs)

    @property
    def edge_count(self) -> int:
        return sum(v * c for v, c in self.runs)

    @property
    def width(self) -> int:
        """Number of column vertices touched."""
        return max((v for v, _ in self.runs), default=0)

    def is_monotone(self) -> bool:
        values = [v for v, _ in self.runs]
        return all(a >= b for a, b in zip(values, values[1:]))

    def fits(self) -> bool:
        return self.length <= self.row_cap and self.width <= self.col_cap

    def value_at(self, i: int) -> int:
        for v, c in self.runs:
            if i < c:
                return v
            i -= c
        return 0

    def prefix_min_sum(self, k: int, a: int) -> int:
        """sum(min(a, rows[j]) for j < k); rows past the end count as 0."""
        total = 0
        for v, c in self.runs:
            if k <= 0:
                break
            take = min(k, c)
            total += take * min(a, v)
            k -= take
        return total

    def edges(self):
        """Explicit (row, col) pairs, 0-based."""
        i = 0
        for v, c in self.runs:
            for _ in range(c):
                for j in range(v):
                    yield (i, j)
                i += 1


@dataclass(frozen=True)
class TriComplex:
    """Staircases e12 (rows color 1), e13 (rows color 1), e23 (rows color 2)."""

    e12: StaircaseGraph
    e13: StaircaseGraph
    e23: StaircaseGraph
    n1: int
    n2: int
    n3: int

    @classmethod
    def from_rows(cls, rows12, rows13, rows23, n=None) -> TriComplex:
        if n is None:
            n = (
                max(len(rows12), len(rows13)),
                max(len(rows23), max(rows12, default=0)),
                max(max(rows13, default=0), max(rows23, default=0)),
            )
        n1, n2, n3 = n
        return cls(
            StaircaseGraph.from_rows(rows12, n1, n2),
            StaircaseGraph.from_rows(rows13, n1, n3),
            StaircaseGraph.from_rows(rows23, n2, n3),
            n1,
            n2,
            n3,
        )

    @classmethod
    def from_runs(cls, runs12, runs13, runs23, n) -> TriComplex:
        n1, n2, n3 = n
        return cls(
            StaircaseGraph(tuple(runs12), n1, n2),
            StaircaseGraph(tuple(runs13), n1, n3),
            StaircaseGraph(tuple(runs23), n2, n3),
            n1,
            n2,
            n3,
        )

    @classmethod
    def complete(cls, g1, g2, g3, n=None) -> TriComplex:
        return cls.from_runs(((g2, g1),), ((g3, g1),), ((g3, g2),), n or (g1, g2, g3))

    @classmethod
    def empty(cls, n=(0, 0, 0)) -> TriComplex:
        return cls.from_runs((), (), (), n)

    @property
    def n(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def vertex_counts(self) -> tuple[int, int, int]:
        """Vertices of each color that lie in at least one edge."""
        return (
            max(self.e12.length, self.e13.length),
            max(self.e23.length, self.e12.width),
            max(self.e13.width, self.e23.width),
        )

    def facet_count(self) -> int:
        return facet_count(self)

    def edge_counts(self) -> tuple[int, int, int]:
        return edge_counts(self)

    def to_json(self, explicit_edges=False, edge_cap=DEFAULT_EDGE_CAP) -> dict:
        doc = {
            "n": [_json_int(x) for x in self.n],
            "rows12": [[_json_int(v), _json_int(c)] for v, c in self.e12.runs],
            "rows13": [[_json_int(v), _json_int(c)] for v, c in self.e13.runs],
            "rows23": [[_json_int(v), _json_int(c)] for v, c in self.e23.runs],
            "facets": str(self.facet_count()),
        }
        if explicit_edges:
            if max(self.edge_counts()) <= edge_cap:
                for key, g in (("edges12", self.e12), ("edges13", self.e13), ("edges23", self.e23)):
                    doc[key] = [[i + 1, j + 1] for i, j in g.edges()]
            else:
                doc["edges_omitted"] = f"edge count exceeds cap {edge_cap}"
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> TriComplex:
        from .flagvec import parse_int

        n = tuple(parse_int(x, "n") for x in doc["n"])
        if len(n) != 3:
            raise ValueError("'n' must have three entries")

        def runs(key):
            out = []
            for item in doc[key]:
                if isinstance(item, list):
                    if len(item) != 2:
                        raise ValueError(f"{key}: runs must be [value, count] pairs")
                    out.append((parse_int(item[0], key), parse_int(item[1], key)))
                else:
                    out.append((parse_int(item, key), 1))
            return out

        return cls.from_runs(runs("rows12"), runs("rows13"), runs("rows23"), n)


def _row_blocks(a: StaircaseGraph, b: StaircaseGraph):
    """Walk two staircases over the same row color in lockstep: yields (a_val, b_val, count)."""
    ia, ib = iter(a.runs), iter(b.runs)
    ra, rb = next(ia, None), next(ib, None)
    va, ca = ra if ra else (0, 0)
    vb, cb = rb if rb else (0, 0)
    while ca or cb:
        if not ca:
            yield (0, vb, cb)
            rb = next(ib, None)
            vb, cb = rb if rb else (0, 0)
            continue
        if not cb:
            yield (va, 0, ca)
            ra = next(ia, None)
            va, ca = ra if ra else (0, 0)
            continue
        take = min(ca, cb)
        yield (va, vb, take)
        ca -= take
        cb -= take
        if not ca:
            ra = next(ia, None)
            va, ca = ra if ra else (0, 0)
        if not cb:
            rb = next(ib, None)
            vb, cb = rb if rb else (0, 0)


def facet_count(tc: TriComplex) -> int:
    """Sum over 12-edges (i, j) of min(rows13[i], rows23[j])."""
    total = 0
    for k, a, count in _row_blocks(tc.e12, tc.e13):
        if k and a:
            total += count * tc.e23.prefix_min_sum(k, a)
    return total


def facet_count_brute(tc: TriComplex) -> int:
    """Enumerate every (i, j, k) triple. Only for tiny complexes."""
    r12, r13, r23 = tc.e12.rows, tc.e13.rows, tc.e23.rows
    n1, n2, n3 = tc.vertex_counts()

    def row(rows, i):
        return rows[i] if i < len(rows) else 0

    return sum(
        1
        for i, j, k in itertools.product(range(n1), range(n2), range(n3))
        if j < row(r12, i) and k < row(r13, i) and k < row(r23, j)
    )


def edge_counts(tc: TriComplex) -> tuple[int, int, int]:
    return (tc.e12.edge_count, tc.e13.edge_count, tc.e23.edge_count)


def is_color_shifted(tc: TriComplex) -> bool:
    return all(g.is_monotone() for g in (tc.e12, tc.e13, tc.e23))


def within_budget(tc: TriComplex, fv: FlagVector) -> bool:
    used_v = tc.vertex_counts()
    if any(u > f for u, f in zip(used_v, fv.vertices)):
        return False
    return all(u <= f for u, f in zip(edge_counts(tc), fv.edges))


def relabel(tc: TriComplex, perm) -> TriComplex:
    """Rename colors by ``perm`` (old color c becomes perm(c)).

    Only valid for color-shifted complexes: each staircase is transposed when its
    row and column colors swap order.
    """
    graphs = {(1, 2): tc.e12, (1, 3): tc.e13, (2, 3): tc.e23}
    n_old = tc.n
    n_new = [0, 0, 0]
    for c in (1, 2, 3):
        n_new[perm(c) - 1] = n_old[c - 1]
    out = {}
    for (a, b), g in graphs.items():
        na, nb = perm(a), perm(b)
        if na < nb:
            out[(na, nb)] = g.runs
        else:
            out[(nb, na)] = transpose_runs(g.runs)
    return TriComplex.from_runs(out[(1, 2)], out[(1, 3)], out[(2, 3)], tuple(n_new))


def transpose_runs(runs) -> tuple:
    """Conjugate partition of a weakly decreasing run-length sequence."""
    # Column j has height = number of rows with value > j; walking the runs from the
    # shortest rows up gives the columns left to right.
    heights = []
    cumulative = 0
    for v, c in runs:
        cumulative += c
        heights.append((v, cumulative))
    out = []
    prev_v = 0
    for v, h in reversed(heights):
        if v > prev_v:
            out.append((h, v - prev_v))
            prev_v = v
    return _normalize(out)
