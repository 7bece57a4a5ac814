"""Flag f-vectors of 3-colored complexes: data model, f/h transforms, bounds, relabeling."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

COLORS = (1, 2, 3)
PAIRS = ((1, 2), (1, 3), (2, 3))

# Color sets as sorted tuples; () is the empty face.
COLOR_SETS = ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))


def _key(colors) -> str:
    return "f" + "".join(str(c) for c in sorted(colors))


@dataclass(frozen=True)
class FlagVector:
    f1: int
    f2: int
    f3: int
    f12: int
    f13: int
    f23: int
    f123: Optional[int] = None
    f_empty: int = field(default=1, compare=False)

    def __post_init__(self):
        for name in ("f1", "f2", "f3", "f12", "f13", "f23", "f123", "f_empty"):
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    @classmethod
    def of(cls, vertices, edges, f123=None) -> FlagVector:
        """Build from ``(f1, f2, f3)`` and ``(f12, f13, f23)``."""
        (f1, f2, f3), (f12, f13, f23) = vertices, edges
        return cls(f1, f2, f3, f12, f13, f23, f123)

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.f1, self.f2, self.f3)

    @property
    def edges(self) -> tuple[int, int, int]:
        return (self.f12, self.f13, self.f23)

    @property
    def budgets(self) -> tuple[int, ...]:
        return self.vertices + self.edges

    def vertex(self, c: int) -> int:
        return self.vertices[c - 1]

    def edge(self, a: int, b: int) -> int:
        """Edge budget of color set {a, b}, in either order."""
        return getattr(self, _key((a, b)))

    def with_f123(self, f123: Optional[int]) -> FlagVector:
        return FlagVector(*self.budgets, f123)

    def entry(self, colors) -> Optional[int]:
        colors = tuple(sorted(colors))
        if not colors:
            return self.f_empty
        return getattr(self, _key(colors))

    def to_json(self) -> dict:
        doc = {name: _json_int(getattr(self, name)) for name in ("f1", "f2", "f3", "f12", "f13", "f23")}
        if self.f123 is not None:
            doc["f123"] = _json_int(self.f123)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> FlagVector:
        def parse(name, required=True):
            if name not in doc:
                if required:
                    raise ValueError(f"missing key {name!r}")
                return None
            return parse_int(doc[name], name)

        return cls(*(parse(n) for n in ("f1", "f2", "f3", "f12", "f13", "f23")), parse("f123", required=False))


def parse_int(value, name="value") -> int:
    """Accept ints, integral decimal strings, or integral JSON numbers."""
    if isinstance(value, bool):
        raise ValueError(f"{name}: booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not text.lstrip("-").isdigit():
            raise ValueError(f"{name}: not a decimal integer: {value!r}")
        return int(text)
    if isinstance(value, float) and value.is_integer() and abs(value) <= 2**53:
        return int(value)
    raise ValueError(f"{name}: not an integer: {value!r}")


JSON_SAFE = 2**53


def _json_int(x: int):
    # Plain numbers only where every JSON reader keeps them exact.
    return x if abs(x) < JSON_SAFE else str(x)


@dataclass(frozen=True)
class HVector:
    """Flag h-vector, keyed by color sets as sorted tuples."""

    values: dict

    def __getitem__(self, colors) -> int:
        return self.values[tuple(sorted(colors))]

    def __eq__(self, other) -> bool:
        return isinstance(other, HVector) and self.values == other.values

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))


def _subsets(s):
    for k in range(len(s) + 1):
        yield from itertools.combinations(s, k)


def f_to_h(fv: FlagVector) -> HVector:
    if fv.f123 is None:
        raise ValueError("f_to_h needs f123")
    h = {}
    for s in COLOR_SETS:
        h[s] = sum((-1) ** (len(s) - len(t)) * fv.entry(t) for t in _subsets(s))
    return HVector(h)


def h_to_f(hv: HVector) -> FlagVector:
    f = {s: sum(hv[t] for t in _subsets(s)) for s in COLOR_SETS}
    if f[()] != 1:
        raise ValueError(f"h_empty must be 1 (got f_empty = {f[()]})")
    return FlagVector(*(f[s] for s in COLOR_SETS[1:]))


def f_to_h_raw(f: dict) -> dict:
    """Inclusion-exclusion on an arbitrary integer dict over COLOR_SETS (no sign checks)."""
    return {s: sum((-1) ** (len(s) - len(t)) * f[t] for t in _subsets(s)) for s in COLOR_SETS}


def h_to_f_raw(h: dict) -> dict:
    return {s: sum(h[t] for t in _subsets(s)) for s in COLOR_SETS}


@dataclass(frozen=True)
class ValidationReport:
    products_ok: dict  # (a, b) -> f_a * f_b >= f_ab
    zero_entries: tuple
    verdict: str  # "edge-infeasible" | "all-zero" | "feasible-so-far"

    @property
    def ok(self) -> bool:
        return self.verdict != "edge-infeasible"

    def reasons(self) -> list[str]:
        return [f"f{a}{b} > f{a}*f{b}" for (a, b), good in self.products_ok.items() if not good]


def validate(fv: FlagVector) -> ValidationReport:
    products_ok = {(a, b): fv.vertex(a) * fv.vertex(b) >= fv.edge(a, b) for a, b in PAIRS}
    names = ("f1", "f2", "f3", "f12", "f13", "f23")
    zeros = tuple(n for n, v in zip(names, fv.budgets) if v == 0)
    if not all(products_ok.values()):
        verdict = "edge-infeasible"
    elif len(zeros) == len(names):
        verdict = "all-zero"
    else:
        verdict = "feasible-so-far"
    return ValidationReport(products_ok, zeros, verdict)


def floor_sqrt_ratio(num: int, den: int) -> int:
    """Largest k with k*k*den <= num."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num < 0:
        raise ValueError("numerator must be nonnegative")
    # floor(sqrt(x)) == isqrt(floor(x)) for x >= 0
    return math.isqrt(num // den)


def product_bounds(fv: FlagVector) -> tuple[int, int, int, int]:
    """(f1*f23, f2*f13, f3*f12, floor(sqrt(f12*f13*f23)))."""
    return (
        fv.f1 * fv.f23,
        fv.f2 * fv.f13,
        fv.f3 * fv.f12,
        math.isqrt(fv.f12 * fv.f13 * fv.f23),
    )


@dataclass(frozen=True)
class ColorPermutation:
    """``image[c - 1]`` is the new color of old color ``c``."""

    image: tuple = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.image) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.image}")

    def __call__(self, c: int) -> int:
        return self.image[c - 1]

    def compose(self, other: ColorPermutation) -> ColorPermutation:
        """``self`` after ``other``."""
        return ColorPermutation(tuple(self(other(c)) for c in COLORS))

    def inverse(self) -> ColorPermutation:
        inv = [0, 0, 0]
        for c in COLORS:
            inv[self(c) - 1] = c
        return ColorPermutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.image == (1, 2, 3)

    @property
    def swap_count(self) -> int:
        """Minimum number of transpositions (3 minus the cycle count)."""
        seen, cycles = set(), 0
        for c in COLORS:
            if c in seen:
                continue
            cycles += 1
            while c not in seen:
                seen.add(c)
                c = self(c)
        return 3 - cycles

    def apply(self, fv: FlagVector) -> FlagVector:
        verts = [0, 0, 0]
        for c in COLORS:
            verts[self(c) - 1] = fv.vertex(c)
        edges = {}
        for a, b in PAIRS:
            edges[tuple(sorted((self(a), self(b))))] = fv.edge(a, b)
        return FlagVector(*verts, *(edges[p] for p in PAIRS), fv.f123)


ALL_PERMUTATIONS = tuple(ColorPermutation(p) for p in itertools.permutations(COLORS))


def canonical_relabel(fv: FlagVector) -> tuple[FlagVector, ColorPermutation]:
    """Relabel so that f12 <= f13 <= f23; ties prefer the fewest swaps, then the smallest image."""
    best = None
    for perm in sorted(ALL_PERMUTATIONS, key=lambda p: (p.swap_count, p.image)):
        out = perm.apply(fv)
        if out.f12 <= out.f13 <= out.f23:
            best = (out, perm)
            break
    assert best is not None
    return best
