import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triflag.flagvec import (
    ALL_PERMUTATIONS,
    COLOR_SETS,
    ColorPermutation,
    FlagVector,
    HVector,
    canonical_relabel,
    f_to_h,
    f_to_h_raw,
    floor_sqrt_ratio,
    h_to_f,
    h_to_f_raw,
    parse_int,
    product_bounds,
    validate,
)

budgets = st.tuples(*[st.integers(0, 50)] * 6)


class TestFlagVector:
    def test_accessors(self):
        fv = FlagVector.of((3, 5, 7), (13, 16, 18))
        assert fv.vertices == (3, 5, 7)
        assert fv.edges == (13, 16, 18)
        assert fv.edge(3, 1) == 16
        assert fv.entry(()) == 1
        assert fv.entry((2, 3)) == 18

    def test_rejects_negative_and_non_int(self):
        with pytest.raises(ValueError):
            FlagVector(1, 1, 1, 1, 1, -1)
        with pytest.raises(TypeError):
            FlagVector(1, 1, 1, 1, 1, 1.0)
        with pytest.raises(TypeError):
            FlagVector(True, 1, 1, 1, 1, 1)

    def test_json_round_trip_big_values(self):
        fv = FlagVector.of((2, 10**8, 10**8), (10**8, 100020000, 4445333316613330), f123=2**60)
        doc = fv.to_json()
        assert doc["f123"] == str(2**60)
        assert doc["f23"] == 4445333316613330
        assert FlagVector.from_json(doc) == fv

    def test_from_json_missing_key(self):
        with pytest.raises(ValueError):
            FlagVector.from_json({"f1": 1})

    @pytest.mark.parametrize("raw, value", [(5, 5), ("12", 12), (" 7 ", 7), (3.0, 3)])
    def test_parse_int(self, raw, value):
        assert parse_int(raw) == value

    @pytest.mark.parametrize("raw", ["1.5", "abc", 2.5, True, None])
    def test_parse_int_rejects(self, raw):
        with pytest.raises(ValueError):
            parse_int(raw)


class TestValidate:
    def test_edge_infeasible(self):
        rep = validate(FlagVector.of((3, 5, 7), (23, 14, 18)))
        assert rep.verdict == "edge-infeasible"
        assert rep.reasons() == ["f12 > f1*f2"]

    def test_feasible_so_far(self):
        assert validate(FlagVector.of((3, 5, 7), (13, 16, 18))).verdict == "feasible-so-far"

    def test_all_zero(self):
        rep = validate(FlagVector.of((0, 0, 0), (0, 0, 0)))
        assert rep.verdict == "all-zero"
        assert rep.ok

    @given(budgets)
    def test_permutation_equivariant(self, b):
        fv = FlagVector(*b)
        verdicts = {validate(p.apply(fv)).verdict for p in ALL_PERMUTATIONS}
        assert verdicts == {validate(fv).verdict}


class TestTransforms:
    def test_single_edge(self):
        fv = FlagVector(1, 1, 0, 1, 0, 0, 0)
        assert f_to_h(fv)[(1, 2)] == 0

    def test_empty_complex(self):
        h = f_to_h(FlagVector(0, 0, 0, 0, 0, 0, 0))
        for s in COLOR_SETS:
            assert h[s] == (-1) ** len(s)

    def test_alternating_sum(self):
        h = f_to_h(FlagVector(2, 3, 1, 6, 2, 3, 6))
        assert h[(1, 2, 3)] == 0
        assert h[()] == 1

    def test_h_delta_gives_all_ones(self):
        hv = HVector({s: (1 if s == () else 0) for s in COLOR_SETS})
        assert h_to_f(hv) == FlagVector(1, 1, 1, 1, 1, 1, 1)

    def test_needs_f123(self):
        with pytest.raises(ValueError):
            f_to_h(FlagVector(1, 1, 1, 1, 1, 1))

    def test_h_empty_must_be_one(self):
        with pytest.raises(ValueError):
            h_to_f(HVector({s: 0 for s in COLOR_SETS}))

    @given(st.lists(st.integers(-(10**20), 10**20), min_size=8, max_size=8))
    def test_raw_round_trip(self, values):
        f = dict(zip(COLOR_SETS, values))
        assert h_to_f_raw(f_to_h_raw(f)) == f
        assert f_to_h_raw(h_to_f_raw(f)) == f

    @given(budgets, st.integers(0, 10**6))
    def test_typed_round_trip(self, b, f123):
        fv = FlagVector(*b, f123)
        assert h_to_f(f_to_h(fv)) == fv


class TestBounds:
    def test_walker_bound_five(self):
        assert product_bounds(FlagVector.of((5, 5, 5), (5, 5, 5)))[3] == 11

    def test_vertex_edge_product(self):
        assert product_bounds(FlagVector.of((3, 5, 7), (13, 16, 18)))[0] == 54

    def test_all_ones(self):
        assert product_bounds(FlagVector.of((1, 1, 1), (1, 1, 1))) == (1, 1, 1, 1)

    @given(st.integers(0, 10**30), st.integers(0, 10**30), st.integers(0, 10**30))
    def test_walker_floor_sqrt(self, a, b, c):
        w = product_bounds(FlagVector(1, 1, 1, a, b, c))[3]
        assert w * w <= a * b * c < (w + 1) ** 2

    @given(st.integers(0, 10**40), st.integers(1, 10**20))
    def test_floor_sqrt_ratio(self, num, den):
        k = floor_sqrt_ratio(num, den)
        assert k * k * den <= num < (k + 1) ** 2 * den

    def test_floor_sqrt_ratio_matches_isqrt(self):
        assert floor_sqrt_ratio(4972 * 5311, 5630) == math.isqrt(4972 * 5311 // 5630) == 68


class TestRelabel:
    def test_swap_two_and_three(self):
        out, perm = canonical_relabel(FlagVector.of((17, 31, 25), (15, 12, 279)))
        assert out == FlagVector.of((17, 25, 31), (12, 15, 279))
        assert perm.image == (1, 3, 2)

    def test_sorted_is_identity(self):
        _, perm = canonical_relabel(FlagVector.of((533, 471, 818), (4972, 5311, 5630)))
        assert perm.is_identity

    def test_all_equal_is_identity(self):
        _, perm = canonical_relabel(FlagVector.of((4, 5, 6), (7, 7, 7)))
        assert perm.is_identity

    def test_permutation_algebra(self):
        for p in ALL_PERMUTATIONS:
            assert p.compose(p.inverse()).is_identity
            assert p.inverse().compose(p).is_identity
        with pytest.raises(ValueError):
            ColorPermutation((1, 1, 2))

    @given(budgets)
    def test_sorted_idempotent_and_invertible(self, b):
        fv = FlagVector(*b)
        out, perm = canonical_relabel(fv)
        assert out.f12 <= out.f13 <= out.f23
        again, perm2 = canonical_relabel(out)
        assert again == out and perm2.is_identity
        assert perm.inverse().apply(out) == fv
