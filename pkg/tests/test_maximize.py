from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triflag.complexes import facet_count, is_color_shifted, within_budget
from triflag.flagvec import ALL_PERMUTATIONS, FlagVector, canonical_relabel, product_bounds, validate
from triflag.maximize import (
    EdgeInfeasible,
    candidate_bound_ok,
    is_feasible,
    maximize,
    shortcut_b10,
    shortcut_vertedge,
)
from triflag.oracle import brute_max


@st.composite
def budgets(draw, vmax=300, emax=20000):
    v = [draw(st.integers(1, vmax)) for _ in range(3)]
    e = [draw(st.integers(1, min(emax, v[a] * v[b]))) for a, b in ((0, 1), (0, 2), (1, 2))]
    return FlagVector.of(v, e)


def assert_sound(fv, res):
    assert facet_count(res.witness) == res.m
    assert within_budget(res.witness, fv)
    assert is_color_shifted(res.witness)


class TestShortcuts:
    def test_vertedge(self):
        assert shortcut_vertedge(FlagVector.of((3, 5, 7), (13, 16, 18))) == (54, 1)
        assert shortcut_vertedge(FlagVector.of((533, 471, 818), (4972, 5311, 5630))) is None
        assert shortcut_vertedge(FlagVector.of((1, 1, 1), (1, 1, 1))) == (1, 1)

    def test_b10(self):
        assert shortcut_b10(FlagVector.of((17, 25, 31), (12, 15, 279))) == 180
        assert shortcut_b10(FlagVector.of((533, 471, 818), (4972, 5311, 5630))) is None
        assert shortcut_b10(FlagVector.of((10**4,) * 3, (3, 4, 50))) == 12

    def test_zero_budget(self):
        res = maximize(FlagVector.of((3, 0, 3), (0, 9, 0)))
        assert res.m == 0 and res.shortcut == "zero-budget"

    def test_vertedge_through_other_color(self):
        fv = FlagVector.of((50, 2, 50), (100, 49, 100))
        res = maximize(fv)
        assert res.shortcut == "vertedge:2"
        assert res.m == 2 * 49
        assert_sound(fv, res)


class TestDriver:
    def test_edge_infeasible(self):
        with pytest.raises(EdgeInfeasible) as info:
            maximize(FlagVector.of((3, 5, 7), (23, 14, 18)))
        assert info.value.reasons == ["f12 > f1*f2"]

    def test_worked_full_run(self):
        fv = FlagVector.of((533, 471, 818), (4972, 5311, 5630))
        res = maximize(fv)
        assert res.m == 382896
        assert res.witness_params.g == (68, 73, 77) and res.witness_params.r == 2
        assert res.shortcut is None
        assert_sound(fv, res)

    def test_relabelled_witness_in_original_colors(self):
        fv = FlagVector.of((17, 31, 25), (15, 12, 279))
        res = maximize(fv)
        assert res.m == 180 and res.permutation.image == (1, 3, 2)
        assert_sound(fv, res)

    def test_ledger_marks_repeats(self):
        res = maximize(FlagVector.of((533, 471, 818), (4972, 5311, 5630)))
        repeats = [rep for rep in res.ledger if rep.outcome == "previous"]
        assert repeats and all(rep.previous_step < rep.step for rep in repeats)
        assert res.candidates_constructed == len(res.ledger) - len(repeats)

    def test_json_shape(self):
        doc = maximize(FlagVector.of((533, 471, 818), (4972, 5311, 5630))).to_json(trace=True)
        assert doc["m"] == "382896"
        assert doc["b"] == [68, 72, 77]
        assert doc["ledger"][0]["outcome"] == "undefined"

    def test_big_values_as_strings(self):
        fv = FlagVector.of((2, 10**8, 10**8), (10**8, 100020000, 4445333316613330))
        doc = maximize(fv).to_json()
        assert isinstance(doc["m"], str) and int(doc["m"]) > 5 * 10**15
        assert doc["input"]["f23"] == 4445333316613330
        wide = FlagVector.of((1, 2**40, 2**40), (2**40, 2**40, 2**60))
        assert maximize(wide).to_json()["input"]["f23"] == str(2**60)


class TestCandidateBound:
    def test_small_counts_always_ok(self):
        assert candidate_bound_ok(15, FlagVector.of((1, 1, 1), (1, 10**9, 1)))

    def test_exact_threshold(self):
        # sqrt(8 * 1 * 2) / 1 = 4, so 15 + 4 = 19 is excluded and 18 is fine
        fv = FlagVector.of((9, 9, 9), (1, 1, 2))
        assert candidate_bound_ok(18, fv)
        assert not candidate_bound_ok(19, fv)

    @settings(max_examples=300)
    @given(budgets())
    def test_every_run_within_bound(self, fv):
        res = maximize(fv)
        assert res.within_candidate_bound()


class TestProperties:
    @settings(max_examples=300)
    @given(budgets())
    def test_bounds_and_witness(self, fv):
        res = maximize(fv)
        assert_sound(fv, res)
        bounds = product_bounds(fv)
        assert res.m <= min(bounds[:3])
        assert res.m <= isqrt(fv.f12 * fv.f13 * fv.f23)

    @settings(max_examples=150)
    @given(budgets())
    def test_permutation_invariant(self, fv):
        m = maximize(fv).m
        for perm in ALL_PERMUTATIONS:
            assert maximize(perm.apply(fv)).m == m

    @settings(max_examples=150)
    @given(budgets(), st.integers(0, 5))
    def test_monotone(self, fv, which):
        b = list(fv.budgets)
        b[which] += 1
        bigger = FlagVector(*b)
        if not validate(bigger).ok:
            return
        assert maximize(bigger).m >= maximize(fv).m

    @settings(max_examples=200)
    @given(budgets(vmax=4, emax=8))
    def test_matches_oracle(self, fv):
        assert maximize(fv).m == brute_max(fv).m

    @settings(max_examples=100)
    @given(budgets())
    def test_canonical_input_same_result(self, fv):
        cfv, _ = canonical_relabel(fv)
        assert maximize(cfv).m == maximize(fv).m


class TestFeasibility:
    @pytest.mark.parametrize("f123, ok", [(54, True), (55, False), (0, True)])
    def test_vertex_edge_case(self, f123, ok):
        assert is_feasible(FlagVector.of((3, 5, 7), (13, 16, 18), f123=f123)).feasible is ok

    @pytest.mark.parametrize("f123, ok", [(9, True), (10, False)])
    def test_discreteness_case(self, f123, ok):
        v = is_feasible(FlagVector.of((5, 5, 5), (5, 5, 5), f123=f123))
        assert v.feasible is ok and v.m == 9

    def test_infeasible_edges(self):
        v = is_feasible(FlagVector.of((3, 5, 7), (23, 14, 18), f123=1))
        assert not v.feasible and v.reasons == ("f12 > f1*f2",)

    def test_zero_budget_forbids_facets(self):
        assert not is_feasible(FlagVector.of((3, 3, 0), (9, 0, 0), f123=1)).feasible

    def test_needs_proposal(self):
        with pytest.raises(ValueError):
            is_feasible(FlagVector.of((1, 1, 1), (1, 1, 1)))
