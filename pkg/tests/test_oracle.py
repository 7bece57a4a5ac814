from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triflag.complexes import facet_count, is_color_shifted, within_budget
from triflag.flagvec import FlagVector
from triflag.oracle import (
    CapExceeded,
    InfeasibleEdges,
    brute_max,
    count_partitions,
    enumerate_partitions,
    facet_count_rows,
)


def rows_of(weight, r, c):
    return [bp.rows for bp in enumerate_partitions(weight, r, c)]


class TestPartitions:
    def test_hand_enumerated(self):
        assert rows_of(5, 3, 2) == [(2, 2, 1)]
        assert rows_of(4, 2, 2) == [(2, 2)]
        assert rows_of(0, 4, 4) == [()]

    def test_out_of_range(self):
        assert rows_of(7, 2, 3) == []
        assert rows_of(-1, 2, 3) == []

    def test_decreasing_lex_order(self):
        out = rows_of(6, 4, 4)
        assert out == sorted(out, reverse=True)
        assert len(out) == len(set(out))

    @given(st.integers(0, 20), st.integers(0, 6), st.integers(0, 6))
    def test_count_matches_enumeration(self, w, r, c):
        out = rows_of(w, r, c)
        assert count_partitions(w, r, c) == len(out)
        for rows in out:
            assert sum(rows) == w and len(rows) <= r
            assert all(c >= x >= y for x, y in zip(rows, rows[1:] + (0,)))

    def test_count_symmetric(self):
        assert count_partitions(30, 8, 9) == count_partitions(30, 9, 8) == count_partitions(72 - 30, 8, 9)

    def test_count_refuses_enormous_boxes(self):
        with pytest.raises(CapExceeded):
            count_partitions(5 * 10**6, 10**4, 10**4)


class TestBruteMax:
    @pytest.mark.parametrize(
        "v, e, m",
        [((5, 5, 5), (5, 5, 5), 9), ((1, 1, 1), (1, 1, 1), 1), ((2, 2, 2), (4, 4, 4), 8)],
    )
    def test_known_maxima(self, v, e, m):
        res = brute_max(FlagVector.of(v, e))
        assert res.m == m
        assert facet_count(res.witness) == m

    def test_infeasible(self):
        with pytest.raises(InfeasibleEdges):
            brute_max(FlagVector.of((3, 5, 7), (23, 14, 18)))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_max(FlagVector.of((8, 8, 8), (32, 32, 32)), cap=1000)

    def test_workers_agree(self):
        fv = FlagVector.of((4, 4, 4), (7, 6, 8))
        one = brute_max(fv)
        two = brute_max(fv, workers=2)
        assert (one.m, one.rows) == (two.m, two.rows)

    def test_tie_break_is_greatest_rows(self):
        res = brute_max(FlagVector.of((2, 2, 2), (2, 2, 2)))
        assert res.m == 2
        assert res.rows == ((2,), (2,), (2,))

    @settings(max_examples=40)
    @given(st.tuples(*[st.integers(1, 3)] * 3), st.data())
    def test_below_weight_same_answer(self, v, data):
        e = [data.draw(st.integers(0, min(v[a] * v[b], 5))) for a, b in ((0, 1), (0, 2), (1, 2))]
        fv = FlagVector.of(v, e)
        assert brute_max(fv, below_weight=True).m == brute_max(fv).m

    @settings(max_examples=60)
    @given(st.tuples(*[st.integers(1, 4)] * 3), st.data())
    def test_witness_sound(self, v, data):
        e = [data.draw(st.integers(0, min(v[a] * v[b], 7))) for a, b in ((0, 1), (0, 2), (1, 2))]
        fv = FlagVector.of(v, e)
        res = brute_max(fv)
        assert is_color_shifted(res.witness)
        assert within_budget(res.witness, fv)
        assert res.witness.edge_counts() == fv.edges
        assert facet_count_rows(*res.rows) == res.m == facet_count(res.witness)


def test_monotone_in_edges_with_slack_vertices():
    f = (3, 3, 3)
    grid = {}
    for a in range(1, 7):
        for b in range(1, 7):
            for c in range(1, 7):
                grid[a, b, c] = brute_max(FlagVector.of(f, (a, b, c))).m
    for (a, b, c), m in grid.items():
        for nxt in ((a + 1, b, c), (a, b + 1, c), (a, b, c + 1)):
            if nxt in grid:
                assert grid[nxt] >= m


def test_partition_counts_small_table():
    # partitions of n into at most 3 parts of size at most 3
    assert [count_partitions(n, 3, 3) for n in range(10)] == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]
    assert Counter(sum(r) for w in range(10) for r in rows_of(w, 3, 3))[4] == 3
