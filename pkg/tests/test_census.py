from itertools import islice

import pytest

from naive import naive_census
from zfcantor.analysis import is_strongly_extensive
from zfcantor.census import (
    CensusRow,
    GuardExceeded,
    census,
    digraph_from_counter,
    enumerate_digraphs,
    format_row,
)
from zfcantor.digraphs import Digraph

# frozen regression constants, established once by the brute-force oracle
FROZEN = {
    1: (2, 1, 1),
    2: (16, 5, 11),
    3: (512, 37, 388),
}


def counts(row: CensusRow):
    return (row.total, row.strongly_extensive, row.cantor)


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_digraphs(1)) == 2
        assert sum(1 for _ in enumerate_digraphs(2)) == 16
        assert sum(1 for _ in enumerate_digraphs(3)) == 512

    def test_counter_bit_layout(self):
        assert digraph_from_counter(2, 0).arrows == frozenset()
        assert digraph_from_counter(2, 1).arrows == {(1, 1)}
        assert digraph_from_counter(2, 2).arrows == {(1, 2)}
        assert digraph_from_counter(2, 4).arrows == {(2, 1)}
        assert digraph_from_counter(2, 15).arrows == {(1, 1), (1, 2), (2, 1), (2, 2)}

    def test_each_digraph_exactly_once(self):
        seen = {d.arrows for d in enumerate_digraphs(2)}
        assert len(seen) == 16

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            list(enumerate_digraphs(5))
        with pytest.raises(GuardExceeded):
            list(enumerate_digraphs(0))
        with pytest.raises(GuardExceeded):
            list(enumerate_digraphs(6, max_n=5))
        assert len(list(islice(enumerate_digraphs(5, max_n=5), 3))) == 3


class TestCensus:
    def test_one_vertex(self):
        assert counts(census(1)) == FROZEN[1]

    def test_frozen_regressions(self):
        assert counts(census(2)) == FROZEN[2]
        assert counts(census(3)) == FROZEN[3]

    def test_jobs_do_not_change_counts(self):
        assert counts(census(2, jobs=1)) == counts(census(2, jobs=3))

    def test_monotone_inequalities(self):
        for n in (1, 2, 3):
            row = census(n)
            assert row.strongly_extensive <= row.cantor <= row.total

    def test_naive_oracle_agrees(self):
        assert naive_census(1) == counts(census(1))
        assert naive_census(2) == counts(census(2))

    def test_bad_jobs(self):
        with pytest.raises(ValueError):
            census(1, jobs=0)

    def test_format_row(self):
        row = CensusRow(1, 2, 1, 1, 4.2)
        assert format_row(row) == "1\t2\t1\t1\t4"


class TestExamplesAreCounted:
    examples = (
        Digraph(1, frozenset()),
        Digraph(2, frozenset({(1, 1)})),
        Digraph(4, frozenset({(1, 1), (2, 1), (1, 3), (2, 4)})),
    )

    def test_examples_are_strongly_extensive(self):
        for d in self.examples:
            assert is_strongly_extensive(d)

    def test_small_examples_appear_in_the_enumeration(self):
        for d in self.examples[:2]:
            assert any(d.arrows == e.arrows and d.n == e.n for e in enumerate_digraphs(d.n))
