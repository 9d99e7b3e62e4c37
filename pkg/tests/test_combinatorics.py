from __future__ import annotations

import pytest
from sympy import bell as sympy_bell
from sympy.utilities.iterables import multiset_partitions
from sympy.utilities.iterables import partitions as sympy_partitions

from stratakit.combinatorics import bell, multisets_of_partitions, padded_partitions, partitions, set_partitions


def _sympy_partition_set(n):
    out = set()
    for p in sympy_partitions(n):
        out.add(tuple(sorted((k for k, c in p.items() for _ in range(c)), reverse=True)))
    return out


@pytest.mark.parametrize("n", range(0, 16))
def test_partitions_match_sympy(n):
    ours = partitions(n)
    assert len(ours) == len(set(ours))
    assert set(ours) == (_sympy_partition_set(n) if n else {()})
    assert list(ours) == sorted(ours, reverse=True)


def test_partitions_respect_bounds():
    for p in partitions(9, max_parts=3, max_part=4):
        assert len(p) <= 3 and p[0] <= 4 and sum(p) == 9
    assert partitions(3, max_parts=0) == ()
    assert partitions(0, max_parts=0) == ((),)


def test_padded_partitions():
    assert list(padded_partitions(2, 2)) == [(2, 0), (1, 1)]
    assert list(padded_partitions(0, 3)) == [(0, 0, 0)]
    assert list(padded_partitions(1, 0)) == []
    assert list(padded_partitions(0, 0)) == [()]


def test_multisets_of_partitions_small():
    got = list(multisets_of_partitions(2, 2))
    assert got == [((2,),), ((1, 1),), ((1,), (1,))]
    assert list(multisets_of_partitions(0, 2)) == [()]


@pytest.mark.parametrize("total,max_parts", [(3, 1), (4, 2), (5, 5), (6, 3)])
def test_multisets_of_partitions_are_distinct_and_complete(total, max_parts):
    got = list(multisets_of_partitions(total, max_parts))
    assert len(got) == len(set(got))
    for ms in got:
        assert sum(map(sum, ms)) == total
        assert all(len(p) <= max_parts for p in ms)
        assert list(ms) == sorted(ms, reverse=True)
    # brute force: multisets of partitions = partitions of total, each part then split
    expected = set()
    for outer in partitions(total):
        stack = [()]
        for size in outer:
            stack = [s + (p,) for s in stack for p in partitions(size, max_parts)]
        expected.update(tuple(sorted(s, reverse=True)) for s in stack)
    assert set(got) == expected


@pytest.mark.parametrize("n", range(0, 8))
def test_set_partitions_count_and_order(n):
    items = list("abcdefgh"[:n])
    got = list(set_partitions(items))
    assert len(got) == bell(n) == int(sympy_bell(n))
    canon = {tuple(sorted(tuple(sorted(b)) for b in p)) for p in got}
    assert len(canon) == len(got)
    if n:
        assert got[0] == (tuple(items),)
        assert got[-1] == tuple((x,) for x in items)
        expected = {tuple(sorted(tuple(sorted(b)) for b in p)) for p in multiset_partitions(items)}
        assert canon == expected


def test_set_partitions_rgs_order_for_three():
    assert list(set_partitions([1, 2, 3])) == [
        ((1, 2, 3),),
        ((1, 2), (3,)),
        ((1, 3), (2,)),
        ((1,), (2, 3)),
        ((1,), (2,), (3,)),
    ]
