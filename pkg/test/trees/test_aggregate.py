#!/usr/bin/env python3

import pytest
from trees.aggregate import aggregate, AggregateCounts
from trees.tree_node import enumerate_trees
from utils.error import TreesError

def test_size_one():

    counts = aggregate(1)

    assert counts.trees == 1
    assert counts.leaves_total == 1
    assert counts.balanced_total == 1
    assert counts.balanced_root_trees == 1
    assert counts.eb == 0

def test_size_two():

    counts = aggregate(2)

    assert counts.leaves_total == 1
    assert counts.protected(1) == 1
    assert counts.balanced_total == 2
    assert counts.balanced_root_trees == 1

def test_size_three():

    counts = aggregate(3)

    assert counts.trees == 2
    assert counts.leaves_total == 3
    assert counts.protected(1) == 3
    assert counts.balanced_total == 6
    assert counts.eb == 4

def test_size_four():

    counts = aggregate(4)

    assert counts.trees == 4
    assert counts.balanced_total == 14
    assert counts.balanced_root_trees == 2
    assert counts.protected(1) == 9
    assert counts.balanced_rank(1) == 4
    assert counts.eb == 11

@pytest.mark.parametrize("n", [1, 5, 8])
def test_invariants(n):

    counts = aggregate(n, 6)

    assert counts.protected(0) == n * counts.trees
    assert all(counts.protected(k + 1) <= counts.protected(k) for k in range(6))
    assert counts.balanced_total == sum(counts.balanced_rank_total.values())
    assert counts.leaves_total == counts.balanced_rank(0)

def test_protection_tally_capped():

    counts = aggregate(6, 2)

    assert set(counts.protected_total.keys()) == {0, 1, 2}

def test_merge():

    first = AggregateCounts(5, 3)
    second = AggregateCounts(5, 3)
    for index, t in enumerate(enumerate_trees(5)):
        (first if index % 2 == 0 else second).add_tree(t)

    assert first.merge(second).to_dict() == aggregate(5, 3).to_dict()

def test_workers_partition():

    assert aggregate(7, 3, workers=2).to_dict() == aggregate(7, 3, workers=1).to_dict()

def test_size_guards():

    with pytest.raises(TreesError):
        aggregate(0)

    with pytest.raises(TreesError) as error:
        aggregate(40)

    assert error.value.text_key == "trees.size-too-large"
