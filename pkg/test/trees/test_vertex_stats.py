#!/usr/bin/env python3

from trees.tree_node import LEAF, unary, binary, enumerate_trees
from trees.vertex_stats import vertex_stats, VertexStats, preorder

def test_leaf():

    assert vertex_stats(LEAF) == [VertexStats(0, 0, True)]

def test_path_of_three():

    assert vertex_stats(unary(unary(LEAF))) == [
        VertexStats(2, 2, True),
        VertexStats(1, 1, True),
        VertexStats(0, 0, True),
    ]

def test_unbalanced_root():

    stats = vertex_stats(binary(LEAF, unary(LEAF)))

    assert stats[0] == VertexStats(1, 2, False)
    assert stats[1] == VertexStats(0, 0, True)
    assert stats[2] == VertexStats(1, 1, True)
    assert stats[3] == VertexStats(0, 0, True)

def test_preorder_positions():

    nodes, children = preorder(binary(unary(LEAF), LEAF))

    assert len(nodes) == 4
    assert children == [[1, 3], [2], [], []]

def test_protection():

    root = vertex_stats(unary(binary(LEAF, LEAF)))[0]

    assert root.is_protected(2)
    assert not root.is_protected(3)

def test_rank_at_most_max_depth():

    for n in range(1, 10):
        for t in enumerate_trees(n):
            for vertex in vertex_stats(t):
                assert vertex.rank <= vertex.max_depth
                assert vertex.balanced == (vertex.rank == vertex.max_depth)

def test_deep_chain():

    t = LEAF
    for _ in range(3000):
        t = unary(t)

    stats = vertex_stats(t)

    assert stats[0] == VertexStats(3000, 3000, True)
    assert len(stats) == 3001
