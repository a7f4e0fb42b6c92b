#!/usr/bin/env python3

import pytest
from trees.tree_node import TreeNode, LEAF, unary, binary, enumerate_trees, size, to_bracket, from_bracket
from trees.vertex_stats import preorder
from genfun.motzkin import motzkin_series
from utils.error import TreesError, ErrorCategory

PATH_3 = unary(unary(LEAF))
CHERRY = binary(LEAF, LEAF)

def test_enumerate_single_leaf():

    assert list(enumerate_trees(1)) == [LEAF]

def test_enumerate_order_size_3():

    assert list(enumerate_trees(3)) == [PATH_3, CHERRY]

def test_enumerate_order_size_4():

    assert list(enumerate_trees(4)) == [
        unary(PATH_3),
        unary(CHERRY),
        binary(LEAF, unary(LEAF)),
        binary(unary(LEAF), LEAF),
    ]

@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (4, 4), (6, 21), (8, 127)])
def test_enumerate_counts(n, count):

    assert sum(1 for _ in enumerate_trees(n)) == count

def test_enumerate_counts_match_series():

    M = motzkin_series(14)
    for n in range(1, 15):
        assert sum(1 for _ in enumerate_trees(n)) == M[n]

def test_enumerate_distinct_and_sized():

    trees = list(enumerate_trees(7))

    assert len(set(trees)) == len(trees)
    assert all(size(t) == 7 for t in trees)
    assert all(len(node.children) <= 2 for t in trees for node in preorder(t)[0])

def test_enumerate_size_zero():

    with pytest.raises(TreesError) as error:
        list(enumerate_trees(0))

    assert error.value.category == ErrorCategory.USAGE

@pytest.mark.parametrize("t, text", [
    (LEAF, "()"),
    (PATH_3, "((()))"),
    (CHERRY, "(()())"),
    (binary(LEAF, unary(LEAF)), "(()(()))"),
])
def test_bracket(t, text):

    assert to_bracket(t) == text
    assert from_bracket(text) == t

def test_bracket_deep_chain():

    t = LEAF
    for _ in range(5000):
        t = unary(t)

    text = to_bracket(t)

    assert size(t) == 5001
    assert text == "(" * 5001 + ")" * 5001
    assert size(from_bracket(text)) == 5001

@pytest.mark.parametrize("text", ["", "(", "())", "()()", "(x)", ")("])
def test_bad_bracket(text):

    with pytest.raises(TreesError):
        from_bracket(text)

def test_bad_arity():

    with pytest.raises(TreesError) as error:
        from_bracket("(()()())")

    assert error.value.text_key == "trees.bad-arity"
