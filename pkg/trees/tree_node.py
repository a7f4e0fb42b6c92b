#!/usr/bin/env python3
"""
Motzkin trees as immutable values, exhaustive enumeration and a bracket text form
"""

import logging
from typing import Iterator, NamedTuple
from utils.error import TreesError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

class TreeNode(NamedTuple):
    """ A vertex and, through its children, the subtree below it.  Children are ordered, at most 2. """

    children:tuple = ()

    def is_leaf(self) -> bool:
        return len(self.children) == 0

    def __repr__(self):
        return f"TreeNode({to_bracket(self)})"

LEAF = TreeNode(())

def unary(child:TreeNode) -> TreeNode:
    return TreeNode((child,))

def binary(left:TreeNode, right:TreeNode) -> TreeNode:
    return TreeNode((left, right))

def size(t:TreeNode) -> int:
    """ Number of vertices """

    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(node.children)
    return count

def to_bracket(t:TreeNode) -> str:
    """ Each vertex is '(' followed by its children then ')', so a leaf is '()' and a cherry '(()())' """

    out = []
    # Entries are either a node to open or None to close the most recently opened node
    stack = [t]
    while stack:
        node = stack.pop()
        if node is None:
            out.append(")")
            continue
        out.append("(")
        stack.append(None)
        stack.extend(reversed(node.children))
    return "".join(out)

def from_bracket(text:str) -> TreeNode:

    text = text.strip()
    open_children = []
    root = None
    for position, char in enumerate(text):
        if char == "(":
            if root is not None:
                raise TreesError("trees.bad-bracket", {"text":text})
            open_children.append([])
        elif char == ")":
            if len(open_children) == 0:
                raise TreesError("trees.bad-bracket", {"text":text})
            children = open_children.pop()
            if len(children) > 2:
                logger.error(f"Vertex closed at position {position} has {len(children)} children")
                raise TreesError("trees.bad-arity", {"arity":len(children)})
            node = TreeNode(tuple(children))
            if open_children:
                open_children[-1].append(node)
            else:
                root = node
        else:
            raise TreesError("trees.bad-bracket", {"text":text})

    if root is None or open_children:
        raise TreesError("trees.bad-bracket", {"text":text})
    return root

def _check_size(n:int):

    if n < 1:
        logger.error(f"Tree size {n} is less than 1")
        raise TreesError("trees.size-too-small", {"n":n})

def _trees_below(n:int) -> list:
    """ by_size[m] lists every tree of size m < n in canonical order.  Subtrees are shared, not copied. """

    by_size = [[], [LEAF]]
    for m in range(2, n):
        trees = [unary(child) for child in by_size[m - 1]]
        for left_size in range(1, m - 1):
            right_trees = by_size[m - 1 - left_size]
            trees.extend(binary(left, right) for left in by_size[left_size] for right in right_trees)
        by_size.append(trees)
    return by_size

def enumerate_trees(n:int) -> Iterator[TreeNode]:
    """ Every Motzkin tree with n vertices, exactly once each.

    Canonical order: a leaf (n = 1), then unary roots in the order of their child, then binary roots by
    left subtree size ascending, then left subtree, then right subtree.
    """

    _check_size(n)

    if n == 1:
        yield LEAF
        return

    by_size = _trees_below(n)
    logger.debug(f"Enumerating trees of size {n}")

    for child in by_size[n - 1]:
        yield unary(child)
    for left_size in range(1, n - 1):
        for left in by_size[left_size]:
            for right in by_size[n - 1 - left_size]:
                yield binary(left, right)
