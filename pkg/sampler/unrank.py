#!/usr/bin/env python3
"""
Bijection between [0, t_n) and the trees of size n, in the order trees.tree_node.enumerate_trees yields them
"""

import logging
from sampler.count_table import CountTable, shared_table
from trees.tree_node import TreeNode, LEAF, unary, binary
from trees.vertex_stats import preorder
from utils.error import SamplerError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

def unrank(n:int, index:int, table:CountTable = None) -> TreeNode:
    """ The index-th tree of size n """

    if table is None:
        table = shared_table()

    total = table.count(n)
    if not 0 <= index < total:
        logger.error(f"Index {index} out of range for size {n}")
        raise SamplerError("sampler.index-out-of-range", {"index":index, "count":total, "n":n})

    # Decode top-down into the arity of each vertex in pre-order
    arities = []
    pending = [(n, index)]
    while pending:
        m, i = pending.pop()
        if m == 1:
            arities.append(0)
            continue
        unary_count = table.counts[m - 1]
        if i < unary_count:
            arities.append(1)
            pending.append((m - 1, i))
            continue
        left_size, i = table.split(m, i - unary_count)
        right_size = m - 1 - left_size
        left_index, right_index = divmod(i, table.counts[right_size])
        arities.append(2)
        # Right pushed first so the left subtree is decoded, and so listed, first
        pending.append((right_size, right_index))
        pending.append((left_size, left_index))

    # Build bottom-up, in reverse pre-order every subtree is complete before its parent
    built = []
    for arity in reversed(arities):
        if arity == 0:
            built.append(LEAF)
        elif arity == 1:
            built.append(unary(built.pop()))
        else:
            left = built.pop()
            right = built.pop()
            built.append(binary(left, right))

    return built[0]

def rank(t:TreeNode, table:CountTable = None) -> int:
    """ The canonical index of t among trees of its size, the inverse of unrank """

    if table is None:
        table = shared_table()

    nodes, children = preorder(t)
    sizes = [1] * len(nodes)
    indices = [0] * len(nodes)
    table.extend_to(len(nodes))

    for position in range(len(nodes) - 1, -1, -1):
        kids = children[position]
        if len(kids) == 0:
            continue
        m = 1 + sum(sizes[kid] for kid in kids)
        sizes[position] = m
        if len(kids) == 1:
            indices[position] = indices[kids[0]]
        else:
            left, right = kids
            indices[position] = (table.counts[m - 1]
                                 + table.split_offset(m, sizes[left])
                                 + indices[left] * table.counts[sizes[right]]
                                 + indices[right])

    return indices[0]
