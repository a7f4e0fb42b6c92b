#!/usr/bin/env python3
"""
Per-vertex rank, longest leaf distance and balance
"""

from typing import NamedTuple
from trees.tree_node import TreeNode

class VertexStats(NamedTuple):

    rank:int
    max_depth:int
    balanced:bool

    def is_protected(self, k:int) -> bool:
        """ k-protected means every leaf below is at distance at least k """
        return self.rank >= k

def preorder(t:TreeNode) -> tuple:
    """ The vertices in pre-order, with the pre-order positions of each vertex's children """

    nodes = []
    children = []
    stack = [(t, None)]
    while stack:
        node, parent = stack.pop()
        position = len(nodes)
        nodes.append(node)
        children.append([])
        if parent is not None:
            children[parent].append(position)
        # Reversed so the leftmost child is popped, and so numbered, first
        stack.extend((child, position) for child in reversed(node.children))
    return nodes, children

def vertex_stats(t:TreeNode) -> list:
    """ A VertexStats per vertex, in pre-order (root first, then each child's subtree left to right) """

    nodes, children = preorder(t)
    ranks = [0] * len(nodes)
    depths = [0] * len(nodes)

    # Reverse pre-order visits every child before its parent
    for position in range(len(nodes) - 1, -1, -1):
        if children[position]:
            ranks[position] = 1 + min(ranks[child] for child in children[position])
            depths[position] = 1 + max(depths[child] for child in children[position])

    return [VertexStats(rank, depth, rank == depth) for rank, depth in zip(ranks, depths)]
