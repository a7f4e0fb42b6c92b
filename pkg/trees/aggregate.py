#!/usr/bin/env python3
"""
Exact per-size totals of vertex statistics over every Motzkin tree of a size
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from trees.tree_node import TreeNode, enumerate_trees
from trees.vertex_stats import vertex_stats
from trees import trees_config
from utils.error import TreesError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

class AggregateCounts:
    """ Totals over all trees of size n.

    protected_total[k] counts k-protected vertices for 0 <= k <= k_max, balanced_rank_total[k] counts balanced
    vertices of rank k for every rank that occurs, eb sums the rank of every balanced vertex.
    """

    def __init__(self, n:int, k_max:int):

        self.n = n
        self.k_max = k_max
        self.trees = 0
        self.leaves_total = 0
        self.protected_total = {k:0 for k in range(k_max + 1)}
        self.balanced_rank_total = {}
        self.balanced_total = 0
        self.balanced_root_trees = 0
        self.eb = 0

    def add_tree(self, t:TreeNode):

        stats = vertex_stats(t)
        self.trees += 1
        if stats[0].balanced:
            self.balanced_root_trees += 1

        for vertex in stats:
            if vertex.rank == 0:
                self.leaves_total += 1
            for k in range(min(vertex.rank, self.k_max) + 1):
                self.protected_total[k] += 1
            if vertex.balanced:
                self.balanced_rank_total[vertex.rank] = self.balanced_rank_total.get(vertex.rank, 0) + 1
                self.balanced_total += 1
                self.eb += vertex.rank

    def merge(self, other:"AggregateCounts") -> "AggregateCounts":
        """ Adds the totals of 'other', a tally over a disjoint set of trees of the same size """

        self.trees += other.trees
        self.leaves_total += other.leaves_total
        for k, count in other.protected_total.items():
            self.protected_total[k] = self.protected_total.get(k, 0) + count
        for k, count in other.balanced_rank_total.items():
            self.balanced_rank_total[k] = self.balanced_rank_total.get(k, 0) + count
        self.balanced_total += other.balanced_total
        self.balanced_root_trees += other.balanced_root_trees
        self.eb += other.eb
        return self

    def protected(self, k:int) -> int:
        return self.protected_total.get(k, 0)

    def balanced_rank(self, k:int) -> int:
        return self.balanced_rank_total.get(k, 0)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trees": self.trees,
            "leaves_total": self.leaves_total,
            "protected_total": dict(self.protected_total),
            "balanced_rank_total": dict(sorted(self.balanced_rank_total.items())),
            "balanced_total": self.balanced_total,
            "balanced_root_trees": self.balanced_root_trees,
            "eb": self.eb,
        }

def _tally_index_range(n:int, k_max:int, start:int, stop:int) -> AggregateCounts:
    """ Tally of the trees with canonical index in [start, stop), run in a worker process """

    from sampler.unrank import unrank

    counts = AggregateCounts(n, k_max)
    for index in range(start, stop):
        counts.add_tree(unrank(n, index))
    return counts

def aggregate(n:int, k_max:int = None, workers:int = None) -> AggregateCounts:

    tree_config = trees_config.config()
    if k_max is None:
        k_max = tree_config.get("default-k-max", 8)
    if workers is None:
        workers = tree_config.get("workers", 1)

    if n < 1:
        logger.error(f"Tree size {n} is less than 1")
        raise TreesError("trees.size-too-small", {"n":n})
    if n > (max_size := tree_config.get("max-enumeration-size", 16)):
        logger.error(f"Tree size {n} is above the enumeration limit {max_size}")
        raise TreesError("trees.size-too-large", {"n":n, "limit":max_size})

    logger.debug(f"Aggregating trees of size {n}, k_max = {k_max}, workers = {workers}")

    if workers <= 1:
        counts = AggregateCounts(n, k_max)
        for t in enumerate_trees(n):
            counts.add_tree(t)
        return counts

    from sampler.count_table import motzkin_count

    total = motzkin_count(n)
    chunk = -(-total // workers)
    ranges = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]

    counts = AggregateCounts(n, k_max)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_tally_index_range, n, k_max, start, stop) for start, stop in ranges]
        for future in futures:
            counts.merge(future.result())
    return counts
