#!/usr/bin/env python3
"""
Exact counts of Motzkin trees by size, from the convolution form of M = x + xM + xM^2
"""

import logging
from bisect import bisect_right
from utils.error import SamplerError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

DEFAULT_PREFIX_CACHE_LIMIT = 512

class CountTable:
    """ counts[n] = t_n, the number of trees with n vertices (counts[0] is an unused 0).

    The table only grows; once a size has been counted its entry never changes.
    """

    def __init__(self, prefix_cache_limit:int = DEFAULT_PREFIX_CACHE_LIMIT):

        self.counts = [0, 1]
        self.prefix_cache_limit = prefix_cache_limit
        self._split_prefixes = {}

    def extend_to(self, n:int):

        for m in range(len(self.counts), n + 1):
            total = self.counts[m - 1]
            for left_size in range(1, m - 1):
                total += self.counts[left_size] * self.counts[m - 1 - left_size]
            self.counts.append(total)

    def count(self, n:int) -> int:

        if n < 1:
            logger.error(f"Tree size {n} is less than 1")
            raise SamplerError("trees.size-too-small", {"n":n})
        self.extend_to(n)
        return self.counts[n]

    def split_prefix(self, n:int) -> list:
        """ prefix[j] = number of binary-root trees of size n whose left subtree has at most j vertices, j = 0 ... n-2 """

        if (prefix := self._split_prefixes.get(n)) is not None:
            return prefix

        self.extend_to(n)
        prefix = [0]
        for left_size in range(1, n - 1):
            prefix.append(prefix[-1] + self.counts[left_size] * self.counts[n - 1 - left_size])

        if n <= self.prefix_cache_limit:
            self._split_prefixes[n] = prefix
        return prefix

    def split(self, n:int, index:int) -> tuple:
        """ For the index-th binary-root tree of size n: (left size, index among trees with that left size) """

        if n <= self.prefix_cache_limit:
            prefix = self.split_prefix(n)
            left_size = bisect_right(prefix, index)
            return left_size, index - prefix[left_size - 1]

        # Large sizes scan instead of holding an O(n) prefix per size
        self.extend_to(n)
        for left_size in range(1, n - 1):
            block = self.counts[left_size] * self.counts[n - 1 - left_size]
            if index < block:
                return left_size, index
            index -= block
        raise SamplerError("sampler.index-out-of-range", {"index":index, "count":self.count(n), "n":n})

    def split_offset(self, n:int, left_size:int) -> int:
        """ Number of binary-root trees of size n whose left subtree is smaller than left_size """

        if n <= self.prefix_cache_limit:
            return self.split_prefix(n)[left_size - 1]
        self.extend_to(n)
        return sum(self.counts[size] * self.counts[n - 1 - size] for size in range(1, left_size))

_table = None

def shared_table() -> CountTable:
    """ The process-wide table, sized by configuration on first use """

    global _table
    if _table is None:
        from sampler import sampler_config
        _table = CountTable(sampler_config.config().get("prefix-cache-limit", DEFAULT_PREFIX_CACHE_LIMIT))
    return _table

def motzkin_count(n:int) -> int:
    """ t_n, the number of Motzkin trees with n vertices """
    return shared_table().count(n)
