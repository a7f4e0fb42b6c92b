#!/usr/bin/env python3
"""
Uniform random trees and Monte Carlo estimates of vertex proportions
"""

import logging
import math
import random
import re
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator
from sampler.count_table import motzkin_count
from sampler.unrank import unrank
from sampler import sampler_config
from trees.tree_node import TreeNode
from trees.vertex_stats import vertex_stats, VertexStats
from utils.error import SamplerError

import utils.logging
logger = logging.getLogger(utils.logging.getLoggerName(__name__))

STATISTIC_LEAF = "leaf"
STATISTIC_BALANCED = "balanced"
STATISTIC_PROTECTED = "protected"
STATISTIC_BALANCED_RANK = "balanced-rank"

VALID_STATISTICS = [STATISTIC_LEAF, STATISTIC_BALANCED, f"{STATISTIC_PROTECTED}:k", f"k-{STATISTIC_PROTECTED}", f"{STATISTIC_BALANCED_RANK}:k"]

class Statistic:
    """ A vertex property whose proportion over all vertices of all trees of a size is estimated """

    def __init__(self, kind:str, k:int = None):
        self.kind = kind
        self.k = k

    @classmethod
    def parse(cls, text:str) -> "Statistic":
        """ Accepts 'leaf', 'balanced', 'protected:K', 'K-protected' and 'balanced-rank:K' """

        text = text.strip().lower()
        if text in [STATISTIC_LEAF, STATISTIC_BALANCED]:
            return cls(text)
        if (match := re.fullmatch(r"(protected|balanced-rank):(\d+)", text)) is not None:
            return cls(match.group(1), int(match.group(2)))
        if (match := re.fullmatch(r"(\d+)-protected", text)) is not None:
            return cls(STATISTIC_PROTECTED, int(match.group(1)))

        logger.error(f"Unknown statistic '{text}'")
        raise SamplerError("sampler.unknown-statistic", {"statistic":text, "valid":VALID_STATISTICS})

    def holds(self, vertex:VertexStats) -> bool:

        if self.kind == STATISTIC_LEAF:
            return vertex.rank == 0
        if self.kind == STATISTIC_BALANCED:
            return vertex.balanced
        if self.kind == STATISTIC_PROTECTED:
            return vertex.is_protected(self.k)
        return vertex.balanced and vertex.rank == self.k

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}:{self.k}"

    def __eq__(self, other):
        if not isinstance(other, Statistic):
            return NotImplemented
        return (self.kind, self.k) == (other.kind, other.k)

    def __hash__(self):
        return hash((self.kind, self.k))

class SampleReport:

    def __init__(self, n:int, statistic:Statistic, samples:int, hits:int, seed:int, workers:int = 1):

        self.n = n
        self.statistic = statistic
        self.samples = samples
        self.hits = hits
        self.seed = seed
        self.workers = workers

    @property
    def proportion(self) -> Fraction:
        """ The estimate as the exact fraction of sampled vertices with the property """
        return Fraction(self.hits, self.samples)

    @property
    def estimate(self) -> float:
        return self.hits / self.samples

    @property
    def standard_error(self) -> float:
        estimate = self.estimate
        return math.sqrt(estimate * (1 - estimate) / self.samples)

    def within(self, reference, standard_errors:float = 3) -> bool:
        """ True when 'reference' is within the given number of standard errors of the estimate """
        return abs(self.estimate - float(reference)) <= standard_errors * self.standard_error

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "statistic": str(self.statistic),
            "samples": self.samples,
            "hits": self.hits,
            "estimate": self.estimate,
            "standard_error": self.standard_error,
            "seed": self.seed,
            "workers": self.workers,
        }

def worker_generator(seed:int, worker:int = 0) -> random.Random:
    """ Independent, reproducible stream per (seed, worker) """
    return random.Random(f"{seed}/{worker}")

def sample_uniform(n:int, seed:int, count:int, worker:int = 0) -> Iterator[TreeNode]:
    """ 'count' trees drawn uniformly from the trees of size n """

    total = motzkin_count(n)
    generator = worker_generator(seed, worker)
    for _ in range(count):
        yield unrank(n, generator.randrange(total))

def _count_hits(n:int, statistic:Statistic, samples:int, seed:int, worker:int) -> int:
    """ Uniform tree, then uniform vertex of it, 'samples' times """

    total = motzkin_count(n)
    generator = worker_generator(seed, worker)
    hits = 0
    for _ in range(samples):
        t = unrank(n, generator.randrange(total))
        vertex = vertex_stats(t)[generator.randrange(n)]
        if statistic.holds(vertex):
            hits += 1
    return hits

def monte_carlo_estimate(n:int, statistic, samples:int, seed:int, workers:int = None) -> SampleReport:
    """ Estimates the proportion of vertices, over all trees of size n, with the statistic's property.

    Every tree of size n has n vertices, so drawing a uniform tree then a uniform vertex is a uniform draw over
    all vertices of all trees.  The result depends on (n, statistic, samples, seed, workers) only.
    """

    if isinstance(statistic, str):
        statistic = Statistic.parse(statistic)
    if samples < 1:
        logger.error(f"Number of samples {samples} is less than 1")
        raise SamplerError("sampler.bad-samples", {"samples":samples})
    if workers is None:
        workers = sampler_config.config().get("workers", 1)
    workers = max(1, min(workers, samples))

    # Fails fast on a bad size before any worker starts
    motzkin_count(n)

    logger.debug(f"Sampling {samples} vertices of size {n} trees for '{statistic}', seed {seed}, {workers} worker(s)")

    shares = [samples // workers + (1 if worker < samples % workers else 0) for worker in range(workers)]
    if workers == 1:
        hits = _count_hits(n, statistic, samples, seed, 0)
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_count_hits, n, statistic, share, seed, worker) for worker, share in enumerate(shares)]
            hits = sum(future.result() for future in futures)

    return SampleReport(n, statistic, samples, hits, seed, workers)
