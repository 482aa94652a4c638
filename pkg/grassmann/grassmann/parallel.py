"""
Deterministic sharded map over a worker pool.

Items are cut into contiguous shards, each shard is handed to one call of
`function`, and the per-shard result lists are concatenated in shard order,
so the output does not depend on the number of workers.
"""
import itertools
import logging

import numpy as np
from joblib import Parallel, delayed

logger = logging.getLogger(__name__)


def shards(items, n_shards):
    """Split items into at most n_shards contiguous, non-empty runs."""
    items = list(items)
    if not items:
        return []
    bounds = np.linspace(0, len(items), min(n_shards, len(items)) + 1).astype(int)
    return [items[lo:hi] for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def sharded_map(function, items, parallelism=1, **kwargs):
    """
    function(shard, **kwargs) must return one result per item of the shard.

    :param parallelism: number of joblib workers; 1 runs in-process
    :return: list of results, in item order
    """
    items = list(items)
    if parallelism <= 1 or len(items) < 2:
        return list(function(items, **kwargs))
    parts = shards(items, 4 * parallelism)
    logger.debug('mapping %d items in %d shards on %d workers', len(items),
                 len(parts), parallelism)
    results = Parallel(n_jobs=parallelism)(
        delayed(function)(part, **kwargs) for part in parts)
    return list(itertools.chain.from_iterable(results))
