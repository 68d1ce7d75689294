"""
Counter-based uniform streams.

Every trial owns a fixed slice of a Philox4x64-10 stream keyed by the run
seed: trial t reads the counter blocks following t * blocks, where
blocks = ceil(width / 4). The uniforms of a trial are therefore a pure
function of (seed, t, width), and a run split into any number of shards
draws exactly the numbers the unsplit run draws.
"""
import logging
import math
import random

import numpy as np

from discern.core.exceptions import InvalidParameters

logger = logging.getLogger(__name__)

WORDS_PER_BLOCK = 4
MAX_SEED = 2 ** 63 - 1


def check_seed(seed):
    if int(seed) != seed or not 0 <= seed <= MAX_SEED:
        raise InvalidParameters(f'Seed must be an integer in [0, {MAX_SEED}], got {seed!r}')
    return int(seed)


def fresh_seed():
    return random.randint(0, MAX_SEED)


def resolve_seed(seed=None, default=None):
    """An explicit seed wins, then the configured default, then a fresh one."""
    if seed is not None:
        return check_seed(seed)
    if default is not None:
        return check_seed(default)
    seed = fresh_seed()
    logger.info(f'No seed given, using {seed}')
    return seed


def uniforms(seed, start, count, width):
    """Uniform doubles in [0, 1) of shape (count, width) for trials start..start+count-1."""
    blocks = math.ceil(width / WORDS_PER_BLOCK)
    bit_generator = np.random.Philox(key=check_seed(seed), counter=start * blocks)
    raw = bit_generator.random_raw(count * blocks * WORDS_PER_BLOCK)
    values = (raw >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
    return values.reshape(count, blocks * WORDS_PER_BLOCK)[:, :width]


def shard_ranges(count, shards):
    """Contiguous (start, count) ranges covering range(count)."""
    if int(shards) != shards or shards < 1:
        raise InvalidParameters(f'Shard count must be a positive integer, got {shards!r}')
    edges = np.linspace(0, count, int(shards) + 1).round().astype(int)
    return [(int(lo), int(hi - lo)) for lo, hi in zip(edges, edges[1:]) if hi > lo]


def pick(cumulative, u):
    """Index of the bucket of u in a cumulative distribution, vectorized over u."""
    cumulative = np.asarray(cumulative, dtype=float)
    cumulative = cumulative / cumulative[..., -1:]
    return np.minimum(np.searchsorted(cumulative, u, side='right'), cumulative.shape[-1] - 1)
