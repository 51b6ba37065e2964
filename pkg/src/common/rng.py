"""Reproducible random streams for replicas and grid points."""

from typing import Union

import numpy as np

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


def replicate_seed(master_seed: int, *key: int) -> np.random.SeedSequence:
    """
    Derive an independent stream for one replica.

    The stream depends only on the master seed and the key path (e.g.
    grid index, replicate index), never on scheduling order.

    Args:
        master_seed: Experiment-wide seed
        *key: Non-negative integers identifying the replica

    Returns:
        SeedSequence for this replica
    """
    return np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(int(k) for k in key))


def make_rng(seed: SeedLike) -> np.random.Generator:
    """Return a Generator for an int, SeedSequence, Generator or None."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def split_seed(seed: SeedLike, count: int) -> list[np.random.SeedSequence]:
    """
    Split a seed into `count` independent child sequences.

    Children are derived from the parent's entropy and spawn key, so splitting
    the same seed twice yields the same children. A Generator is consumed once
    to derive the parent entropy.
    """
    if isinstance(seed, np.random.SeedSequence):
        parent = seed
    elif isinstance(seed, np.random.Generator):
        parent = np.random.SeedSequence(int(seed.integers(2**63)))
    else:
        parent = np.random.SeedSequence(seed)
    return [
        np.random.SeedSequence(entropy=parent.entropy, spawn_key=(*parent.spawn_key, i))
        for i in range(count)
    ]
