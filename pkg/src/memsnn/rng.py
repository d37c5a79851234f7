"""Named, independent random streams derived from one master seed.

Every stochastic component (spike encoder, crossbar read noise, weight
init, shuffling) pulls from its own stream, so toggling one noise source
never shifts the draws seen by another.
"""

from __future__ import annotations

import zlib

import numpy as np


def _key(part: str | int) -> int:
    if isinstance(part, int):
        if part < 0:
            raise ValueError(f"stream key ints must be >= 0, got {part}")
        return part
    return zlib.crc32(part.encode("utf-8"))


def substream(master_seed: int, *parts: str | int) -> np.random.Generator:
    """Return the generator for the stream named by ``parts``.

    Same (master_seed, parts) always yields an identical generator;
    distinct parts yield statistically independent streams.
    """
    seq = np.random.SeedSequence(master_seed, spawn_key=tuple(_key(p) for p in parts))
    return np.random.default_rng(seq)
