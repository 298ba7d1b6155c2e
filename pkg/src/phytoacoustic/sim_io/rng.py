"""Named, counter-based random streams.

Every stochastic draw in a run comes from a stream identified by
``(base_seed, name)``.  The stream is a numpy ``Generator`` over the Philox
4x64 counter-based bit generator whose key is derived from a ``SeedSequence``
with ``entropy=base_seed`` and ``spawn_key=(crc32(name),)``.  Streams are
therefore independent of each other and of the order in which they are
requested; golden tests rely on this exact recipe.
"""

from __future__ import annotations

import zlib

import numpy as np


def stream_key(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def rng_stream(base_seed: int, name: str) -> np.random.Generator:
    if base_seed < 0:
        raise ValueError("seeds must be non-negative")
    seq = np.random.SeedSequence(entropy=int(base_seed), spawn_key=(stream_key(name),))
    return np.random.Generator(np.random.Philox(seq))
