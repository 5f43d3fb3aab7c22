"""Named random substreams derived from one top-level seed.

Every stage draws from ``substream(seed, "stage-name")`` so that adding or
reordering stages never perturbs the draws of another stage.  Substream
derivation hashes the stage name, which keeps the mapping stable across
platforms and releases.
"""

import hashlib

import numpy as np


def substream_seed(seed: int, name: str) -> int:
    """Derive a 64-bit child seed for ``name`` from the master ``seed``."""
    digest = hashlib.sha256(f"{seed:d}/{name}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def substream(seed: int, name: str) -> np.random.Generator:
    """Independent, reproducible generator for one named stage."""
    return np.random.Generator(np.random.PCG64(substream_seed(seed, name)))
