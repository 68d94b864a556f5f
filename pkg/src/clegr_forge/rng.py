"""Deterministic, label-addressed random streams.

All randomness in the package flows through `seeded_rng`: a (seed, label)
pair names one independent PCG64 stream, derived by hashing the label into
the seed material. Adding a new pipeline stage with a fresh label therefore
never perturbs the draws of existing stages.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _label_words(label: str) -> list[int]:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]


def seeded_rng(seed: int, stream_label: str) -> np.random.Generator:
    """Return the random stream addressed by (seed, stream_label).

    Identical arguments always yield an identical draw sequence; distinct
    labels (or seeds) yield independent streams.
    """
    entropy = [int(seed)] + _label_words(stream_label)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def derive_seed(seed: int, label: str) -> int:
    """Derive a child seed (u64) from a parent seed and a label."""
    ss = np.random.SeedSequence([int(seed)] + _label_words(label))
    return int(ss.generate_state(1, np.uint64)[0])


class StreamFactory:
    """Hands out labeled child streams of one root seed."""

    def __init__(self, seed: int):
        self.seed = int(seed)

    def stream(self, label: str) -> np.random.Generator:
        return seeded_rng(self.seed, label)

    def child_seed(self, label: str) -> int:
        return derive_seed(self.seed, label)
