"""Seedable randomness shared by every sampler and attack.

All streams are numpy ``PCG64`` generators. A child stream is keyed by
hashing ``(root seed, label)`` with BLAKE2b, so registering a new attack
never shifts the draws seen by existing ones.
"""

from __future__ import annotations

import hashlib
import os

import numpy as np

SEED_ENV_VAR = "WORKBENCH_SEED"
_MASK64 = (1 << 64) - 1


def derive_seed(root: int, label: str) -> int:
    digest = hashlib.blake2b(f"{root & _MASK64}:{label}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    return parse_seed(raw)


def parse_seed(raw: str | int) -> int:
    value = int(raw)
    if not 0 <= value <= _MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {raw}")
    return value


class RngState:
    """A single-owner random stream. Do not share one instance across tasks."""

    def __init__(self, seed: int):
        self.seed = parse_seed(seed)
        self.gen = np.random.Generator(np.random.PCG64(self.seed))

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed})"

    def child(self, label: str) -> "RngState":
        """Independent stream for ``label``; does not advance this stream."""
        return RngState(derive_seed(self.seed, label))

    def next_bernoulli(self, p: float) -> bool:
        _check_probability(p)
        return bool(self.gen.random() < p)

    def bernoulli_array(self, p: float, size: int) -> np.ndarray:
        _check_probability(p)
        return self.gen.random(size) < p

    def uniforms(self, size: int) -> np.ndarray:
        return self.gen.random(size)

    def integers(self, high: int, size: int) -> np.ndarray:
        return self.gen.integers(0, high, size=size, dtype=np.int64)

    def sample_subset(self, n: int, k: int) -> tuple[int, ...]:
        """Uniform ``k``-subset of ``range(n)``, sorted ascending."""
        if k < 0 or n < 0:
            raise ValueError("n and k must be non-negative")
        if k > n:
            raise ValueError(f"cannot sample {k} vertices from {n}")
        picked = self.gen.choice(n, size=k, replace=False)
        return tuple(sorted(int(v) for v in picked))


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
