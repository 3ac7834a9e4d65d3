"""Monte Carlo bookkeeping: estimates, reproducible RNG streams, chunked runs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class McEstimate:
    """A Monte Carlo estimate with its standard error and provenance."""

    value: float
    stderr: float
    samples: int
    seed: Optional[int] = None

    def z_against(self, other) -> float:
        """Distance to `other` (a float or another McEstimate) in combined
        standard errors. Exact agreement returns 0 even when both errors vanish."""
        if isinstance(other, McEstimate):
            rhs, se2 = other.value, other.stderr**2
        else:
            rhs, se2 = float(other), 0.0
        diff = abs(self.value - rhs)
        se = math.sqrt(self.stderr**2 + se2)
        floor = 1e-12 * (abs(self.value) + abs(rhs) + 1.0)
        return diff / max(se, floor)

    def __add__(self, other: "McEstimate") -> "McEstimate":
        # independent estimates only
        return McEstimate(
            self.value + other.value,
            math.hypot(self.stderr, other.stderr),
            self.samples + other.samples,
            self.seed,
        )

    def scaled(self, c: float) -> "McEstimate":
        return McEstimate(c * self.value, abs(c) * self.stderr, self.samples, self.seed)


def exact(value: float) -> McEstimate:
    return McEstimate(float(value), 0.0, 0)


def as_generator(rng) -> np.random.Generator:
    """Accept a Generator, a seed, or None (fresh entropy)."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """Deterministic per-chunk stream; reproducible for fixed (seed, index)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def chunk_sizes(total: int, n_chunks: int) -> list[int]:
    base, rem = divmod(total, n_chunks)
    return [base + (1 if i < rem else 0) for i in range(n_chunks)]


class RunningMoments:
    """Accumulates count / sum / sum-of-squares for one or several parallel
    series; combination over chunks is order-fixed, hence deterministic."""

    def __init__(self, width: int = 1):
        self.n = 0
        self.s = np.zeros(width)
        self.s2 = np.zeros(width)

    def add(self, values: np.ndarray, n: Optional[int] = None):
        v = np.atleast_2d(np.asarray(values, dtype=float))
        self.n += v.shape[0] if n is None else n
        self.s += v.sum(axis=0)
        self.s2 += (v * v).sum(axis=0)

    def add_moments(self, n: int, s: np.ndarray, s2: np.ndarray):
        self.n += n
        self.s += s
        self.s2 += s2

    def estimate(self, idx: int = 0, seed: Optional[int] = None) -> McEstimate:
        if self.n == 0:
            return McEstimate(0.0, 0.0, 0, seed)
        mean = self.s[idx] / self.n
        var = max(self.s2[idx] / self.n - mean * mean, 0.0)
        se = math.sqrt(var / self.n) if self.n > 1 else math.inf
        return McEstimate(mean, se, self.n, seed)


N_CHUNKS = 32  # fixed, so results do not depend on worker count


def run_chunked(
    kernel: Callable[[np.random.Generator, int], tuple[int, np.ndarray, np.ndarray]],
    total_samples: int,
    seed: int,
    width: int = 1,
    n_chunks: int = N_CHUNKS,
) -> RunningMoments:
    """Run `kernel(rng, n) -> (n, sum, sumsq)` over deterministic substreams.

    The chunk count is fixed up front, so the reduction is byte-reproducible
    for a fixed seed no matter how the chunks are scheduled.
    """
    n_chunks = min(n_chunks, max(total_samples, 1))
    acc = RunningMoments(width)
    for idx, n in enumerate(chunk_sizes(total_samples, n_chunks)):
        if n == 0:
            continue
        cn, cs, cs2 = kernel(chunk_rng(seed, idx), n)
        acc.add_moments(cn, np.asarray(cs, dtype=float), np.asarray(cs2, dtype=float))
    return acc
