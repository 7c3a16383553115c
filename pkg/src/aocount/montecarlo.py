"""Monte-Carlo estimate of AO(K_lambda)/N! from random permutation runs.

Shuffle the N part-labeled vertices uniformly; merging maximal runs of
same-part vertices splits the permutation into blocks of lengths L_j, and
AO/N! equals the expectation of prod_j 1/L_j!.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .exact import PartitionSpec, _as_parts
from .rng import SplitMix64


@dataclass(frozen=True)
class RunsEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int


def random_runs_estimate(parts: Iterable[int] | PartitionSpec, samples: int, seed: int) -> RunsEstimate:
    """Sample mean and standard error of prod_j 1/L_j! over uniform shuffles.

    Deterministic for a given seed (splitmix64 + Fisher-Yates).
    """
    tup = _as_parts(parts)
    n = sum(tup)
    if n < 1:
        raise ValueError("need at least one vertex")
    if samples < 1:
        raise ValueError("need at least one sample")
    labels: list[int] = []
    for idx, m in enumerate(tup):
        labels.extend([idx] * m)
    inv_fact = [1.0] * (n + 1)
    for i in range(2, n + 1):
        inv_fact[i] = inv_fact[i - 1] / i
    rng = SplitMix64(seed)
    next_below = rng.next_below
    arr = list(labels)
    total = 0.0
    total_sq = 0.0
    for _ in range(samples):
        for i in range(n - 1, 0, -1):
            j = next_below(i + 1)
            arr[i], arr[j] = arr[j], arr[i]
        prod = 1.0
        run = 1
        prev = arr[0]
        for i in range(1, n):
            c = arr[i]
            if c == prev:
                run += 1
            else:
                prod *= inv_fact[run]
                run = 1
                prev = c
        prod *= inv_fact[run]
        total += prod
        total_sq += prod * prod
    mean = total / samples
    variance = max(total_sq / samples - mean * mean, 0.0)
    return RunsEstimate(mean=mean, std_error=math.sqrt(variance / samples),
                        samples=samples, seed=seed)
