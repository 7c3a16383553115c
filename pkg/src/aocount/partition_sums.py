"""Partition sums of acyclic-orientation counts and the quadratic-energy model.

B(n) sums AO(K_lambda) over all partitions of n, B_d(n) over partitions into
distinct parts; both come from the generating function whose u^n coefficient
is a polynomial in t, integrated termwise against e^{-t}.  The quadratic
model replaces AO(K_lambda)/n! by exp(-eta Q(lambda)/(2n)) with Q = sum of
squared parts, and is a plain float DP.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .exact import ao_exact
from .stirling import pm_polynomial

BRUTEFORCE_N_LIMIT = 30


def partition_sum(n: int, distinct: bool = False, max_part: int | None = None,
                  progress: Callable[[int, int], None] | None = None) -> int:
    """Exact sum of ao_exact over partitions of n with parts <= max_part.

    DP over u-coefficients: outer loop over part size k, inner loop over
    total weight m ascending (descending when parts must be distinct),
    adding P_k(t) times the u^(m-k) coefficient polynomial into u^m.
    Signed big-integer coefficients throughout; only the final
    factorial-weighted sum is positive.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n
    max_part = min(max_part, n)
    coeffs: list[list[int]] = [[] for _ in range(n + 1)]
    coeffs[0] = [1]
    for k in range(1, max_part + 1):
        pk = pm_polynomial(k)
        rng = range(n, k - 1, -1) if distinct else range(k, n + 1)
        for m in rng:
            src = coeffs[m - k]
            if not src:
                continue
            dst = coeffs[m]
            need = len(src) + k
            if len(dst) < need:
                dst.extend([0] * (need - len(dst)))
            for i, pv in enumerate(pk):
                if pv:
                    for j, sv in enumerate(src):
                        if sv:
                            dst[i + j] += pv * sv
        if progress is not None:
            progress(k, max_part)
    fact = 1
    total = 0
    for j, c in enumerate(coeffs[n]):
        if j > 0:
            fact *= j
        if c:
            total += c * fact
    return total


@dataclass(frozen=True)
class QuadraticModelResult:
    n: int
    log_Z: float
    distinct: bool
    eta: float


def quadratic_model(n: int, distinct: bool = False, eta: float = 1.0) -> QuadraticModelResult:
    """log of the u^n coefficient of prod_k (1 - w_k u^k)^{-1} (or of
    prod_k (1 + w_k u^k) for distinct parts), with w_k = exp(-eta k^2/(2n)).

    Float DP; part sizes whose weight underflows 1e-320 cannot move the
    sum and are skipped.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not eta > 0:
        raise ValueError("eta must be positive")
    z = [0.0] * (n + 1)
    z[0] = 1.0
    for k in range(1, n + 1):
        w = math.exp(-eta * k * k / (2.0 * n))
        if w < 1e-320:
            break
        if distinct:
            for m in range(n, k - 1, -1):
                z[m] += w * z[m - k]
        else:
            for m in range(k, n + 1):
                z[m] += w * z[m - k]
    return QuadraticModelResult(n=n, log_Z=math.log(z[n]), distinct=distinct, eta=eta)


def partitions_iter(n: int, max_part: int | None = None, distinct: bool = False) -> Iterator[tuple[int, ...]]:
    """All partitions of n, non-increasing, largest part <= max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions_iter(n - k, k - 1 if distinct else k, distinct):
            yield (k,) + rest


def quadratic_model_bruteforce(n: int, distinct: bool = False, eta: float = 1.0) -> float:
    """Oracle: Z_n as the direct sum of exp(-eta Q(lambda)/(2n)) over
    enumerated partitions; n <= 30 keeps the enumeration small."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > BRUTEFORCE_N_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_N_LIMIT}")
    total = 0.0
    for lam in partitions_iter(n, distinct=distinct):
        q = sum(x * x for x in lam)
        total += math.exp(-eta * q / (2.0 * n))
    return total


def partition_sum_bruteforce(n: int, distinct: bool = False, max_part: int | None = None) -> int:
    """Oracle for partition_sum: enumerate partitions, sum ao_exact."""
    return sum(ao_exact(lam) for lam in partitions_iter(n, max_part, distinct))
