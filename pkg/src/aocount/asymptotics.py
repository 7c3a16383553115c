"""Closed-form asymptotic evaluators for acyclic-orientation counts.

Every evaluator returns the natural log of the predicted count plus a map
of the formula's ingredients for diagnostics.  All work happens in log
space through lgamma; factorials are never materialized as floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

# exponent coefficients of the equal-part-size window expansion:
# log AO(K_{m x n}) ~ log (mn)! - m/2 + 1/2 + sum_j gamma_j m / n^j
WINDOW_GAMMA = {
    1: -5.0 / 24.0,
    2: -1.0 / 8.0,
    3: -251.0 / 2880.0,
    4: -19.0 / 288.0,
    5: -19087.0 / 362880.0,
}

HARDY_RAMANUJAN = math.pi * math.sqrt(2.0 / 3.0)
HARDY_RAMANUJAN_DISTINCT = math.pi / math.sqrt(3.0)


@dataclass(frozen=True)
class AsymptoticValue:
    log_value: float
    ingredients: dict[str, float] = field(default_factory=dict)

    def ratio_to(self, exact_count: int) -> float:
        """exact / predicted, for drift checks against exact counts."""
        return math.exp(math.log(exact_count) - self.log_value)


def _l_of(p: int) -> float:
    return math.log(p / (p - 1.0))


def asy_turan(N: int, p: int) -> AsymptoticValue:
    """Predicted AO of the balanced complete p-partite graph on N vertices:
    N! / ((p-1) (1-L)^{(p-1)/2} p^N L^{N+1}), L = log(p/(p-1))."""
    if p < 2 or N < 1:
        raise ValueError("need p >= 2 and N >= 1")
    L = _l_of(p)
    log_value = (math.lgamma(N + 1) - math.log(p - 1.0)
                 - 0.5 * (p - 1) * math.log1p(-L)
                 - N * math.log(p) - (N + 1) * math.log(L))
    return AsymptoticValue(log_value, {
        "L": L, "log_factorial": math.lgamma(N + 1),
        "log_prefactor": -math.log(p - 1.0) - 0.5 * (p - 1) * math.log1p(-L),
        "log_exponential_part": -N * math.log(p) - (N + 1) * math.log(L),
    })


def asy_turan_tutte(N: int, p: int, s: float) -> AsymptoticValue:
    """Tutte-axis version: N! N^{s-1} / (Gamma(s) (p-1)^s (1-L)^{(p-1)/2} p^N L^{N+s})."""
    if p < 2 or N < 1:
        raise ValueError("need p >= 2 and N >= 1")
    if not s > 0:
        raise ValueError("s must be positive")
    L = _l_of(p)
    log_value = (math.lgamma(N + 1) + (s - 1.0) * math.log(N) - math.lgamma(s)
                 - s * math.log(p - 1.0) - 0.5 * (p - 1) * math.log1p(-L)
                 - N * math.log(p) - (N + s) * math.log(L))
    return AsymptoticValue(log_value, {
        "L": L, "log_factorial": math.lgamma(N + 1),
        "log_gamma_s": math.lgamma(s),
        "log_prefactor": -s * math.log(p - 1.0) - 0.5 * (p - 1) * math.log1p(-L),
        "log_exponential_part": -N * math.log(p) - (N + s) * math.log(L),
    })


def tutte_correction(k: int, s: float) -> float:
    """First-order correction Delta for r parts of equal size k on the
    Tutte axis; at s = 1 it is -(k-1)(5k-7)/24."""
    return (-(k - 1) * (5 * k - 7) / 24.0
            + s * (s - 1.0) / 2.0
            + (s - 1.0) * (k - 1) / 2.0)


def asy_fixed_part(k: int, r: int, s: float = 1.0, corrected: bool = True) -> AsymptoticValue:
    """All r parts of the same fixed size k, N = k r:
    (kr)! (kr)^{s-1} / Gamma(s) * e^{-(k-1)/2} * (1 + Delta/(kr) if corrected)."""
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    if not s > 0:
        raise ValueError("s must be positive")
    N = k * r
    delta = tutte_correction(k, s)
    log_value = (math.lgamma(N + 1) + (s - 1.0) * math.log(N) - math.lgamma(s)
                 - 0.5 * (k - 1))
    if corrected:
        log_value += math.log1p(delta / N)
    return AsymptoticValue(log_value, {
        "N": float(N), "delta": delta,
        "log_factorial": math.lgamma(N + 1), "log_gamma_s": math.lgamma(s),
        "exponent": -0.5 * (k - 1),
        "correction_factor": 1.0 + delta / N if corrected else 1.0,
    })


def _profile_a(j: int) -> float:
    return -j * (j - 1) / 2.0


def _profile_e(j: int) -> float:
    b = j * (j - 1) * (j - 2) * (3 * j - 5) / 24.0
    return b - _profile_a(j) ** 2 / 2.0


def asy_finite_profile(r_profile: Sequence[int], s: float = 1.0) -> AsymptoticValue:
    """Bounded part sizes with r_j parts of size j (r_profile[j-1] = r_j):
    e^{mu_1} N! N^{s-1} / Gamma(s) * (1 + correction/N), where
    mu_1, mu_2 are profile averages of the per-size constants."""
    if not s > 0:
        raise ValueError("s must be positive")
    counts = [int(c) for c in r_profile]
    if any(c < 0 for c in counts):
        raise ValueError("profile counts must be non-negative")
    N = sum(j * c for j, c in enumerate(counts, start=1))
    if N < 1:
        raise ValueError("profile must cover at least one vertex")
    mu1 = sum(c * _profile_a(j) for j, c in enumerate(counts, start=1)) / N
    mu2 = sum(c * _profile_e(j) for j, c in enumerate(counts, start=1)) / N
    correction = mu2 + (1.0 - s) * mu1 + mu1 * mu1 / 2.0 + s * (s - 1.0) / 2.0
    log_value = (mu1 + math.lgamma(N + 1) + (s - 1.0) * math.log(N) - math.lgamma(s)
                 + math.log1p(correction / N))
    return AsymptoticValue(log_value, {
        "N": float(N), "mu1": mu1, "mu2": mu2, "correction": correction,
        "log_factorial": math.lgamma(N + 1), "log_gamma_s": math.lgamma(s),
    })


def asy_equal_window(m: int, n: int, order: int = 3, s: float = 1.0) -> AsymptoticValue:
    """n parts of equal size m (any relative growth of m and n):
    (mn)! (mn)^{s-1} / Gamma(s) * exp(-m/2 + 1/2 + sum_{j<=order} gamma_j m/n^j)."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    if order not in (1, 2, 3, 4, 5):
        raise ValueError("order must be between 1 and 5")
    if not s > 0:
        raise ValueError("s must be positive")
    N = m * n
    tail = sum(WINDOW_GAMMA[j] * m / float(n) ** j for j in range(1, order + 1))
    exponent = -0.5 * m + 0.5 + tail
    log_value = (math.lgamma(N + 1) + (s - 1.0) * math.log(N) - math.lgamma(s)
                 + exponent)
    ing = {"N": float(N), "exponent": exponent,
           "log_factorial": math.lgamma(N + 1), "log_gamma_s": math.lgamma(s)}
    for j in range(1, order + 1):
        ing[f"gamma_{j}_term"] = WINDOW_GAMMA[j] * m / float(n) ** j
    return AsymptoticValue(log_value, ing)


def far_tail_bound(A: float, distinct: bool = False) -> float:
    """Per-sqrt(n) log bound for partition sums restricted to largest part
    >= A sqrt(n): the Hardy-Ramanujan constant minus A^2/2."""
    if not A > 0:
        raise ValueError("A must be positive")
    base = HARDY_RAMANUJAN_DISTINCT if distinct else HARDY_RAMANUJAN
    return base - A * A / 2.0
