"""Bose/Fermi saddle-point constants for partition sums.

The saddle value a = c solves the occupancy equation
    I(a) = int_0^X x / (exp(a x + eta x^2/2) -+ 1) dx = 1
(minus: bose, all partitions; plus: fermi, distinct parts; X is the
truncation cutoff R, or infinity), and the reported constant is
    C = a + entropy integral at a.
Newton iteration uses the exact derivative I'(a) = -variance integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import tanh_sinh

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SaddleProblem:
    kind: str                  # "bose" or "fermi"
    R: float | None = None     # integration cutoff; None = infinity
    eta: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("bose", "fermi"):
            raise ValueError("kind must be 'bose' or 'fermi'")
        if not self.eta > 0:
            raise ValueError("eta must be positive")
        if self.R is not None:
            if not self.R > 0:
                raise ValueError("cutoff R must be positive")
            if self.kind == "fermi" and not self.R > _SQRT2:
                raise ValueError("fermi cutoff is feasible only for R > sqrt(2): "
                                 "below it the truncated occupancy cannot reach 1")


@dataclass(frozen=True)
class SaddleResult:
    a_star: float
    C_value: float
    residual: float
    iterations: int
    problem: SaddleProblem


def _upper_limit(a: float, problem: SaddleProblem) -> float:
    if problem.R is not None:
        return problem.R
    # choose X with exp(-eta X^2/2) (X + |a|) < 1e-18: Gaussian tail bound
    X = 10.0
    for _ in range(4):
        X = math.sqrt(2.0 * (18.0 * math.log(10.0) + math.log(X + abs(a) + 1.0)) / problem.eta)
    return X + 1.0


def _require_bose_positive(a: float, problem: SaddleProblem) -> None:
    if problem.kind == "bose" and not a > 0:
        raise ValueError("bose integrals require a > 0 (denominator vanishes otherwise)")


def occupancy_integral(a: float, problem: SaddleProblem) -> float:
    """I(a): the occupancy integral with the kind's -+1 denominator."""
    _require_bose_positive(a, problem)
    eta = problem.eta
    if problem.kind == "bose":
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            if w > 700.0:
                return 0.0
            return x / math.expm1(w)   # limit 1/a at x -> 0
    else:
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            if w > 700.0:
                return x * math.exp(-w)
            return x / (math.exp(w) + 1.0)
    return tanh_sinh(f, 0.0, _upper_limit(a, problem))


def entropy_integral(a: float, problem: SaddleProblem) -> float:
    """Bose: int -log(1 - e^{-w}); fermi: int log(1 + e^{-w}); w = ax + eta x^2/2."""
    _require_bose_positive(a, problem)
    eta = problem.eta
    if problem.kind == "bose":
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            return -math.log(-math.expm1(-w))   # integrable log blowup at 0
    else:
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            if w > 700.0:
                return math.exp(-w)
            return math.log1p(math.exp(-w))
    return tanh_sinh(f, 0.0, _upper_limit(a, problem))


def variance_constant(a: float, problem: SaddleProblem) -> float:
    """sigma^2 = int x^2 e^{-w} / (1 -+ e^{-w})^2 dx = -I'(a); strictly positive."""
    _require_bose_positive(a, problem)
    eta = problem.eta
    if problem.kind == "bose":
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            ew = math.exp(-w)
            d = -math.expm1(-w)
            return x * x * ew / (d * d)  # limit 1/a^2 at x -> 0
    else:
        def f(x: float) -> float:
            w = a * x + 0.5 * eta * x * x
            ew = math.exp(-w)           # w > -a^2/(2 eta), never overflows
            d = 1.0 + ew
            return x * x * ew / (d * d)
    return tanh_sinh(f, 0.0, _upper_limit(a, problem))


def solve_saddle(problem: SaddleProblem, tol: float = 1e-13, max_iter: int = 100) -> SaddleResult:
    """Newton on I(a) = 1 (derivative by quadrature), bisection fallback.

    I is strictly decreasing in a, so the root is unique; bose roots are
    positive, untruncated fermi roots negative.
    """
    a = 0.7 if problem.kind == "bose" else -0.3
    lo, hi = (1e-12, 5.0) if problem.kind == "bose" else (-5.0, 5.0)
    iterations = 0
    F = occupancy_integral(a, problem) - 1.0
    while abs(F) > tol and iterations < max_iter:
        V = variance_constant(a, problem)
        nxt = a + F / V          # I' = -V
        if not lo < nxt < hi:
            # Newton left the feasible bracket; bisect instead
            b_lo, b_hi = lo, hi
            f_lo = occupancy_integral(b_lo, problem) - 1.0
            nxt = 0.5 * (b_lo + b_hi)
            for _ in range(200):
                nxt = 0.5 * (b_lo + b_hi)
                f_mid = occupancy_integral(nxt, problem) - 1.0
                iterations += 1
                if abs(f_mid) < tol:
                    break
                if (f_lo > 0) == (f_mid > 0):
                    b_lo, f_lo = nxt, f_mid
                else:
                    b_hi = nxt
        a = nxt
        F = occupancy_integral(a, problem) - 1.0
        iterations += 1
    residual = abs(F)
    if residual > tol:
        raise RuntimeError(f"saddle solve did not converge: residual {residual:g} after {iterations} iterations")
    C = a + entropy_integral(a, problem)
    return SaddleResult(a_star=a, C_value=C, residual=residual, iterations=iterations, problem=problem)
