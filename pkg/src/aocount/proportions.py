"""Critical-point solver and evaluator for parts growing in fixed proportion.

For part sizes lambda_i ~ alpha_i N the count is governed by a saddle
point r in (0, inf)^p satisfying

    sum_i e^{-r_i} = p - 1,
    alpha_1/(r_1 e^{-r_1}) = ... = alpha_p/(r_p e^{-r_p}).

The reduced phase eliminates the last coordinate through the constraint
and the prediction combines the phase value, a finite-difference Hessian
determinant, and per-part rounding factors.  Away from the balanced
direction the expansion is conditional: the critical point is only known
to dominate when it stays on the principal branch of r e^{-r} (all
z_i = e^{-r_i} above 1/e).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .asymptotics import AsymptoticValue
from .numdiff import det, hessian_from_gradient

_INV_E = math.exp(-1.0)


@dataclass(frozen=True)
class CriticalPoint:
    alphas: tuple[float, ...]
    r: tuple[float, ...]
    phi: float
    hessian_det: float
    residuals: tuple[float, ...]
    branch: tuple[str, ...]

    @property
    def p(self) -> int:
        return len(self.r)

    @property
    def on_principal_branch(self) -> bool:
        return all(side == "above" for side in self.branch)


def _check_alphas(alphas: Sequence[float]) -> list[float]:
    a = [float(x) for x in alphas]
    if len(a) < 2:
        raise ValueError("need at least two proportions")
    if any(x <= 0 for x in a):
        raise ValueError("proportions must be positive")
    total = sum(a)
    if abs(total - 1.0) > 1e-9:
        raise ValueError("proportions must sum to 1")
    return [x / total for x in a]


def _residuals(r: Sequence[float], a: Sequence[float]) -> list[float]:
    p = len(a)
    e = [math.exp(-v) for v in r]
    out = [a[i] * r[p - 1] * e[p - 1] - a[p - 1] * r[i] * e[i]
           for i in range(p - 1)]
    out.append(sum(e) - (p - 1.0))
    return out


def reduced_phase(y: Sequence[float], alphas: Sequence[float]) -> float:
    """Phi(y) = -sum_{i<p} alpha_i log y_i - alpha_p log h(y), where h
    recovers the eliminated coordinate from sum_i e^{-r_i} = p - 1."""
    p = len(alphas)
    rest = (p - 1.0) - sum(math.exp(-v) for v in y)
    if rest <= 0.0 or rest >= 1.0:
        raise ValueError("point leaves the domain of the reduced phase")
    h = -math.log(rest)
    val = -sum(a * math.log(v) for a, v in zip(alphas[: p - 1], y))
    return val - alphas[p - 1] * math.log(h)


def reduced_phase_gradient(y: Sequence[float], alphas: Sequence[float]) -> list[float]:
    p = len(alphas)
    rest = (p - 1.0) - sum(math.exp(-v) for v in y)
    if rest <= 0.0 or rest >= 1.0:
        raise ValueError("point leaves the domain of the reduced phase")
    h = -math.log(rest)
    return [-alphas[i] / y[i] + alphas[p - 1] * math.exp(-y[i]) / (rest * h)
            for i in range(p - 1)]


def _solve_linear(matrix: list[list[float]], rhs: list[float]) -> list[float]:
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0.0:
            raise ZeroDivisionError("singular Newton system")
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col] / a[col][col]
            for c in range(col, n + 1):
                a[r][c] -= factor * a[col][c]
    return [a[i][n] / a[i][i] for i in range(n)]


def solve_fixed_proportion(alphas: Sequence[float], tol: float = 1e-13,
                           max_iter: int = 200) -> CriticalPoint:
    """Newton solve of the critical equations from the balanced start
    r_i = log(p/(p-1)).  Raises RuntimeError on divergence, which for
    strongly skewed proportions signals that the expansion's (conditional)
    dominant-saddle hypothesis may fail off the principal branch."""
    a = _check_alphas(alphas)
    p = len(a)
    L = math.log(p / (p - 1.0))
    r = [L] * p
    converged = False
    for _ in range(max_iter):
        e = [math.exp(-v) for v in r]
        F = _residuals(r, a)
        J = [[0.0] * p for _ in range(p)]
        for i in range(p - 1):
            J[i][i] = -a[p - 1] * (1.0 - r[i]) * e[i]
            J[i][p - 1] = a[i] * (1.0 - r[p - 1]) * e[p - 1]
        J[p - 1] = [-v for v in e]
        try:
            step = _solve_linear(J, F)
        except ZeroDivisionError as exc:
            raise RuntimeError(
                "critical-point Newton hit a singular Jacobian; the "
                "fixed-proportion expansion is conditional and may not "
                "apply to these proportions") from exc
        r = [v - s for v, s in zip(r, step)]
        if any(not math.isfinite(v) for v in r):
            raise RuntimeError(
                "critical-point Newton diverged; the fixed-proportion "
                "expansion is conditional and may not apply to these "
                "proportions")
        if max(abs(f) for f in F) < tol and max(abs(s) for s in step) < 10 * tol:
            converged = True
            break
    if converged and any(v <= 0.0 for v in r):
        raise RuntimeError(
            "critical point left the positive orthant; the fixed-proportion "
            "expansion is conditional and may not apply to these proportions")
    if not converged:
        raise RuntimeError(
            "critical-point Newton did not converge; the fixed-proportion "
            "expansion is conditional and may not apply to these proportions")
    y = r[: p - 1]
    hess = hessian_from_gradient(lambda v: reduced_phase_gradient(v, a), y)
    return CriticalPoint(
        alphas=tuple(a),
        r=tuple(r),
        phi=reduced_phase(y, a),
        hessian_det=det(hess),
        residuals=tuple(_residuals(r, a)),
        branch=tuple("above" if math.exp(-v) > _INV_E else "below" for v in r),
    )


def asy_fixed_proportion(parts: Sequence[int], alphas: Sequence[float] | None = None,
                         s: float = 1.0,
                         critical_point: CriticalPoint | None = None) -> AsymptoticValue:
    """Predicted count for part sizes close to fixed proportions of N.

    Parts are sorted ascending so the largest part carries the eliminated
    coordinate.  When alphas is omitted the exact proportions lambda_i/N
    are used and the rounding factors prod r_i^{-delta_i} are all 1.
    """
    lam = sorted(int(x) for x in parts)
    if len(lam) < 2 or lam[0] < 1:
        raise ValueError("need at least two positive parts")
    if not s > 0:
        raise ValueError("s must be positive")
    p = len(lam)
    N = sum(lam)
    if alphas is None:
        a = [x / N for x in lam]
    else:
        a = _check_alphas(alphas)
        if len(a) != p:
            raise ValueError("need one proportion per part")
    cp = critical_point if critical_point is not None else solve_fixed_proportion(a)
    r = cp.r
    log_value = sum(math.lgamma(x + 1) for x in lam)
    for x, ri, ai in zip(lam, r, a):
        log_value -= (x - ai * N) * math.log(ri)
    log_value += (s - 1.0) * math.log(lam[p - 1]) - math.lgamma(s)
    log_value += s * r[p - 1] - s * math.log(r[p - 1])
    log_value -= sum(math.log(ri) for ri in r[: p - 1])
    log_value += N * cp.phi
    log_value -= 0.5 * (p - 1) * math.log(2.0 * math.pi * N)
    log_value -= 0.5 * math.log(cp.hessian_det)
    ing = {
        "N": float(N), "phi": cp.phi, "hessian_det": cp.hessian_det,
        "log_gamma_s": math.lgamma(s),
        "log_rounding": -sum((x - ai * N) * math.log(ri)
                             for x, ri, ai in zip(lam, r, a)),
    }
    for i, ri in enumerate(r, start=1):
        ing[f"r_{i}"] = ri
    return AsymptoticValue(log_value, ing)
