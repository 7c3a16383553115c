"""Finite-difference Hessians built from an analytic gradient.

Differencing the gradient (rather than the function) keeps one order of
accuracy in hand, and a single Richardson refinement removes the leading
h^2 error term.  The default step is tuned so that the balanced
determinant identity for the saddle free energy holds to ~1e-9 up to
five parts; smaller steps lose more to cancellation than they gain in
truncation.
"""
from __future__ import annotations

from typing import Callable, Sequence

Gradient = Callable[[Sequence[float]], Sequence[float]]

DEFAULT_REL_STEP = 3e-4


def _grad_difference(grad: Gradient, x0: Sequence[float], steps: Sequence[float]) -> list[list[float]]:
    n = len(x0)
    rows: list[list[float]] = []
    for i in range(n):
        fwd = list(x0)
        bwd = list(x0)
        fwd[i] += steps[i]
        bwd[i] -= steps[i]
        gf = grad(fwd)
        gb = grad(bwd)
        rows.append([(gf[j] - gb[j]) / (2.0 * steps[i]) for j in range(n)])
    return rows


def hessian_from_gradient(grad: Gradient, x0: Sequence[float],
                          rel_step: float = DEFAULT_REL_STEP) -> list[list[float]]:
    """Symmetric Hessian estimate at x0 from central differences of grad.

    Each coordinate uses step rel_step * max(1, |x0_i|); the h and h/2
    estimates are combined as (4 H_{h/2} - H_h) / 3 and the result is
    symmetrized.
    """
    if not rel_step > 0:
        raise ValueError("rel_step must be positive")
    x0 = list(map(float, x0))
    n = len(x0)
    steps = [rel_step * max(1.0, abs(v)) for v in x0]
    coarse = _grad_difference(grad, x0, steps)
    fine = _grad_difference(grad, x0, [0.5 * h for h in steps])
    hess = [[(4.0 * fine[i][j] - coarse[i][j]) / 3.0 for j in range(n)]
            for i in range(n)]
    return [[0.5 * (hess[i][j] + hess[j][i]) for j in range(n)] for i in range(n)]


def det(matrix: Sequence[Sequence[float]]) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    a = [list(map(float, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1.0
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0.0:
            return 0.0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
    result = sign
    for i in range(n):
        result *= a[i][i]
    return result


def leading_principal_minors(matrix: Sequence[Sequence[float]]) -> list[float]:
    n = len(matrix)
    return [det([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)]
