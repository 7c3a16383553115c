"""Stirling-number machinery and the signed polynomials built from it.

P_m(t) = sum_j (-1)^(m+j) S(m,j) t^j is the kernel every exact count in
this package integrates against; log(P_m(t)/t^m) expanded around t = infinity
yields the per-order collision polynomials that drive the window asymptotics.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polys import lagrange_interpolate, poly_eval, trim


class StirlingTable:
    """Triangle of Stirling set numbers S(m, j), grown on demand.

    Growth is lock-protected so concurrent callers never observe a
    half-built row.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, m: int) -> tuple[int, ...]:
        if m < 0:
            raise ValueError("row index must be non-negative")
        if m >= len(self._rows):
            with self._lock:
                while m >= len(self._rows):
                    prev = self._rows[-1]
                    k = len(self._rows)
                    row = [0] * (k + 1)
                    for j in range(1, k + 1):
                        above = prev[j] if j < len(prev) else 0
                        row[j] = j * above + prev[j - 1]
                    self._rows.append(tuple(row))
        return self._rows[m]

    def value(self, m: int, j: int) -> int:
        if j < 0 or j > m:
            return 0
        return self.row(m)[j]


_TABLE = StirlingTable()


def stirling2(m: int, j: int) -> int:
    """S(m, j): partitions of an m-set into j nonempty blocks."""
    if m < 0 or j < 0:
        raise ValueError("stirling2 arguments must be non-negative")
    return _TABLE.value(m, j)


def stirling_row(m: int) -> tuple[int, ...]:
    return _TABLE.row(m)


@lru_cache(maxsize=None)
def pm_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of P_m(t) = sum_j (-1)^(m+j) S(m,j) t^j, index = degree."""
    if m < 1:
        raise ValueError("pm_polynomial requires m >= 1")
    row = _TABLE.row(m)
    return tuple(v if (m - j) % 2 == 0 else -v for j, v in enumerate(row))


def rising_factorial(s, J: int):
    """s (s+1) ... (s+J-1); exact for int or Fraction s, 1 when J = 0."""
    if J < 0:
        raise ValueError("rising_factorial requires J >= 0")
    acc = s ** 0  # 1 in the arithmetic of s
    for i in range(J):
        acc *= s + i
    return acc


def falling_factorial(q, J: int):
    """q (q-1) ... (q-J+1); exact for int or Fraction q, 1 when J = 0."""
    if J < 0:
        raise ValueError("falling_factorial requires J >= 0")
    acc = q ** 0
    for i in range(J):
        acc *= q - i
    return acc


@dataclass(frozen=True)
class LaurentTruncation:
    """Leading 1/t coefficients of log(P_m(t)/t^m) around t = infinity."""

    m: int
    order: int
    coeffs: dict[int, Fraction]  # keys 1..order

    def __getitem__(self, ell: int) -> Fraction:
        return self.coeffs[ell]


def log_pm_series(m: int, order: int) -> LaurentTruncation:
    """Expand log(P_m(t)/t^m) in v = 1/t up to v^order, exactly.

    P_m(t)/t^m = 1 + sum_{i>=1} (-1)^i S(m, m-i) v^i, so the log series is
    well-defined; coefficients beyond order m would need S rows past the
    truncation, hence the order <= m requirement.
    """
    if m < 1:
        raise ValueError("log_pm_series requires m >= 1")
    if not 1 <= order <= m:
        raise ValueError("order must satisfy 1 <= order <= m")
    row = _TABLE.row(m)
    u = [Fraction(0)] * (order + 1)
    for i in range(1, order + 1):
        u[i] = Fraction(-row[m - i] if i % 2 else row[m - i])
    out = [Fraction(0)] * (order + 1)
    upow = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        nxt = [Fraction(0)] * (order + 1)
        for i, a in enumerate(upow):
            if a:
                for j in range(1, order + 1 - i):
                    if u[j]:
                        nxt[i + j] += a * u[j]
        upow = nxt
        sign = Fraction(1 if k % 2 else -1, k)
        for ell in range(k, order + 1):
            out[ell] += sign * upow[ell]
    return LaurentTruncation(m=m, order=order, coeffs={ell: out[ell] for ell in range(1, order + 1)})


@lru_cache(maxsize=None)
def collision_polynomial(ell: int, degree_hint: int | None = None) -> tuple[Fraction, ...]:
    """The degree ell+1 polynomial in m giving the v^ell coefficient of
    log(P_m(t)/t^m).

    Recovered by exact interpolation of log_pm_series values at
    m = ell+1 .. 2*ell+2; the two further samples at 2*ell+3 and 2*ell+4
    are consistency assertions that the coefficient really is polynomial
    of the hinted degree.
    """
    if ell < 1:
        raise ValueError("collision_polynomial requires ell >= 1")
    degree = ell + 1 if degree_hint is None else degree_hint
    if degree < 1:
        raise ValueError("degree_hint must be positive")
    nodes = list(range(ell + 1, ell + degree + 2))
    ys = [log_pm_series(m, ell)[ell] for m in nodes]
    coeffs = lagrange_interpolate([Fraction(m) for m in nodes], ys)
    for m in (nodes[-1] + 1, nodes[-1] + 2):
        got = poly_eval(coeffs, Fraction(m))
        want = log_pm_series(m, ell)[ell]
        if got != want:
            raise ValueError(
                f"coefficient of v^{ell} is not a degree-{degree} polynomial in m: "
                f"mismatch at m={m} ({got} != {want})"
            )
    return tuple(trim(list(coeffs)))
