"""Dense polynomials over exact coefficients.

A polynomial is a plain list whose index is the degree (coefficients are
ints or Fractions).  The zero polynomial is the empty list; otherwise the
trailing coefficient is nonzero after trim().
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def poly_mul(a: Sequence, b: Sequence) -> list:
    """Schoolbook product; the shorter factor drives the outer loop."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, bi in enumerate(b):
        if bi:
            for j, aj in enumerate(a):
                if aj:
                    out[i + j] += bi * aj
    return out


def poly_eval(coeffs: Sequence, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Exact coefficients of the unique polynomial through the given points."""
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    coeffs = [Fraction(0)] * n
    for i in range(n):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            # num *= (x - xs[j])
            num = [Fraction(0)] + num
            for k in range(len(num) - 1):
                num[k] -= xs[j] * num[k + 1]
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, c in enumerate(num):
            coeffs[k] += scale * c
    return trim(coeffs)
