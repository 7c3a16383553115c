"""Exact acyclic-orientation counts of complete multipartite graphs.

Two independent routes are kept deliberately separate:

* the integral route: multiply the signed polynomials P_m(t) and integrate
  termwise against e^{-t} (ao_exact, h_s_exact via product_polynomial);
* the color-class route: multiply unsigned Stirling rows and sum falling
  factorials (chromatic_eval).

A brute-force orientation enumerator is the oracle both routes are tested
against at small sizes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .polys import poly_mul
from .stirling import falling_factorial, pm_polynomial, stirling_row

BRUTEFORCE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, canonically non-increasing.

    Zero parts are stripped; an empty parts tuple is the empty graph.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((int(p) for p in self.parts if p != 0), reverse=True))
        if cleaned and cleaned[-1] < 0:
            raise ValueError("part sizes must be non-negative")
        object.__setattr__(self, "parts", cleaned)

    @property
    def N(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)


def _as_parts(parts: Iterable[int] | PartitionSpec) -> tuple[int, ...]:
    if isinstance(parts, PartitionSpec):
        return parts.parts
    return PartitionSpec(tuple(parts)).parts


@lru_cache(maxsize=48)
def _product_coeffs(parts: tuple[int, ...]) -> tuple[int, ...]:
    acc = [1]
    for m in parts:
        acc = poly_mul(acc, pm_polynomial(m))
    return tuple(acc)


def product_polynomial(parts: Iterable[int] | PartitionSpec) -> list[int]:
    """Coefficients of prod_i P_{lambda_i}(t); degree N, exact integers."""
    return list(_product_coeffs(_as_parts(parts)))


@lru_cache(maxsize=4096)
def _ao_exact(parts: tuple[int, ...]) -> int:
    coeffs = _product_coeffs(parts)
    fact = 1
    total = 0
    for j, c in enumerate(coeffs):
        if j > 0:
            fact *= j
        if c:
            total += c * fact
    return total


def ao_exact(parts: Iterable[int] | PartitionSpec) -> int:
    """Number of acyclic orientations of the complete multipartite graph.

    Termwise integration of e^{-t} * prod P_{lambda_i}(t): each t^j
    contributes j!.  The empty graph counts 1.
    """
    return _ao_exact(_as_parts(parts))


@lru_cache(maxsize=4096)
def _h_s_exact(parts: tuple[int, ...], s):
    coeffs = _product_coeffs(parts)
    rise = s ** 0
    total = 0
    for j, c in enumerate(coeffs):
        if j > 0:
            rise = rise * (s + j - 1)
        if c:
            total += c * rise
    return total


def h_s_exact(parts: Iterable[int] | PartitionSpec, s):
    """The Tutte-axis count H_s = (-1)^N chi(-s): sum_j c_j rising(s, j).

    Exact: returns an int for integer s, a Fraction for rational s.
    """
    if isinstance(s, Fraction) and s.denominator == 1:
        s = int(s)
    return _h_s_exact(_as_parts(parts), s)


def chromatic_eval(parts: Iterable[int] | PartitionSpec, q):
    """Chromatic polynomial of K_lambda at exact rational q.

    Color-class expansion: sum over j_1..j_r of falling(q, sum j_i) times
    prod S(lambda_i, j_i).  Kept independent of product_polynomial: the
    unsigned Stirling rows are multiplied directly.
    """
    tup = _as_parts(parts)
    if isinstance(q, Fraction) and q.denominator == 1:
        q = int(q)
    acc = [1]
    for m in tup:
        acc = poly_mul(acc, stirling_row(m))
    total = q ** 0 - 1  # exact zero in the arithmetic of q
    fall = q ** 0
    for J, b in enumerate(acc):
        if J > 0:
            fall = fall * (q - J + 1)
        if b:
            total += b * fall
    return total


def ao_one_large_part(L: int, n: int) -> int:
    """Closed form for one part of size L plus n-L singletons:
    (n-L)! (n-L+1)^L."""
    if L < 0 or n < 1 or L > n:
        raise ValueError("need 0 <= L <= n with n >= 1")
    base = 1
    for i in range(2, n - L + 1):
        base *= i
    return base * (n - L + 1) ** L


def turan_parts(N: int, p: int) -> tuple[int, ...]:
    """Part sizes of the balanced complete p-partite graph on N vertices."""
    if p < 1 or N < 0:
        raise ValueError("need p >= 1 and N >= 0")
    q, rem = divmod(N, p)
    return tuple([q + 1] * rem + [q] * (p - rem))


def _orientation_count_chunk(masks: np.ndarray, edges: list[tuple[int, int]], n: int) -> int:
    E = len(edges)
    M = masks.shape[0]
    bits = np.empty((M, E), dtype=bool)
    for e in range(E):
        bits[:, e] = (masks >> np.uint32(e)) & np.uint32(1)
    active = np.ones((M, E), dtype=bool)
    alive = np.ones((M, n), dtype=bool)
    for _ in range(n):
        indeg = np.zeros((M, n), dtype=np.int8)
        for e, (u, v) in enumerate(edges):
            be = bits[:, e] & active[:, e]
            indeg[:, v] += be
            indeg[:, u] += active[:, e] ^ be
        removable = alive & (indeg == 0)
        if not removable.any():
            break
        alive &= ~removable
        for e, (u, v) in enumerate(edges):
            # an edge disappears with its tail vertex
            dead = np.where(bits[:, e], removable[:, u], removable[:, v])
            active[:, e] &= ~dead
    return int(np.count_nonzero(~alive.any(axis=1)))


def ao_bruteforce(parts: Iterable[int] | PartitionSpec) -> int:
    """Oracle: enumerate all 2^E edge orientations and count the acyclic ones
    by repeatedly deleting indegree-zero vertices.  Limited to E <= 24."""
    tup = _as_parts(parts)
    labels: list[int] = []
    for idx, m in enumerate(tup):
        labels.extend([idx] * m)
    n = len(labels)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if labels[u] != labels[v]]
    if len(edges) > BRUTEFORCE_EDGE_LIMIT:
        raise ValueError(f"{len(edges)} edges exceed the 2^E enumeration limit of {BRUTEFORCE_EDGE_LIMIT}")
    if not edges:
        return 1
    total = 0
    chunk = 1 << 20
    for start in range(0, 1 << len(edges), chunk):
        stop = min(start + chunk, 1 << len(edges))
        masks = np.arange(start, stop, dtype=np.uint32)
        total += _orientation_count_chunk(masks, edges, n)
    return total


def split_refinements(parts: Sequence[int]) -> list[tuple[int, ...]]:
    """All partitions obtained by splitting one part into two nonzero parts."""
    tup = _as_parts(parts)
    out = set()
    for i, lam in enumerate(tup):
        rest = tup[:i] + tup[i + 1:]
        for a in range(1, lam // 2 + 1):
            out.add(tuple(sorted(rest + (a, lam - a), reverse=True)))
    return sorted(out)
