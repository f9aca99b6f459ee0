"""Exact integer matrix helpers.

numpy int64 arrays carry the matrices; every product is guarded so that an
entry can never silently wrap around.  Determinants use fraction-free
Bareiss elimination on Python integers and ranks use exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

INT64_MAX = (1 << 63) - 1


class CoefficientOverflow(ArithmeticError):
    pass


def check_int64(value: int) -> int:
    if -INT64_MAX <= value <= INT64_MAX:
        return value
    raise CoefficientOverflow(f"coefficient {value} exceeds the 64-bit range")


def _max_abs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of int64 matrices, refusing any product that could overflow."""
    inner = a.shape[1] if a.ndim == 2 else a.shape[0]
    if _max_abs(a) * _max_abs(b) * max(inner, 1) > INT64_MAX:
        raise CoefficientOverflow("matrix product may exceed the 64-bit range")
    return a @ b


def matrix_power(a: np.ndarray, k: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return out


def det_bareiss(rows: Sequence[Sequence[int]]) -> int:
    m = [[int(v) for v in r] for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def multiplicative_order(a: np.ndarray, limit: int) -> int | None:
    """Least k in 1..limit with a^k = I, or None."""
    ident = np.eye(a.shape[0], dtype=np.int64)
    p = ident
    for k in range(1, limit + 1):
        p = matmul(p, a)
        if np.array_equal(p, ident):
            return k
    return None
