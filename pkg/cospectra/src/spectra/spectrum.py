"""Adjacency spectra: exact characteristic polynomials, ranks and interval counts,
plus a Jacobi eigensolver used only for cross-checks."""

from __future__ import annotations

import logging
import math

import numpy as np

from .errors import ConvergenceError
from .graph import Graph
from .poly import (
    Endpoint,
    ExactPoly,
    MultiplicitySpectrum,
    count_roots_open_interval,
    square_free_decomposition,
)
from .util import iter_bits

logger = logging.getLogger(__name__)

DEFAULT_JACOBI_TOL = 1e-9
DEFAULT_JACOBI_MAX_SWEEPS = 100


def char_poly(g: Graph) -> ExactPoly:
    """det(xI - A) by Faddeev-LeVerrier over the integers.

    M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    """
    n = g.n
    nbrs = [list(iter_bits(row)) for row in g.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = [[0] * n for _ in range(n)]
        for i in range(n):
            acc = am[i]
            for j in nbrs[i]:
                mj = m[j]
                for c in range(n):
                    acc[c] += mj[c]
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        trace = sum(m[j][i] for i in range(n) for j in nbrs[i])
        if trace % k:
            raise ArithmeticError(f"Faddeev-LeVerrier trace {trace} not divisible by {k}")
        coeffs[n - k] = -trace // k
    return ExactPoly(tuple(coeffs))


def multiplicity_spectrum(g: Graph) -> MultiplicitySpectrum:
    return square_free_decomposition(char_poly(g))


def count_eigs_open_interval(g: Graph, a: Endpoint, b: Endpoint) -> int:
    """Eigenvalues (with multiplicity) strictly inside (a, b), counted exactly."""
    return count_roots_open_interval(multiplicity_spectrum(g), a, b)


def rank_exact(g: Graph, shift: int = 0) -> int:
    """Rank over Q of A + shift*I by fraction-free (Bareiss) elimination."""
    n = g.n
    m = [[(row >> j & 1) + (shift if i == j else 0) for j in range(n)] for i, row in enumerate(g.rows)]
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((r for r in range(rank, n) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        top = m[rank]
        for r in range(rank + 1, n):
            row = m[r]
            f = row[col]
            for c in range(col + 1, n):
                row[c] = (row[c] * p - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == n:
            break
    return rank


def distinct_nonzero_rows(g: Graph) -> int:
    return len({row for row in g.rows if row})


def numeric_eigenvalues(
    g: Graph,
    tol: float = DEFAULT_JACOBI_TOL,
    max_sweeps: int = DEFAULT_JACOBI_MAX_SWEEPS,
) -> list[float]:
    """All eigenvalues of A, descending, by cyclic Jacobi rotations."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    n = g.n
    a = g.to_numpy()
    # off-diagonal entries below this are left alone; they cannot keep the norm above tol
    skip = tol / (2 * max(n, 1))
    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < tol:
            logger.debug("Jacobi converged after %d sweeps (n=%d)", sweep, n)
            return sorted((float(x) for x in np.diag(a)), reverse=True)
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(max_sweeps, off)
