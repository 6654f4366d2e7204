#    Integer coefficient selection for compute-and-forward relaying via
#    quadratic programming relaxation.
#
#    Copyright (C) 2026 The cfqpr developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.

"""Exhaustive search for the optimal coefficient vector (small L only)."""

import math

import numpy as np
import scipy.linalg

from dataclasses import dataclass

from .. import utils
from ..core import normalize_channel, make_coefficient, quadratic_forms, gram_matrix

__all__ = ['DimensionTooLargeError', 'EnumerationBound', 'enumeration_bound',
           'exhaustive_optimal', 'MAX_EXHAUSTIVE_DIM']

# Cost guard for the exhaustive search
MAX_EXHAUSTIVE_DIM = 6


class DimensionTooLargeError(ValueError):
    """Raised if a dimension exceeds what a method is willing to handle."""


@dataclass(frozen=True, eq=False)
class EnumerationBound:
    """Search region for the exhaustive search.

    Attributes
    ----------
    radius_sq :     float
                    ``1 + P |h|^2``: all ``a`` with non-zero rate have
                    ``|a|^2 < radius_sq``.
    box :           np.ndarray
                    (L, ) per-coordinate limit ``m``: the largest integer with
                    ``m^2 < radius_sq``.

    """

    radius_sq: float
    box: np.ndarray


def enumeration_bound(nc):
    """Build the ``EnumerationBound`` for a normalized channel."""
    m = math.ceil(math.sqrt(nc.b)) - 1
    # ceil(sqrt(b))^2 may still be < b due to round-off
    while (m + 1) ** 2 < nc.b:
        m += 1
    return EnumerationBound(radius_sq=nc.b,
                            box=np.full(nc.L, max(m, 1), dtype=np.int64))


def _box_scan(nc, bound):
    """Scan all integer vectors inside the box and the ball."""
    axes = [np.arange(-m, m + 1) for m in bound.box]
    grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, nc.L)

    norm_sq = np.einsum('ij,ij->i', grid, grid)
    grid = grid[(norm_sq > 0) & (norm_sq < bound.radius_sq)]

    f = quadratic_forms(nc, grid)
    ix = int(np.argmin(f))
    return grid[ix]


def _sphere_enum(nc):
    """Schnorr-Euchner enumeration of ``min a^T G a`` over non-zero integer ``a``.

    Uses the Cholesky factor ``G = R^T R`` so that
    ``a^T G a = sum_i R_ii^2 (a_i + sum_{j>i} R_ij / R_ii a_j)^2`` and walks
    from the last coordinate down, visiting candidates of each level in
    zig-zag order around the projected center.
    """
    L = nc.L
    R = scipy.linalg.cholesky(gram_matrix(nc, None), lower=False)
    rii2 = [float(R[i, i]) ** 2 for i in range(L)]
    mu = [[float(R[i, j] / R[i, i]) for j in range(L)] for i in range(L)]

    # Start with the best unit vector: f(e_i) = 1 - u_i^2 < 1
    u2 = nc.u ** 2
    start = int(np.argmax(u2))
    best = [0] * L
    best[start] = 1
    best_f = [1 - float(u2[start]), best]

    a = [0] * L

    def search(i, partial):
        c = -sum(mu[i][j] * a[j] for j in range(i + 1, L))
        x0 = round(c)
        s = 1 if c >= x0 else -1
        n = 0
        # Zig-zag x0, x0+s, x0-s, x0+2s, ... has nondecreasing |x - c|
        while True:
            if n == 0:
                x = x0
            elif n % 2:
                x = x0 + s * ((n + 1) // 2)
            else:
                x = x0 - s * (n // 2)

            cost = partial + rii2[i] * (x - c) ** 2
            if cost >= best_f[0]:
                break

            a[i] = x
            if i > 0:
                search(i - 1, cost)
            elif any(a):
                best_f[0] = cost
                best_f[1] = list(a)
            n += 1
        a[i] = 0

    search(L - 1, 0.0)

    return np.array(best_f[1], dtype=np.int64)


def exhaustive_optimal(h, P, method='auto'):
    """Find the optimal coefficient vector by exhaustive search.

    Stands in for the exact branch-and-bound and polynomial-time methods.
    Only feasible for small dimensions.

    Parameters
    ----------
    h :         array-like
                Real channel vector with at most ``MAX_EXHAUSTIVE_DIM`` entries.
    P :         float
                Linear power constraint.
    method :    "auto" | "box" | "enum"
                "box" scans every integer vector in the box ``|a_i| <= m``
                (vectorized; only sensible for L <= 3). "enum" runs
                Schnorr-Euchner enumeration. "auto" uses "box" for L <= 3
                and "enum" otherwise.

    Returns
    -------
    CoefficientVector
                Sign-normalized such that ``h^T a >= 0``.

    """
    if method not in ('auto', 'box', 'enum'):
        raise ValueError(f'Unknown method "{method}", expected "auto", "box" or "enum"')

    h = utils.parse_channel(h)
    P = utils.parse_power(P)
    L = h.shape[0]

    if L > MAX_EXHAUSTIVE_DIM:
        raise DimensionTooLargeError(f'Exhaustive search is limited to '
                                     f'L <= {MAX_EXHAUSTIVE_DIM}, got L={L}')

    if method == 'auto':
        method = 'box' if L <= 3 else 'enum'

    nc = normalize_channel(h, P)
    if method == 'box':
        a = _box_scan(nc, enumeration_bound(nc))
    else:
        a = _sphere_enum(nc)

    return make_coefficient(nc, utils.sign_normalize(a, h), method=method)
