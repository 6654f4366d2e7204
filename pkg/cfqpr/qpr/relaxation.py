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

"""Closed-form solutions of the relaxed quadratic programs."""

import math
import numbers

import numpy as np

from dataclasses import dataclass

from ..core import NormalizedChannel

__all__ = ['BaseSolution', 'base_solution', 'scaled_solution', 'determine_k']


@dataclass(frozen=True, eq=False)
class BaseSolution:
    """Minimizer of ``a^T G a`` over real ``a`` with the last entry fixed to 1.

    Attributes
    ----------
    a1 :    np.ndarray
            (L, ) float array ``[r; 1]``.

    """

    a1: np.ndarray

    @property
    def r(self):
        return self.a1[:-1]

    @property
    def L(self):
        return self.a1.shape[0]


def _base(u):
    """``a1`` of :func:`base_solution` for ``u`` given as list of floats."""
    head_sq = 0.0
    for x in u[:-1]:
        head_sq += x * x
    # |u|^2 < 1 guarantees a positive denominator
    s = u[-1] / (1 - head_sq)
    a1 = [s * x for x in u[:-1]]
    a1.append(1.0)
    return a1


def base_solution(u):
    """Solve the relaxed QP with ``a(L) = 1`` in closed form.

    ``r = u(L) / (1 - |u(1:L-1)|^2) * u(1:L-1)`` and ``a1 = [r; 1]``. Takes
    O(L) operations.

    Parameters
    ----------
    u :         NormalizedChannel
                Normalized channel, built from a nonnegative ordered channel
                if the entries of ``r`` are to be nonnegative and ordered.

    Returns
    -------
    BaseSolution

    """
    if not isinstance(u, NormalizedChannel):
        raise TypeError(f'Expected NormalizedChannel, got "{type(u)}"')

    a1 = np.array(_base(u.u.tolist()))
    a1.setflags(write=False)

    return BaseSolution(a1=a1)


def scaled_solution(base, k):
    """Solution of the relaxed QP with ``a(L) = k``, i.e. ``k * a1``."""
    if not isinstance(k, numbers.Integral) or k < 1:
        raise ValueError(f'k must be a positive integer, got {k}')
    return k * base.a1


def _fits(a1, k, b):
    """Check ``|floor(k * a1)|^2 < b`` for ``a1`` given as list."""
    n = 0
    for x in a1:
        fl = math.floor(k * x)
        n += fl * fl
    return n < b


def _determine_k(a1, b, K_u):
    if K_u == 1 or _fits(a1, K_u, b):
        return K_u

    # Invariant: K_l fits (or is 1), K_h does not
    K_l, K_h = 1, K_u
    while K_h != K_l + 1:
        K = (K_h + K_l) // 2
        if _fits(a1, K, b):
            K_l = K
        else:
            K_h = K

    return K_l


def determine_k(base, b, K_u):
    """Find the number of scaled relaxations to quantize.

    Returns the largest ``K <= K_u`` with ``|floor(K * a1)|^2 < b`` using a
    bisection search. If even ``K = 1`` violates the bound, 1 is returned.

    Parameters
    ----------
    base :      BaseSolution
                Built from a nonnegative ordered channel (the bound is then
                monotonic in ``K``).
    b :         float
                ``1 + P |h|^2``.
    K_u :       int
                Upper bound for ``K``.

    Returns
    -------
    int

    """
    if not isinstance(K_u, numbers.Integral) or K_u < 1:
        raise ValueError(f'K_u must be a positive integer, got {K_u}')
    if not b > 1:
        raise ValueError(f'b must be > 1, got {b}')

    return _determine_k(base.a1.tolist(), b, int(K_u))
