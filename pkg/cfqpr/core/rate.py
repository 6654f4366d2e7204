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

import math

import numpy as np

from dataclasses import dataclass, field

from .. import utils
from .channel import NormalizedChannel, normalize_channel

__all__ = ['CoefficientVector', 'quadratic_form', 'quadratic_forms',
           'rate_from_form', 'computation_rate', 'computation_rates',
           'make_coefficient']


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Integer coefficient vector together with its quadratic form and rate.

    Attributes
    ----------
    a :             np.ndarray
                    (L, ) int64 coefficient vector.
    f :             float
                    ``a^T G a``.
    rate :          float
                    Computation rate in bits per real channel use.
    degenerate :    bool
                    True if the method produced the all-zero vector. Rate is
                    reported as 0 in that case.
    meta :          dict
                    Method-specific details (e.g. the selected ``k`` or ``alpha``).

    """

    a: np.ndarray
    f: float
    rate: float
    degenerate: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def L(self):
        return self.a.shape[0]


def _parse_u(u):
    """Extract ``u`` as array from NormalizedChannel or array-like."""
    if isinstance(u, NormalizedChannel):
        return u.u
    u = np.asarray(u, dtype=float)
    if u.ndim != 1:
        raise ValueError(f'Expected 1-dimensional u, got shape {u.shape}')
    return u


def quadratic_form(u, a):
    """Evaluate ``f = a^T G a = |a|^2 - (u^T a)^2``.

    ``G`` is never materialized, hence O(L).

    Parameters
    ----------
    u :         NormalizedChannel | array-like
                Normalized channel.
    a :         array-like
                Integer coefficient vector of the same length as ``u``.

    Returns
    -------
    float

    """
    u = _parse_u(u)
    a = np.asarray(a)
    if a.shape != u.shape:
        raise ValueError(f'Dimension mismatch: u has shape {u.shape}, '
                         f'a has shape {a.shape}')
    d = float(np.dot(u, a))
    return float(np.dot(a, a)) - d * d


def quadratic_forms(u, A):
    """Evaluate the quadratic form for each row of ``A``.

    Parameters
    ----------
    u :         NormalizedChannel | array-like
    A :         (N, L) array-like
                Stack of coefficient vectors.

    Returns
    -------
    np.ndarray
                (N, ) float array.

    """
    u = _parse_u(u)
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[1] != u.shape[0]:
        raise ValueError(f'Expected (N, {u.shape[0]}) array, got {A.shape}')
    d = A @ u
    return np.einsum('ij,ij->i', A, A).astype(float) - d * d


def rate_from_form(f):
    """Convert quadratic form value into computation rate.

    ``rate = max(0, 1/2 log2(1/f))``; ``f >= 1`` gives exactly 0.
    """
    if f >= 1:
        return 0.0
    if f <= 0:
        raise ValueError(f'Quadratic form must be > 0, got {f}')
    return 0.5 * math.log2(1 / f)


def computation_rate(h, a, P):
    """Computation rate achieved by coefficient vector ``a`` over channel ``h``.

    Parameters
    ----------
    h :         array-like
                Real channel vector.
    a :         array-like
                Non-zero integer coefficient vector.
    P :         float
                Linear power constraint.

    Returns
    -------
    float
                Rate in bits per real channel use.

    Examples
    --------
    >>> from cfqpr import core
    >>> round(core.computation_rate([0, 0, 1], [0, 0, 1], 15), 9)
    2.0

    """
    nc = normalize_channel(h, P)
    a = utils.parse_coefficients(a, L=nc.L)

    # Any |a|^2 >= b is zero rate: enforce it exactly regardless of round-off
    if float(np.dot(a, a)) >= nc.b:
        return 0.0

    return rate_from_form(quadratic_form(nc, a))


def computation_rates(h, A, P):
    """Computation rates for each row of ``A`` (all-zero rows get rate 0)."""
    nc = normalize_channel(h, P)
    A = np.asarray(A)
    f = quadratic_forms(nc, A)
    norm_sq = np.einsum('ij,ij->i', A, A)

    rates = np.zeros(A.shape[0])
    valid = (norm_sq > 0) & (norm_sq < nc.b) & (f < 1)
    rates[valid] = 0.5 * np.log2(1 / f[valid])
    return rates


def make_coefficient(nc, a, **meta):
    """Wrap ``a`` into a ``CoefficientVector`` for normalized channel ``nc``."""
    a = np.asarray(a, dtype=np.int64)
    if not np.any(a):
        return CoefficientVector(a=a, f=0.0, rate=0.0, degenerate=True, meta=meta)

    f = quadratic_form(nc, a)
    if float(np.dot(a, a)) >= nc.b:
        rate = 0.0
    else:
        rate = rate_from_form(f)
    return CoefficientVector(a=a, f=f, rate=rate, meta=meta)
