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

"""Successive floor/ceil quantization of the relaxed solutions."""

import math

import numpy as np

from ..core import NormalizedChannel

__all__ = ['successive_quantize', 'quantization_condition']


def _as_u(u):
    if isinstance(u, NormalizedChannel):
        return u.u
    return np.asarray(u, dtype=float)


def quantization_condition(w, u, l):
    """Evaluate the floor/ceil decision value for element ``l`` of ``w``.

    Returns ``2 floor(w[l]) - 2 (floor_l(w)^T u) u[l] + 1 - u[l]^2`` which
    equals ``f(ceil_l(w)) - f(floor_l(w))``. Flooring is kept if it is
    ``>= 0``.

    Parameters
    ----------
    w :     array-like
            Real vector.
    u :     NormalizedChannel | array-like
    l :     int
            0-based index.

    """
    u = _as_u(u)
    w = np.array(w, dtype=float)
    w[l] = math.floor(w[l])
    d = float(np.dot(w, u))
    return 2 * w[l] - 2 * d * u[l] + 1 - u[l] ** 2


def _quantize(w, u):
    """Quantize list ``w`` in place. Returns the final inner product ``w^T u``.

    Works on plain Python floats: for the short vectors we deal with this is
    considerably faster than numpy.
    """
    d = 0.0
    for wi, ui in zip(w, u):
        d += wi * ui

    for l in range(len(w) - 1):
        v = w[l]
        fl = math.floor(v)
        if fl == v:
            continue
        ul = u[l]
        w[l] = fl
        d += (fl - v) * ul
        # Strictly negative means ceil is better; exact ties keep floor
        if 2 * fl - 2 * d * ul + 1 - ul * ul < 0:
            w[l] = fl + 1
            d += ul

    return d


def successive_quantize(a_dagger, u):
    """Quantize a relaxed solution to an integer coefficient vector.

    For ``l = 1..L-1`` (in order) element ``l`` is set to either its floor or
    its ceiling, whichever gives the smaller quadratic form given the
    elements already quantized. The running inner product with ``u`` is
    updated incrementally, so the cost is O(L). The last element is left
    unchanged.

    Parameters
    ----------
    a_dagger :  array-like
                (L, ) real vector whose last entry is a positive integer.
    u :         NormalizedChannel | array-like
                Normalized (nonnegative ordered) channel.

    Returns
    -------
    np.ndarray
                (L, ) int64 array.

    """
    u = _as_u(u)
    w = [float(x) for x in np.asarray(a_dagger, dtype=float)]

    if len(w) != u.shape[0]:
        raise ValueError(f'Dimension mismatch: a_dagger has length {len(w)}, '
                         f'u has length {u.shape[0]}')
    if w[-1] != math.floor(w[-1]) or w[-1] < 1:
        raise ValueError(f'Last entry must be a positive integer, got {w[-1]}')

    _quantize(w, u.tolist())

    return np.array(w, dtype=np.int64)
