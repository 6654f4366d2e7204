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

"""Selection by rounding (scaled) channel vectors."""

import math

import numpy as np

from .. import utils
from ..core import normalize_channel, make_coefficient, computation_rates

__all__ = ['rounding_coeff', 'quantized_search', 'qs_alpha_grid']


def rounding_coeff(h, P):
    """Round the channel vector to the nearest integer vector.

    Halves are rounded away from zero. If every entry rounds to zero the
    returned ``CoefficientVector`` is flagged as ``degenerate`` with rate 0.
    """
    h = utils.parse_channel(h)
    P = utils.parse_power(P)
    return make_coefficient(normalize_channel(h, P), utils.round_half_away(h))


def qs_alpha_grid(alpha0):
    """The 21 amplification factors ``alpha0 - 1, alpha0 - 0.9, ..., alpha0 + 1``."""
    return (10 * alpha0 + np.arange(-10, 11)) / 10


def _best_alpha(h, P, alphas):
    """Index of the best non-zero ``round(alpha * h)``, or None.

    Ties go to the first (smallest) ``alpha``.
    """
    A = utils.round_half_away(np.outer(alphas, h))
    nonzero = np.any(A, axis=1)
    if not np.any(nonzero):
        return None, A
    rates = computation_rates(h, A, P)
    rates[~nonzero] = -np.inf
    return int(np.argmax(rates)), A


def quantized_search(h, P):
    """Two-phase search over amplified and rounded channel vectors.

    Phase 1 picks an integer ``alpha0`` in ``1..floor(sqrt(P))`` that
    maximizes the rate of ``round(alpha0 * h)``. Phase 2 refines on the grid
    ``[alpha0 - 1, alpha0 + 1]`` with step 0.1. For ``P < 1`` the phase 1
    range is empty and ``alpha0 = 1`` is used.

    Parameters
    ----------
    h :         array-like
                Real channel vector.
    P :         float
                Linear power constraint.

    Returns
    -------
    CoefficientVector
                ``meta`` contains ``alpha0`` and ``alpha``.

    """
    h = utils.parse_channel(h)
    P = utils.parse_power(P)
    nc = normalize_channel(h, P)

    alpha0_range = np.arange(1, max(math.isqrt(int(math.floor(P))), 1) + 1)
    ix, _ = _best_alpha(h, P, alpha0_range)
    alpha0 = int(alpha0_range[ix]) if ix is not None else 1

    grid = qs_alpha_grid(alpha0)
    ix, A = _best_alpha(h, P, grid)
    if ix is None:
        return make_coefficient(nc, np.zeros(h.shape[0], dtype=np.int64),
                                alpha0=alpha0, alpha=None)

    return make_coefficient(nc, A[ix], alpha0=alpha0, alpha=float(grid[ix]))
