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

import numpy as np

from dataclasses import dataclass

from .. import utils

__all__ = ['NormalizedChannel', 'normalize_channel', 'gram_matrix']


@dataclass(frozen=True, eq=False)
class NormalizedChannel:
    """Normalized channel vector ``u`` plus the zero-rate bound ``b``.

    Attributes
    ----------
    u :     np.ndarray
            ``sqrt(P / b) * h``. Satisfies ``G = I - u u^T`` and ``|u|^2 < 1``.
    b :     float
            ``1 + P |h|^2``. Any coefficient vector with ``|a|^2 >= b`` has
            zero computation rate.

    """

    u: np.ndarray
    b: float

    @property
    def L(self):
        return self.u.shape[0]

    @property
    def norm_sq(self):
        """Squared norm of ``u``, i.e. ``P |h|^2 / b``."""
        return float(np.dot(self.u, self.u))


def normalize_channel(h, P):
    """Compute the normalized channel vector.

    Parameters
    ----------
    h :         array-like
                Real channel vector of length L >= 2. Must not be all-zero.
    P :         float
                Linear (not dB) power constraint, > 0.

    Returns
    -------
    NormalizedChannel

    Examples
    --------
    >>> from cfqpr import core
    >>> nc = core.normalize_channel([0, 0, 1], 15)
    >>> nc.b
    16.0

    """
    h = utils.parse_channel(h)
    P = utils.parse_power(P)

    b = 1 + P * float(np.dot(h, h))
    u = np.sqrt(P / b) * h

    # Make sure nobody changes the cached vector under our feet
    u.setflags(write=False)

    return NormalizedChannel(u=u, b=b)


def gram_matrix(h, P):
    """Dense Gram matrix ``G = I - P / (1 + P|h|^2) h h^T``.

    The selection methods never need this matrix (they work on ``u``) but the
    LLL baseline factorizes it and it serves as oracle for the fast paths.

    Parameters
    ----------
    h :         array-like | NormalizedChannel
                Channel vector. If ``NormalizedChannel``, ``P`` is ignored.
    P :         float

    Returns
    -------
    np.ndarray
                (L, L) symmetric positive definite matrix.

    """
    if isinstance(h, NormalizedChannel):
        u = h.u
    else:
        u = normalize_channel(h, P).u
    return np.eye(u.shape[0]) - np.outer(u, u)
