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

"""Coefficient selection via LLL lattice reduction of the Gram factor."""

import numpy as np
import scipy.linalg

from dataclasses import dataclass

from .. import utils
from ..core import normalize_channel, gram_matrix, make_coefficient, quadratic_forms

__all__ = ['LllParams', 'lll_reduce', 'is_lll_reduced', 'lll_coeff']


@dataclass(frozen=True)
class LllParams:
    """Parameters for the LLL reduction.

    Attributes
    ----------
    delta :     float
                Lovasz parameter in (0.25, 1].

    """

    delta: float = 0.75

    def __post_init__(self):
        if not 0.25 < self.delta <= 1:
            raise ValueError(f'delta must be in (0.25, 1], got {self.delta}')


def _gso(B):
    """R factor of the QR decomposition: ``mu[j, k] = R[j, k] / R[j, j]``."""
    return np.linalg.qr(B, mode='r')


def lll_reduce(B, delta=0.75, max_iter=100000):
    """LLL-reduce a lattice basis.

    Parameters
    ----------
    B :         (n, n) array-like
                Basis vectors as columns.
    delta :     float
                Lovasz parameter.
    max_iter :  int
                Safeguard against cycling due to round-off.

    Returns
    -------
    B_red :     np.ndarray
                Reduced basis (columns).
    U :         np.ndarray
                (n, n) int64 unimodular matrix with ``B_red = B @ U``.

    """
    B = np.array(B, dtype=float)
    if B.ndim != 2:
        raise ValueError(f'Expected 2d basis, got {B.ndim} dimensions')

    n = B.shape[1]
    U = np.eye(n, dtype=np.int64)
    R = _gso(B)

    k = 1
    it = 0
    while k < n:
        it += 1
        if it > max_iter:
            raise RuntimeError(f'LLL did not terminate after {max_iter} iterations')

        # Size reduction of column k. Column operations on B carry over to R.
        for j in range(k - 1, -1, -1):
            q = int(np.rint(R[j, k] / R[j, j]))
            if q:
                B[:, k] -= q * B[:, j]
                U[:, k] -= q * U[:, j]
                R[:, k] -= q * R[:, j]

        mu = R[k - 1, k] / R[k - 1, k - 1]
        if R[k, k] ** 2 >= (delta - mu ** 2) * R[k - 1, k - 1] ** 2:
            k += 1
        else:
            B[:, [k - 1, k]] = B[:, [k, k - 1]]
            U[:, [k - 1, k]] = U[:, [k, k - 1]]
            R = _gso(B)
            k = max(k - 1, 1)

    return B, U


def is_lll_reduced(B, delta=0.75, eps=1e-9):
    """Check size-reduction and the Lovasz condition for basis ``B`` (columns)."""
    R = _gso(np.asarray(B, dtype=float))
    n = R.shape[1]
    for k in range(1, n):
        for j in range(k):
            if abs(R[j, k] / R[j, j]) > 0.5 + eps:
                return False
        mu = R[k - 1, k] / R[k - 1, k - 1]
        if R[k, k] ** 2 < (delta - mu ** 2) * R[k - 1, k - 1] ** 2 - eps:
            return False
    return True


def lll_coeff(h, P, params=None):
    """Select a coefficient vector from the LLL-reduced Gram factor.

    Factors ``G = B^T B`` (Cholesky), reduces ``B`` and returns the column of
    the unimodular transform whose image under ``B`` is shortest.

    Parameters
    ----------
    h :         array-like
                Real channel vector.
    P :         float
                Linear power constraint.
    params :    LllParams, optional
                Defaults to ``delta=0.75``.

    Returns
    -------
    CoefficientVector

    """
    params = LllParams() if params is None else params
    if not isinstance(params, LllParams):
        raise TypeError(f'Expected LllParams, got "{type(params)}"')

    h = utils.parse_channel(h)
    P = utils.parse_power(P)
    nc = normalize_channel(h, P)

    # Raises LinAlgError if G is numerically not positive definite
    B = scipy.linalg.cholesky(gram_matrix(nc, None), lower=False)
    _, U = lll_reduce(B, delta=params.delta)

    f = quadratic_forms(nc, U.T)
    a = U[:, int(np.argmin(f))]

    return make_coefficient(nc, utils.sign_normalize(a, h))
