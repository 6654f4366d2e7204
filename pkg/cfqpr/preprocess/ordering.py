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

__all__ = ['PreprocessRecord', 'to_nonneg_ordered', 'recover_coefficients',
           'push_coefficients', 'apply_record', 'is_nonneg_ordered']


@dataclass(frozen=True, eq=False)
class PreprocessRecord:
    """Signs and ordering needed to undo the nonnegative-ordered transform.

    Attributes
    ----------
    signs :     np.ndarray
                (L, ) of +1/-1: ``sign(h)`` with ``sign(0) := +1``.
    perm :      np.ndarray
                (L, ) 0-based indices such that ``hbar[l] = |h[perm[l]]|``.

    """

    signs: np.ndarray
    perm: np.ndarray

    @property
    def L(self):
        return self.perm.shape[0]


def is_nonneg_ordered(x):
    """Check if all entries are nonnegative and nondecreasing."""
    x = np.asarray(x)
    return bool(np.all(x >= 0) and np.all(np.diff(x) >= 0))


def to_nonneg_ordered(h):
    """Transform channel into its nonnegative ordered form.

    Equal magnitudes keep their original relative order (stable sort), which
    keeps ``perm`` deterministic. The signed permutation matrix is never
    materialized.

    Parameters
    ----------
    h :         array-like
                Real channel vector.

    Returns
    -------
    hbar :      np.ndarray
                ``|h|`` sorted in ascending order.
    record :    PreprocessRecord

    Examples
    --------
    >>> from cfqpr import preprocess
    >>> hbar, rec = preprocess.to_nonneg_ordered([-1.9, 0.1, 1.1])
    >>> hbar
    array([0.1, 1.1, 1.9])
    >>> rec.signs, rec.perm
    (array([-1,  1,  1]), array([1, 2, 0]))

    """
    h = utils.parse_channel(h)

    signs = np.where(h < 0, -1, 1).astype(np.int64)
    absh = np.abs(h)
    perm = np.argsort(absh, kind='stable')

    return absh[perm], PreprocessRecord(signs=signs, perm=perm)


def recover_coefficients(abar, rec):
    """Map coefficient vector for ``hbar`` back to the original channel.

    Computes ``a[perm[l]] = signs[perm[l]] * abar[l]``.

    Parameters
    ----------
    abar :      array-like
                Integer coefficient vector for the ordered channel.
    rec :       PreprocessRecord

    Returns
    -------
    np.ndarray
                (L, ) int64 coefficient vector for ``h``.

    """
    if not isinstance(rec, PreprocessRecord):
        raise TypeError(f'Expected PreprocessRecord, got "{type(rec)}"')

    abar = utils.parse_coefficients(abar, L=rec.L, allow_zero=True)

    a = np.empty_like(abar)
    a[rec.perm] = rec.signs[rec.perm] * abar
    return a


def push_coefficients(a, rec):
    """Map coefficient vector for ``h`` onto the ordered channel.

    Inverse of :func:`recover_coefficients`.
    """
    if not isinstance(rec, PreprocessRecord):
        raise TypeError(f'Expected PreprocessRecord, got "{type(rec)}"')

    a = utils.parse_coefficients(a, L=rec.L, allow_zero=True)
    return rec.signs[rec.perm] * a[rec.perm]


def apply_record(hbar, rec):
    """Reconstruct the original channel from ``hbar`` and its record."""
    hbar = np.asarray(hbar, dtype=float)
    if hbar.shape != rec.perm.shape:
        raise ValueError(f'Dimension mismatch: hbar has shape {hbar.shape}, '
                         f'record has length {rec.L}')
    h = np.empty_like(hbar)
    h[rec.perm] = rec.signs[rec.perm] * hbar
    return h
