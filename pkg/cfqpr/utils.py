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
"""Collection of utility functions."""

import logging
import math
import numbers
import os

import numpy as np

from functools import wraps

use_pbars = True

logger = logging.getLogger('cfqpr')
if not logger.handlers:
    _sh = logging.StreamHandler()
    _sh.setFormatter(logging.Formatter('%(levelname)-5s : %(message)s (%(name)s)'))
    logger.addHandler(_sh)
    logger.setLevel(logging.WARNING)

# Defaults that can be overridden from the environment
DEFAULT_SEED = int(os.environ.get('CFQPR_SEED', 20150701))
DEFAULT_TRIALS = int(os.environ.get('CFQPR_TRIALS', 10000))


def set_loggers(level='INFO'):
    """Set the level of the ``cfqpr`` logger.

    Parameters
    ----------
    level :     str | int
                Any level understood by ``logging``, e.g. "DEBUG", "INFO",
                "WARNING" or ``logging.ERROR``.

    """
    if isinstance(level, str):
        level = level.upper()
    logger.setLevel(level)


def quiet(function):
    """Decorate to silence the ``cfqpr`` logger for the duration of a call."""
    @wraps(function)
    def wrapper(*args, **kwargs):
        old_lvl = logger.level
        logger.setLevel('ERROR')
        try:
            return function(*args, **kwargs)
        finally:
            logger.setLevel(old_lvl)
    return wrapper


def parse_channel(h):
    """Validate a real channel vector and return it as float array.

    Parameters
    ----------
    h :         array-like
                Channel gains to one relay.

    Returns
    -------
    np.ndarray
                (L, ) float64 array.

    """
    if isinstance(h, (str, bytes)):
        raise TypeError(f'Expected channel vector, got "{type(h)}"')

    h = np.asarray(h, dtype=float)

    if h.ndim != 1:
        raise ValueError(f'Channel vector must be 1-dimensional, got shape {h.shape}')
    if h.shape[0] < 2:
        raise ValueError(f'Channel vector must have length >= 2, got {h.shape[0]}')
    if not np.isfinite(h).all():
        raise ValueError('Channel vector must only contain finite entries')
    if not h.any():
        raise ValueError('Channel vector must not be all-zero')

    return h


def parse_power(P):
    """Validate a (linear) power constraint and return it as float."""
    if not isinstance(P, numbers.Real) or isinstance(P, bool):
        raise TypeError(f'Power must be a real number, got "{type(P)}"')
    P = float(P)
    if not math.isfinite(P) or P <= 0:
        raise ValueError(f'Power must be finite and > 0, got {P}')
    return P


def parse_coefficients(a, L=None, allow_zero=False):
    """Validate an integer coefficient vector and return it as int64 array.

    Parameters
    ----------
    a :             array-like
                    Integer coefficient vector.
    L :             int, optional
                    If provided, the expected length.
    allow_zero :    bool
                    If False, the all-zero vector raises a ``ValueError``.

    """
    arr = np.asarray(a)

    if arr.ndim != 1:
        raise ValueError(f'Coefficient vector must be 1-dimensional, got shape {arr.shape}')
    if L is not None and arr.shape[0] != L:
        raise ValueError(f'Dimension mismatch: expected {L} coefficients, '
                         f'got {arr.shape[0]}')
    if arr.dtype.kind == 'f':
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise ValueError('Coefficient vector must be integer-valued')
    elif arr.dtype.kind not in 'iu':
        raise TypeError(f'Coefficient vector must be integer, got dtype "{arr.dtype}"')

    arr = arr.astype(np.int64)

    if not allow_zero and not np.any(arr):
        raise ValueError('Coefficient vector must not be all-zero')

    return arr


def round_half_away(x):
    """Round to nearest integer with halves away from zero.

    ``np.round`` rounds halves to even which is not symmetric in the way we
    need for rounding channel vectors.
    """
    x = np.asarray(x, dtype=float)
    return (np.sign(x) * np.floor(np.abs(x) + 0.5)).astype(np.int64)


def sign_normalize(a, h):
    """Flip ``a`` such that ``h @ a >= 0``.

    If ``h @ a == 0`` the first non-zero entry of ``a`` is made positive.
    """
    a = np.asarray(a)
    d = float(np.dot(h, a))
    if d < 0:
        return -a
    if d == 0:
        nz = np.flatnonzero(a)
        if nz.size and a[nz[0]] < 0:
            return -a
    return a


def db_to_linear(db):
    """Convert power in dB to linear scale."""
    return 10 ** (np.asarray(db, dtype=float) / 10)


def linear_to_db(p):
    """Convert linear power to dB."""
    return 10 * np.log10(np.asarray(p, dtype=float))


def parse_range(s, dtype=int):
    """Parse range string into a list of values.

    Accepts comma-separated values and ``start:stop`` or ``start:step:stop``
    ranges (inclusive), e.g. ``"2,4,8"``, ``"0:5:20"`` or ``"1:10"``.
    """
    if not isinstance(s, str):
        raise TypeError(f'Expected string, got "{type(s)}"')

    values = []
    for part in s.split(','):
        part = part.strip()
        if not part:
            continue
        if ':' in part:
            bits = [dtype(b) for b in part.split(':')]
            if len(bits) == 2:
                start, step, stop = bits[0], 1, bits[1]
            elif len(bits) == 3:
                start, step, stop = bits
            else:
                raise ValueError(f'Unable to parse range "{part}"')
            if step <= 0:
                raise ValueError(f'Range step must be > 0, got "{part}"')
            n = int(np.floor((stop - start) / step + 1e-9)) + 1
            values.extend(dtype(start + i * step) for i in range(max(n, 0)))
        else:
            values.append(dtype(part))

    if not values:
        raise ValueError(f'Range "{s}" is empty')

    return values
