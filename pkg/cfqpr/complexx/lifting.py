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

"""Complex-valued channels via their real-valued equivalent.

A complex channel ``h`` of length L is handled as the real channel
``[Re(h); -Im(h)]`` of length 2L at per-stream power ``P / 2`` (equal power
on real and imaginary part). The rate reported for a complex channel is the
rate of this real-equivalent model. The second real channel
``[Im(h); Re(h)]`` is never solved: its coefficient vector follows from the
first one by a signed permutation.
"""

import numpy as np

from dataclasses import dataclass

from .. import utils
from ..core import normalize_channel, quadratic_form, rate_from_form
from ..qpr import qpr_select, default_ku

__all__ = ['GaussianIntegerVector', 'parse_complex_channel',
           'complex_to_real_channel', 'complex_coeff', 'complex_quadratic_form',
           'complex_computation_rate', 'lifted_quadratic_form']


@dataclass(frozen=True, eq=False)
class GaussianIntegerVector:
    """Coefficient vector with Gaussian integer entries.

    Attributes
    ----------
    re :        np.ndarray
                (L, ) int64 real parts.
    im :        np.ndarray
                (L, ) int64 imaginary parts.
    f :         float
                Quadratic form under the real-equivalent model.
    rate :      float
                Rate of the real-equivalent model at power ``P / 2``.

    """

    re: np.ndarray
    im: np.ndarray
    f: float = np.nan
    rate: float = 0.0

    def __post_init__(self):
        if not (np.any(self.re) or np.any(self.im)):
            raise ValueError('Gaussian integer vector must not be all-zero')

    @property
    def a(self):
        """As complex array."""
        return self.re + 1j * self.im

    def stacked(self):
        """Real-equivalent coefficient ``[Re(a); -Im(a)]``."""
        return np.concatenate([self.re, -self.im])

    def counterpart(self):
        """Coefficient ``[Im(a); Re(a)]`` for the channel ``[Im(h); Re(h)]``."""
        return np.concatenate([self.im, self.re])


def parse_complex_channel(hc):
    """Validate a complex channel vector.

    Parameters
    ----------
    hc :        array-like | tuple of (re, im)
                Complex vector or a tuple of real and imaginary parts.

    Returns
    -------
    np.ndarray
                (L, ) complex128 array.

    """
    if isinstance(hc, tuple):
        if len(hc) != 2:
            raise ValueError(f'Expected (re, im) tuple, got {len(hc)} elements')
        re = np.asarray(hc[0], dtype=float)
        im = np.asarray(hc[1], dtype=float)
        if re.shape != im.shape:
            raise ValueError(f'Real part {re.shape} and imaginary part '
                             f'{im.shape} differ in shape')
        hc = re + 1j * im
    else:
        hc = np.asarray(hc, dtype=complex)

    if hc.ndim != 1:
        raise ValueError(f'Complex channel must be 1-dimensional, got shape {hc.shape}')
    if hc.shape[0] < 1:
        raise ValueError('Complex channel must not be empty')
    if not np.all(np.isfinite(hc)):
        raise ValueError('Complex channel must only contain finite entries')
    if not np.any(hc):
        raise ValueError('Complex channel must not be all-zero')

    return hc


def complex_to_real_channel(hc):
    """Stack a complex channel into the real channel ``[Re(h); -Im(h)]``.

    Examples
    --------
    >>> from cfqpr import complexx
    >>> complexx.complex_to_real_channel([1, 1j])
    array([ 1.,  0., -0., -1.])

    """
    hc = parse_complex_channel(hc)
    return np.concatenate([hc.real, -hc.imag])


def complex_quadratic_form(hc, a, P):
    """Quadratic form of Gaussian integer ``a`` computed in complex arithmetic.

    ``|a|^2 - (P/2) / (1 + (P/2) |h|^2) * Re(h^H a)^2``.
    """
    hc = parse_complex_channel(hc)
    P = utils.parse_power(P)
    a = np.asarray(a, dtype=complex)
    if a.shape != hc.shape:
        raise ValueError(f'Dimension mismatch: h has shape {hc.shape}, '
                         f'a has shape {a.shape}')
    p = P / 2
    proj = np.vdot(hc, a).real
    norm_h = np.vdot(hc, hc).real
    return float(np.vdot(a, a).real - p / (1 + p * norm_h) * proj ** 2)


def complex_computation_rate(hc, a, P):
    """Rate of Gaussian integer ``a`` under the real-equivalent model."""
    hc = parse_complex_channel(hc)
    P = utils.parse_power(P)
    a = np.asarray(a, dtype=complex)
    if not np.any(a):
        raise ValueError('Coefficient vector must not be all-zero')
    if np.vdot(a, a).real >= 1 + P / 2 * np.vdot(hc, hc).real:
        return 0.0
    return rate_from_form(complex_quadratic_form(hc, a, P))


def complex_coeff(hc, P, K_u=None):
    """Select a Gaussian integer coefficient vector with the QPR method.

    Runs :func:`cfqpr.qpr.qpr_select` on ``[Re(h); -Im(h)]`` with power
    ``P / 2``. The result ``[x; y]`` is interpreted as ``Re(a) = x`` and
    ``Im(a) = -y``.

    Parameters
    ----------
    hc :        array-like | tuple of (re, im)
                Complex channel vector.
    P :         float
                Linear power constraint of the complex codewords.
    K_u :       int, optional
                Cap for the number of candidates. Defaults to
                ``default_ku(2 * L)``.

    Returns
    -------
    GaussianIntegerVector

    """
    hc = parse_complex_channel(hc)
    P = utils.parse_power(P)
    h_real = complex_to_real_channel(hc)
    L = hc.shape[0]

    if K_u is None:
        K_u = default_ku(2 * L)

    res = qpr_select(h_real, P / 2, K_u=K_u)
    x, y = res.a[:L], res.a[L:]

    return GaussianIntegerVector(re=x.copy(), im=-y, f=res.f, rate=res.rate)


def lifted_quadratic_form(hc, a, P):
    """Quadratic form of ``a`` evaluated through the real-equivalent channel.

    Parameters
    ----------
    hc :        array-like | tuple of (re, im)
                Complex channel vector.
    a :         GaussianIntegerVector | array-like
                Gaussian integer coefficients (complex array).
    P :         float
                Linear power constraint of the complex codewords.

    """
    hc = parse_complex_channel(hc)
    P = utils.parse_power(P)
    if isinstance(a, GaussianIntegerVector):
        stacked = a.stacked()
    else:
        a = np.asarray(a, dtype=complex)
        stacked = np.concatenate([a.real, -a.imag])
    nc = normalize_channel(complex_to_real_channel(hc), P / 2)
    return quadratic_form(nc, stacked)
