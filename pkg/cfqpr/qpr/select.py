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
import numbers
import warnings

import numpy as np

from dataclasses import dataclass, field
from tqdm.auto import tqdm

from .. import utils
from ..core import NormalizedChannel, CoefficientVector, rate_from_form
from .quantize import _quantize
from .relaxation import _base, _determine_k

__all__ = ['CandidateSet', 'SelectionBatch', 'KU_TABLE', 'KU_FALLBACK',
           'default_ku', 'quantized_candidates', 'qpr_select',
           'qpr_select_many', 'qpr_rates_by_cap', 'calibrate_ku']

logger = utils.logger

# Calibrated caps for i.i.d. standard Gaussian channels (20 dB criterion)
KU_TABLE = {2: 2, 3: 3, 4: 4, 5: 5, 6: 5, 7: 5, 8: 6, 9: 6, 10: 6,
            11: 6, 12: 7, 13: 6, 14: 6, 15: 6, 16: 4}

# Used for dimensions outside of the table. Heuristic: the table plateaus
# around 6-7 and the bound on |floor(K a1)|^2 still applies.
KU_FALLBACK = 8


@dataclass(frozen=True, eq=False)
class CandidateSet:
    """Quantized candidates for ``k = 1..k_max``.

    Attributes
    ----------
    k_max :         int
                    ``K``, the number of candidates.
    candidates :    list of np.ndarray
                    ``candidates[k - 1]`` is the quantized ``k * a1``.
    f :             np.ndarray
                    (k_max, ) quadratic form of each candidate.

    """

    k_max: int
    candidates: list = field(default_factory=list)
    f: np.ndarray = None

    def __len__(self):
        return len(self.candidates)

    def best(self):
        """Return ``(k, candidate, f)`` of the best candidate (smallest k on ties)."""
        ix = int(np.argmin(self.f))
        return ix + 1, self.candidates[ix], float(self.f[ix])


@dataclass(frozen=True, eq=False)
class SelectionBatch:
    """QPR selections for a stack of channels.

    Attributes
    ----------
    a :     np.ndarray
            (N, L) int64 coefficient vectors.
    f :     np.ndarray
            (N, ) quadratic forms.
    rate :  np.ndarray
            (N, ) computation rates.
    K :     np.ndarray
            (N, ) number of candidates.
    k :     np.ndarray
            (N, ) winning candidate (0 if ``e_L`` was kept).

    """

    a: np.ndarray
    f: np.ndarray
    rate: np.ndarray
    K: np.ndarray
    k: np.ndarray

    def __len__(self):
        return self.a.shape[0]


def default_ku(L):
    """Return the shipped ``K_u`` for dimension ``L``.

    Falls back to ``KU_FALLBACK`` for dimensions outside of ``KU_TABLE``.
    """
    if not isinstance(L, numbers.Integral) or L < 2:
        raise ValueError(f'L must be an integer >= 2, got {L}')
    return KU_TABLE.get(int(L), KU_FALLBACK)


def _parse_ku(K_u, L):
    if K_u is None:
        return default_ku(L)
    if not isinstance(K_u, numbers.Integral) or K_u < 1:
        raise ValueError(f'K_u must be a positive integer, got {K_u}')
    return int(K_u)


def _forms(u, a1, K):
    """Quantize ``k * a1`` for ``k = 1..K``. Yields ``(f, w)`` pairs."""
    for k in range(1, K + 1):
        w = [k * x for x in a1]
        # Last entry must be exactly k
        w[-1] = k
        d = _quantize(w, u)
        n = 0
        for x in w:
            n += x * x
        yield n - d * d, w


def quantized_candidates(u, base, K):
    """Quantize the scaled relaxations ``k * a1`` for ``k = 1..K``.

    Parameters
    ----------
    u :         NormalizedChannel
                Normalized nonnegative ordered channel.
    base :      BaseSolution
    K :         int
                Number of candidates.

    Returns
    -------
    CandidateSet

    """
    if not isinstance(u, NormalizedChannel):
        raise TypeError(f'Expected NormalizedChannel, got "{type(u)}"')

    candidates = []
    f = np.empty(K)
    for i, (fk, w) in enumerate(_forms(u.u.tolist(), base.a1.tolist(), K)):
        f[i] = fk
        candidates.append(np.array(w, dtype=np.int64))

    return CandidateSet(k_max=K, candidates=candidates, f=f)


def _setup(hl, P):
    """Order, normalize and relax channel ``hl`` (list of floats).

    Returns ``(order, b, u, a1)`` where ``order`` sorts ``|h|`` ascending
    (stable) and ``u``/``a1`` refer to the ordered channel.
    """
    order = sorted(range(len(hl)), key=lambda i: abs(hl[i]))
    norm_sq = 0.0
    for x in hl:
        norm_sq += x * x
    b = 1 + P * norm_sq
    c = math.sqrt(P / b)
    u = [c * abs(hl[i]) for i in order]
    return order, b, u, _base(u)


def qpr_select(h, P, K_u=None):
    """Select a coefficient vector using the QP relaxation method.

    Steps:

     1. Preprocess ``h`` into nonnegative ordered ``hbar``.
     2. Compute the closed-form base relaxation ``a1``.
     3. Determine ``K <= K_u`` via bisection.
     4. Quantize ``k * a1`` for ``k = 1..K``.
     5. Pick the candidate with the smallest quadratic form. The record is
        initialized with ``e_L`` which guarantees a strictly positive rate.
     6. Recover the coefficient vector for ``h``.

    All of this runs on plain floats: for vectors this short numpy's
    per-call overhead would dominate.

    Parameters
    ----------
    h :         array-like
                Real channel vector.
    P :         float
                Linear power constraint.
    K_u :       int, optional
                Cap for the number of candidates. If ``None`` will use
                ``default_ku(len(h))``.

    Returns
    -------
    CoefficientVector
                ``meta`` contains ``K`` (number of candidates) and ``k`` (the
                winning candidate, 0 if ``e_L`` was kept).

    See Also
    --------
    :func:`qpr_select_many`
                Same selection for a stack of channels.

    Examples
    --------
    >>> from cfqpr import qpr
    >>> qpr.qpr_select([-1.9, 0.1, 1.1], 10).a
    array([-2,  0,  1])

    """
    hl = utils.parse_channel(h).tolist()
    P = utils.parse_power(P)
    L = len(hl)
    K_u = _parse_ku(K_u, L)

    order, b, u, a1 = _setup(hl, P)
    K = _determine_k(a1, b, K_u)

    # Start from e_L
    best = None
    f_min = 1 - u[-1] * u[-1]
    best_k = 0
    for k, (f, w) in enumerate(_forms(u, a1, K), start=1):
        if f < f_min:
            best, f_min, best_k = w, f, k

    if best is None:
        best = [0] * (L - 1) + [1]

    a = [0] * L
    for l, i in enumerate(order):
        a[i] = -best[l] if hl[i] < 0 else best[l]

    # f < 1 implies |a|^2 < b, so no separate check for the zero-rate bound
    return CoefficientVector(a=np.array(a, dtype=np.int64), f=f_min,
                             rate=rate_from_form(f_min),
                             meta={'K': K, 'k': best_k})


def _parse_channels(H):
    H = np.asarray(H, dtype=float)
    if H.ndim != 2:
        raise ValueError(f'Expected (N, L) array of channels, got shape {H.shape}')
    if H.shape[1] < 2:
        raise ValueError(f'Channel vectors must have length >= 2, got {H.shape[1]}')
    if not np.isfinite(H).all():
        raise ValueError('Channel vectors must only contain finite entries')
    if not H.any(axis=1).all():
        raise ValueError('Channel vectors must not be all-zero')
    return H


def qpr_select_many(H, P, K_u=None):
    """Run :func:`qpr_select` for each row of ``H`` at once.

    Vectorized over the channels: the loops only run over ``k`` and the
    entries of a single channel. Sums are accumulated in the same order as
    in :func:`qpr_select`, so the selected vectors are the same.

    Parameters
    ----------
    H :         (N, L) array-like
                Stack of real channel vectors.
    P :         float
                Linear power constraint.
    K_u :       int, optional
                Cap for the number of candidates. If ``None`` will use
                ``default_ku(L)``.

    Returns
    -------
    SelectionBatch

    Examples
    --------
    >>> from cfqpr import qpr
    >>> qpr.qpr_select_many([[-1.9, 0.1, 1.1], [0, 0, 1]], 10).a
    array([[-2,  0,  1],
           [ 0,  0,  1]])

    """
    H = _parse_channels(H)
    P = utils.parse_power(P)
    N, L = H.shape
    K_u = _parse_ku(K_u, L)

    absH = np.abs(H)
    perm = np.argsort(absH, axis=1, kind='stable')
    hbar = np.take_along_axis(absH, perm, axis=1)

    norm_sq = np.zeros(N)
    for j in range(L):
        norm_sq = norm_sq + H[:, j] * H[:, j]
    b = 1 + P * norm_sq
    U = np.sqrt(P / b)[:, None] * hbar

    head_sq = np.zeros(N)
    for j in range(L - 1):
        head_sq = head_sq + U[:, j] * U[:, j]
    # Head of a1; the last entry is 1
    A1 = (U[:, -1] / (1 - head_sq))[:, None] * U[:, :-1]

    # Largest k <= K_u with |floor(k a1)|^2 < b (monotonic in k), or 1
    K = np.ones(N, dtype=np.int64)
    for k in range(2, K_u + 1):
        n = np.zeros(N)
        for j in range(L - 1):
            fl = np.floor(k * A1[:, j])
            n = n + fl * fl
        K = np.where(n + k * k < b, k, K)

    # Start from e_L
    f_min = 1 - U[:, -1] * U[:, -1]
    best_k = np.zeros(N, dtype=np.int64)
    best = np.zeros((N, L - 1))
    for k in range(1, K_u + 1):
        W = k * A1
        d = np.zeros(N)
        for j in range(L - 1):
            d = d + W[:, j] * U[:, j]
        d = d + k * U[:, -1]

        for l in range(L - 1):
            v = W[:, l]
            fl = np.floor(v)
            ul = U[:, l]
            d = d + (fl - v) * ul
            # Strictly negative means ceil is better; integral entries stay
            ceil = (fl != v) & (2 * fl - 2 * d * ul + 1 - ul * ul < 0)
            W[:, l] = fl + ceil
            d = np.where(ceil, d + ul, d)

        n = np.zeros(N)
        for j in range(L - 1):
            n = n + W[:, j] * W[:, j]
        f = (n + k * k) - d * d

        better = (k <= K) & (f < f_min)
        f_min = np.where(better, f, f_min)
        best_k = np.where(better, k, best_k)
        best = np.where(better[:, None], W, best)

    abar = np.empty((N, L), dtype=np.int64)
    abar[:, :-1] = best
    abar[:, -1] = np.where(best_k > 0, best_k, 1)

    signs = np.where(H < 0, -1, 1)
    a = np.empty_like(abar)
    np.put_along_axis(a, perm, np.take_along_axis(signs, perm, axis=1) * abar,
                      axis=1)

    rate = np.array([rate_from_form(f) for f in f_min.tolist()])

    return SelectionBatch(a=a, f=f_min, rate=rate, K=K, k=best_k)


def qpr_rates_by_cap(h, P, k_max):
    """QPR rate for every cap ``K_u = 1..k_max`` in a single pass.

    Equivalent to ``[qpr_select(h, P, K_u=c).rate for c in range(1, k_max + 1)]``
    but quantizes each candidate only once.

    Returns
    -------
    np.ndarray
                (k_max, ) rates; entry ``c - 1`` is the rate with cap ``c``.

    """
    hl = utils.parse_channel(h).tolist()
    P = utils.parse_power(P)
    k_max = _parse_ku(k_max, len(hl))

    _, b, u, a1 = _setup(hl, P)
    K_full = _determine_k(a1, b, k_max)

    # Running minimum over e_L and the candidates k = 1..K_full
    f_run = [1 - u[-1] * u[-1]]
    for f, _ in _forms(u, a1, K_full):
        f_run.append(f if f < f_run[-1] else f_run[-1])

    return np.array([rate_from_form(f_run[min(c, K_full)])
                     for c in range(1, k_max + 1)])


def calibrate_ku(L, P=100, trials=10000, seed=None, k_max=16, threshold=0.99,
                 progress=True):
    """Determine ``K_u`` for dimension ``L`` by Monte-Carlo simulation.

    ``K_u`` is the smallest cap whose average rate is greater than
    ``threshold`` times the average rate with cap ``K_u + 1``, both on the same
    seeded sample of i.i.d. standard Gaussian channels.

    Parameters
    ----------
    L :         int
                Dimension.
    P :         float
                Linear power. Defaults to 100 (20 dB).
    trials :    int
                Number of channel samples.
    seed :      int, optional
                Seed for the channel sample. Defaults to ``CFQPR_SEED``.
    k_max :     int
                Largest cap considered.
    threshold : float
                Relative rate criterion.
    progress :  bool
                Whether to show a progress bar.

    Returns
    -------
    int

    """
    # Avoid circular import
    from ..bench.channels import generate_channels

    if trials < 1:
        raise ValueError(f'trials must be >= 1, got {trials}')
    if trials < 1000:
        logger.warning(f'Calibrating K_u with only {trials} trials - results '
                       'will be noisy.')

    seed = utils.DEFAULT_SEED if seed is None else seed
    channels = generate_channels(L, trials, seed)

    rates = np.empty((trials, k_max + 1))
    for i, h in enumerate(tqdm(channels,
                               desc=f'Calibrating L={L}',
                               disable=not progress or not utils.use_pbars,
                               leave=False)):
        rates[i] = qpr_rates_by_cap(h, P, k_max + 1)

    avg = rates.mean(axis=0)
    for k in range(1, k_max + 1):
        if avg[k - 1] > threshold * avg[k]:
            logger.info(f'L={L}: K_u={k} (avg rate {avg[k - 1]:.4f} vs '
                        f'{avg[k]:.4f} at K={k + 1})')
            return k

    warnings.warn(f'K_u calibration for L={L} did not converge up to '
                  f'k_max={k_max}')
    return k_max
