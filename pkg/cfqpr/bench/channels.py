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

__all__ = ['generate_channels']


def generate_channels(L, trials, seed):
    """Generate i.i.d. standard Gaussian channel vectors.

    Uses numpy's ``Generator`` on top of the counter-based ``Philox`` bit
    generator keyed by ``seed``. Row ``i`` only depends on ``(L, seed, i)``,
    i.e. asking for more trials extends the sample without changing the
    leading rows.

    Parameters
    ----------
    L :         int
                Dimension of each channel vector (>= 2).
    trials :    int
                Number of channel vectors.
    seed :      int
                64-bit seed.

    Returns
    -------
    np.ndarray
                (trials, L) float64 array; each row is one channel vector.

    """
    if int(L) != L or L < 2:
        raise ValueError(f'L must be an integer >= 2, got {L}')
    if int(trials) != trials or trials < 1:
        raise ValueError(f'trials must be an integer >= 1, got {trials}')

    rng = np.random.Generator(np.random.Philox(key=int(seed) % 2 ** 64))
    H = rng.standard_normal((int(trials), int(L)))

    # Zero vectors have probability zero but would be rejected downstream
    zero = ~np.any(H, axis=1)
    while np.any(zero):
        H[zero] = rng.standard_normal((int(zero.sum()), int(L)))
        zero = ~np.any(H, axis=1)

    return H
