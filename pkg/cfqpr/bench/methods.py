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

"""Registry of coefficient selection methods available to the benchmarks."""

from collections import namedtuple
from functools import partial

from .. import baselines, qpr

__all__ = ['METHODS', 'register_method', 'prepare_method', 'prepare_batch',
           'max_dim']

# ``batch`` is an optional vectorized ``batch(H, P, **setup_kwargs)`` whose
# result has a ``rate`` array with one entry per row of ``H``
Method = namedtuple('Method', ['func', 'max_dim', 'setup', 'batch'],
                    defaults=[None])


def _no_setup(L, **options):
    return {}


def _qpr_setup(L, ku_table=None, **options):
    return {'K_u': (ku_table or {}).get(L, qpr.default_ku(L))}


def _lll_setup(L, lll_delta=0.75, **options):
    return {'params': baselines.LllParams(delta=lll_delta)}


METHODS = {'qpr': Method(qpr.qpr_select, None, _qpr_setup,
                         qpr.qpr_select_many),
           'exhaustive': Method(baselines.exhaustive_optimal,
                                baselines.MAX_EXHAUSTIVE_DIM, _no_setup),
           'rounding': Method(baselines.rounding_coeff, None, _no_setup),
           'qs': Method(baselines.quantized_search, None, _no_setup),
           'lll': Method(baselines.lll_coeff, None, _lll_setup)}


def register_method(name, func, max_dim=None, setup=None, batch=None):
    """Make a selection method available to the benchmarks.

    Parameters
    ----------
    name :      str
                Name used in ``SweepConfig.methods`` and the CSV output.
    func :      callable
                ``func(h, P, **setup_kwargs) -> CoefficientVector``.
    max_dim :   int, optional
                Largest supported dimension.
    setup :     callable, optional
                ``setup(L, **sweep_options) -> dict`` of keyword arguments
                bound to ``func`` once per dimension.
    batch :     callable, optional
                Vectorized ``batch(H, P, **setup_kwargs)`` over a stack of
                channels, returning an object with a ``rate`` array. Used by
                the sweeps instead of calling ``func`` per channel.

    """
    if not isinstance(name, str) or not name:
        raise TypeError(f'Method name must be a non-empty string, got "{name}"')
    if not callable(func):
        raise TypeError(f'Expected callable, got "{type(func)}"')
    if batch is not None and not callable(batch):
        raise TypeError(f'Expected callable batch, got "{type(batch)}"')
    METHODS[name] = Method(func, max_dim, setup or _no_setup, batch)


def _get(name):
    if name not in METHODS:
        raise ValueError(f'Unknown method "{name}". Available: {", ".join(METHODS)}')
    return METHODS[name]


def max_dim(name):
    """Largest dimension supported by method ``name`` (``None`` if unlimited)."""
    return _get(name).max_dim


def prepare_method(name, L, **options):
    """Run the method's setup once and return ``f(h, P)``.

    Parameters
    ----------
    name :      str
                Registered method.
    L :         int
                Dimension the method will be used for.
    **options
                Sweep options, e.g. ``ku_table`` or ``lll_delta``.

    """
    m = _get(name)
    return partial(m.func, **m.setup(L, **options))


def prepare_batch(name, L, **options):
    """Like :func:`prepare_method` but for the vectorized implementation.

    Returns ``None`` if method ``name`` has none.
    """
    m = _get(name)
    if m.batch is None:
        return None
    return partial(m.batch, **m.setup(L, **options))
