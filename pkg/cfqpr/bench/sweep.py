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

"""Monte-Carlo rate, timing, K-sensitivity and K_u calibration runs."""

import time
import warnings

import numpy as np
import pandas as pd

from concurrent import futures
from dataclasses import dataclass, field, asdict
from tqdm.auto import tqdm

from .. import utils
from ..qpr import qpr_rates_by_cap, calibrate_ku, KU_TABLE
from .channels import generate_channels
from .methods import METHODS, prepare_method, prepare_batch, max_dim

__all__ = ['SweepConfig', 'SweepRow', 'SWEEP_COLUMNS', 'run_rate_sweep',
           'run_timing', 'run_k_sensitivity', 'run_calibration']

logger = utils.logger

SWEEP_COLUMNS = ['L', 'snr_db', 'method', 'trials', 'avg_rate', 'total_time_ns']


@dataclass
class SweepConfig:
    """Parameters of a Monte-Carlo sweep.

    Attributes
    ----------
    dims :          list of int
                    Dimensions L.
    snr_db :        list of float
                    Powers in dB (``P = 10^(dB/10)``).
    trials :        int
                    Channel samples per (L, P). The same sample is used for
                    every method and every SNR of a given L.
    methods :       list of str
                    Names of registered methods.
    seed :          int
                    Seed for the channel samples.
    ku_table :      dict, optional
                    Overrides the shipped ``K_u`` for the QPR method.
    lll_delta :     float
                    Lovasz parameter for the LLL method.
    max_workers :   int
                    If > 1, trials are fanned out over a process pool.

    """

    dims: list
    snr_db: list
    trials: int = utils.DEFAULT_TRIALS
    methods: list = field(default_factory=lambda: ['qpr', 'exhaustive', 'rounding',
                                                   'qs', 'lll'])
    seed: int = utils.DEFAULT_SEED
    ku_table: dict = None
    lll_delta: float = 0.75
    max_workers: int = 1

    def __post_init__(self):
        self.dims = [int(L) for L in self.dims]
        self.snr_db = [float(s) for s in self.snr_db]
        self.methods = list(self.methods)

        if not self.dims or not self.snr_db or not self.methods:
            raise ValueError('dims, snr_db and methods must not be empty')
        if any(L < 2 for L in self.dims):
            raise ValueError(f'All dimensions must be >= 2, got {self.dims}')
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f'trials must be an integer >= 1, got {self.trials}')
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ValueError(f'Unknown method(s): {", ".join(unknown)}. '
                             f'Available: {", ".join(METHODS)}')
        if self.max_workers < 1:
            raise ValueError(f'max_workers must be >= 1, got {self.max_workers}')

    @property
    def options(self):
        """Options passed to the methods' setup."""
        return {'ku_table': self.ku_table, 'lll_delta': self.lll_delta}


@dataclass(frozen=True)
class SweepRow:
    """One (L, SNR, method) cell of a sweep."""

    L: int
    snr_db: float
    method: str
    trials: int
    avg_rate: float
    total_time_ns: int


def _prepare(name, L, options):
    """Return ``rates(H, P)`` for method ``name``, vectorized if possible."""
    batch = prepare_batch(name, L, **options)
    if batch is not None:
        return lambda H, P: np.asarray(batch(H, P).rate, dtype=float)

    func = prepare_method(name, L, **options)
    return lambda H, P: np.array([func(h, P).rate for h in H])


def _rate_chunk(name, L, options, H, P):
    """Worker: prepare method and compute rates for a chunk of channels."""
    return _prepare(name, L, options)(H, P)


def _run_cell(name, L, options, H, P, max_workers):
    """Rates of all trials plus wall time in nanoseconds."""
    if max_workers <= 1:
        rates_of = _prepare(name, L, options)
        start = time.perf_counter_ns()
        rates = rates_of(H, P)
        return rates, time.perf_counter_ns() - start

    chunks = np.array_split(H, max_workers * 4)
    start = time.perf_counter_ns()
    with futures.ProcessPoolExecutor(max_workers=max_workers) as ex:
        jobs = [ex.submit(_rate_chunk, name, L, options, c, P) for c in chunks]
        # Keep chunk order for a fixed reduction order
        rates = np.concatenate([j.result() for j in jobs])
    return rates, time.perf_counter_ns() - start


def _sweep(cfg, channels=None, max_workers=1, progress=True):
    rows = []
    failures = []

    cells = [(L, s, m) for L in cfg.dims for s in cfg.snr_db for m in cfg.methods]
    samples = {}
    with tqdm(total=len(cells), desc='Sweep', leave=False,
              disable=not progress or not utils.use_pbars) as pbar:
        for L, snr, name in cells:
            pbar.update(1)
            md = max_dim(name)
            if md is not None and L > md:
                warnings.warn(f'Skipping method "{name}" for L={L}: supports '
                              f'only L <= {md}')
                continue

            if L not in samples:
                if channels is not None and L in channels:
                    samples[L] = np.asarray(channels[L], dtype=float)
                else:
                    samples[L] = generate_channels(L, cfg.trials, cfg.seed)
            H = samples[L]
            P = float(utils.db_to_linear(snr))

            try:
                rates, t_ns = _run_cell(name, L, cfg.options, H, P, max_workers)
            except Exception as e:
                logger.error(f'L={L}, {snr} dB, "{name}" failed: {e}')
                failures.append({'L': L, 'snr_db': snr, 'method': name,
                                 'error': str(e)})
                continue

            rows.append(SweepRow(L=L, snr_db=snr, method=name, trials=len(H),
                                 avg_rate=float(np.mean(rates)),
                                 total_time_ns=int(t_ns)))
            logger.info(f'L={L}, {snr:g} dB, {name}: avg rate '
                        f'{rows[-1].avg_rate:.4f} ({t_ns / 1e9:.2f}s)')

    df = pd.DataFrame([asdict(r) for r in rows], columns=SWEEP_COLUMNS)
    df.attrs['failures'] = failures
    return df


def run_rate_sweep(cfg, out=None, channels=None, progress=True):
    """Average computation rate per (L, SNR, method).

    All methods see the same channel sample for a given L.

    Parameters
    ----------
    cfg :       SweepConfig
    out :       str | pathlib.Path, optional
                If provided, write CSV with columns ``SWEEP_COLUMNS``.
    channels :  dict, optional
                Map ``L -> (trials, L) array`` to use instead of generated
                channels.
    progress :  bool
                Whether to show a progress bar.

    Returns
    -------
    pandas.DataFrame
                One row per cell. Failed cells are not included but listed in
                ``df.attrs['failures']``.

    """
    if not isinstance(cfg, SweepConfig):
        raise TypeError(f'Expected SweepConfig, got "{type(cfg)}"')

    df = _sweep(cfg, channels=channels, max_workers=cfg.max_workers,
                progress=progress)
    if out:
        df.to_csv(out, index=False)
    return df


def run_timing(cfg, out=None, channels=None, progress=True):
    """Like :func:`run_rate_sweep` but always single-threaded.

    ``total_time_ns`` is the wall time of running a method over the full
    sample. Method setup (e.g. ``K_u`` lookup) happens once, outside of the
    timed loop. Methods with a vectorized implementation (see
    :func:`~cfqpr.bench.register_method`) process the sample in one call.
    """
    if not isinstance(cfg, SweepConfig):
        raise TypeError(f'Expected SweepConfig, got "{type(cfg)}"')

    df = _sweep(cfg, channels=channels, max_workers=1, progress=progress)
    if out:
        df.to_csv(out, index=False)
    return df


def run_k_sensitivity(L, snr_db, ks, trials=utils.DEFAULT_TRIALS, seed=None,
                      out=None, progress=True):
    """Average QPR rate for different caps ``K``.

    Parameters
    ----------
    L :         int
                Dimension.
    snr_db :    list of float
                Powers in dB.
    ks :        list of int
                Caps for the number of candidates (>= 1).
    trials :    int
    seed :      int, optional
                Defaults to ``CFQPR_SEED``.
    out :       str | pathlib.Path, optional
                If provided, write CSV.

    Returns
    -------
    pandas.DataFrame
                Columns ``L, snr_db, K, trials, avg_rate``.

    """
    ks = [int(k) for k in ks]
    if not ks or min(ks) < 1:
        raise ValueError(f'K values must be >= 1, got {ks}')

    seed = utils.DEFAULT_SEED if seed is None else seed
    H = generate_channels(L, trials, seed)
    k_max = max(ks)

    rows = []
    for snr in tqdm(snr_db, desc='SNR', leave=False,
                    disable=not progress or not utils.use_pbars):
        P = float(utils.db_to_linear(snr))
        rates = np.stack([qpr_rates_by_cap(h, P, k_max) for h in H])
        avg = rates.mean(axis=0)
        for k in ks:
            rows.append({'L': int(L), 'snr_db': float(snr), 'K': k,
                         'trials': int(trials), 'avg_rate': float(avg[k - 1])})

    df = pd.DataFrame(rows, columns=['L', 'snr_db', 'K', 'trials', 'avg_rate'])
    if out:
        df.to_csv(out, index=False)
    return df


def run_calibration(dims, snr_db=20, trials=utils.DEFAULT_TRIALS, seed=None,
                    k_max=16, out=None, progress=True):
    """Calibrate ``K_u`` for several dimensions.

    Returns
    -------
    pandas.DataFrame
                Columns ``L, K_u, table_K_u`` (the latter is the shipped
                value, ``NaN`` if none).

    """
    P = float(utils.db_to_linear(snr_db))
    rows = []
    for L in dims:
        ku = calibrate_ku(int(L), P=P, trials=trials, seed=seed, k_max=k_max,
                          progress=progress)
        rows.append({'L': int(L), 'K_u': ku, 'table_K_u': KU_TABLE.get(int(L), np.nan)})

    df = pd.DataFrame(rows, columns=['L', 'K_u', 'table_K_u'])
    if out:
        df.to_csv(out, index=False)
    return df
