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

"""Turn sweep CSVs into standalone gnuplot scripts."""

import math
import pathlib
import re

import pandas as pd

from .. import utils
from .sweep import SWEEP_COLUMNS

__all__ = ['emit_plot_script', 'read_sweep_csv']

logger = utils.logger

# Order in which methods show up in legends
_METHOD_ORDER = ['qpr', 'exhaustive', 'lll', 'qs', 'rounding']


def read_sweep_csv(csv_path):
    """Read and validate a sweep CSV.

    Raises
    ------
    ValueError
                If the file is empty, lacks columns of the sweep schema or
                has no data rows.

    """
    try:
        df = pd.read_csv(csv_path)
    except pd.errors.EmptyDataError:
        raise ValueError(f'"{csv_path}" is empty')
    except pd.errors.ParserError as e:
        raise ValueError(f'Unable to parse "{csv_path}": {e}')

    missing = [c for c in SWEEP_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f'"{csv_path}" is missing column(s): {", ".join(missing)}')
    if df.empty:
        raise ValueError(f'"{csv_path}" has no data rows')

    try:
        df = df.astype({'L': int, 'snr_db': float, 'method': str,
                        'avg_rate': float, 'total_time_ns': 'int64'})
    except (TypeError, ValueError) as e:
        raise ValueError(f'"{csv_path}" has malformed values: {e}')

    return df


def _sorted_methods(methods):
    known = [m for m in _METHOD_ORDER if m in methods]
    return known + sorted(m for m in methods if m not in _METHOD_ORDER)


def _block_name(*parts):
    return re.sub(r'\W', '_', '_'.join(str(p) for p in parts))


def _datablock(name, rows):
    lines = [f'${name} << EOD']
    lines += [' '.join(f'{v:.10g}' if isinstance(v, float) else str(v) for v in r)
              for r in rows]
    lines.append('EOD')
    return lines


def _grid(n):
    cols = 1 if n == 1 else 2
    return math.ceil(n / cols), cols


def emit_plot_script(csv_path, out=None):
    """Write a gnuplot script rendering the figures of a sweep.

    The CSV data is embedded as inline datablocks so the script does not
    depend on the CSV afterwards. Two figures are produced:

      1. average rate vs SNR, one panel per L (a 2x2 grid for four dims)
      2. total running time vs L for every method (log scale), one curve per
         (method, SNR)

    Parameters
    ----------
    csv_path :  str | pathlib.Path
                CSV written by :func:`~cfqpr.bench.run_rate_sweep` or
                :func:`~cfqpr.bench.run_timing`.
    out :       str | pathlib.Path, optional
                Script file. Defaults to ``csv_path`` with ``.gp`` suffix.

    Returns
    -------
    pathlib.Path
                Path of the written script.

    """
    csv_path = pathlib.Path(csv_path)
    df = read_sweep_csv(csv_path)
    out = csv_path.with_suffix('.gp') if out is None else pathlib.Path(out)

    dims = sorted(df.L.unique())
    methods = _sorted_methods(df.method.unique())
    stem = out.with_suffix('').name

    lines = [f'# Generated by cfqpr from {csv_path.name}',
             "set terminal pngcairo size 1000,800 enhanced font 'Sans,10'",
             'set key left top',
             'set grid', '']

    # Data
    for L in dims:
        for m in methods:
            this = df[(df.L == L) & (df.method == m)].sort_values('snr_db')
            if this.empty:
                continue
            rows = [(float(r.snr_db), float(r.avg_rate), int(r.total_time_ns))
                    for r in this.itertuples()]
            lines += _datablock(_block_name('rate', f'L{L}', m), rows)
    lines.append('')

    # Rate vs SNR
    nrows, ncols = _grid(len(dims))
    lines += [f"set output '{stem}_rate.png'",
              f"set multiplot layout {nrows},{ncols} title 'Average computation rate'",
              "set xlabel 'P (dB)'",
              "set ylabel 'Average rate (bits)'"]
    for L in dims:
        series = [f"${_block_name('rate', f'L{L}', m)} using 1:2 with linespoints title '{m}'"
                  for m in methods if not df[(df.L == L) & (df.method == m)].empty]
        lines += [f"set title 'L = {L}'",
                  'plot ' + ', \\\n     '.join(series)]
    lines += ['unset multiplot', '']

    # Running time vs L: one curve per (method, SNR)
    lines += [f"set output '{stem}_time.png'",
              "set title 'Running time'",
              "set xlabel 'L'",
              "set ylabel 'Time (s)'",
              'set logscale y']
    series = []
    for m in methods:
        for snr in sorted(df.snr_db.unique()):
            this = df[(df.method == m) & (df.snr_db == snr)].sort_values('L')
            if this.empty:
                continue
            name = _block_name('time', m, len(series))
            lines += _datablock(name, [(int(r.L), r.total_time_ns / 1e9)
                                       for r in this.itertuples()])
            series.append(f"${name} using 1:2 with linespoints "
                          f"title '{m} ({snr:g} dB)'")
    lines += ['plot ' + ', \\\n     '.join(series),
              'unset logscale y', 'unset output', '']

    out.write_text('\n'.join(lines))
    logger.info(f'Plot script written to "{out}"')

    return out
