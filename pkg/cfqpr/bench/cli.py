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

"""Command line interface: ``cfqpr <subcommand> ...``."""

import argparse
import sys

from .. import utils
from .methods import METHODS
from .plot import emit_plot_script
from .sweep import (SweepConfig, run_rate_sweep, run_timing,
                    run_k_sensitivity, run_calibration)

__all__ = ['main', 'build_parser']

logger = utils.logger


def _ints(s):
    return utils.parse_range(s, dtype=int)


def _floats(s):
    return utils.parse_range(s, dtype=float)


def _methods(s):
    names = [m.strip() for m in s.split(',') if m.strip()]
    unknown = [m for m in names if m not in METHODS]
    if unknown:
        raise argparse.ArgumentTypeError(f'unknown method(s): {", ".join(unknown)}')
    return names


def _ku_table(s):
    """Parse ``L=K,L=K`` into a dict."""
    table = {}
    for part in s.split(','):
        try:
            L, K = part.split('=')
            table[int(L)] = int(K)
        except ValueError:
            raise argparse.ArgumentTypeError(f'unable to parse K_u entry "{part}"')
    return table


def _add_common(p, trials=True):
    if trials:
        p.add_argument('--trials', type=int, default=utils.DEFAULT_TRIALS,
                       help='channel samples per cell (default: %(default)s)')
    p.add_argument('--seed', type=int, default=utils.DEFAULT_SEED,
                   help='seed for the channel samples (default: %(default)s, '
                        'set via CFQPR_SEED)')
    p.add_argument('--out', '-o', type=str, default=None,
                   help='output CSV (default: stdout)')


def _add_sweep_args(p):
    p.add_argument('--dims', type=_ints, required=True,
                   help='dimensions, e.g. "2,4,8" or "2:16"')
    p.add_argument('--snr-db', type=_floats, default=_floats('0:5:20'),
                   help='powers in dB (default: 0:5:20)')
    p.add_argument('--methods', type=_methods, default=list(METHODS),
                   help=f'comma-separated subset of {",".join(METHODS)}')
    p.add_argument('--ku-table', type=_ku_table, default=None,
                   help='override K_u for QPR, e.g. "4=6,8=8"')
    p.add_argument('--lll-delta', type=float, default=0.75,
                   help='Lovasz parameter for LLL (default: %(default)s)')
    _add_common(p)


def build_parser():
    parser = argparse.ArgumentParser(
            prog='cfqpr',
            description='Benchmarks for integer coefficient selection in '
                        'compute-and-forward.')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log progress')
    parser.add_argument('--no-progress', action='store_true',
                        help='hide progress bars')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('sweep', help='average rate per (L, SNR, method)')
    _add_sweep_args(p)
    p.add_argument('--max-workers', type=int, default=1,
                   help='processes to fan trials out to (default: %(default)s)')

    p = sub.add_parser('timing', help='single-threaded running times')
    _add_sweep_args(p)

    p = sub.add_parser('ksens', help='QPR rate for different caps K')
    p.add_argument('--dim', type=int, required=True)
    p.add_argument('--k', type=_ints, default=_ints('1:10'),
                   help='caps K (default: 1:10)')
    p.add_argument('--snr-db', type=_floats, default=_floats('0:5:20'))
    _add_common(p)

    p = sub.add_parser('calibrate-ku', help='calibrate K_u per dimension')
    p.add_argument('--dims', type=_ints, default=_ints('2:16'))
    p.add_argument('--snr-db', type=float, default=20.0)
    p.add_argument('--k-max', type=int, default=16)
    _add_common(p)

    p = sub.add_parser('plot', help='write gnuplot script for a sweep CSV')
    p.add_argument('--csv', type=str, required=True)
    p.add_argument('--out', '-o', type=str, default=None,
                   help='script file (default: CSV name with .gp suffix)')

    return parser


def _write(df, out):
    if out:
        df.to_csv(out, index=False)
        logger.info(f'Results written to "{out}"')
    else:
        df.to_csv(sys.stdout, index=False)


def main(argv=None):
    """Run the command line interface and return the exit code."""
    args = build_parser().parse_args(argv)

    if args.verbose:
        utils.set_loggers('INFO')
    progress = not args.no_progress

    try:
        if args.command == 'plot':
            path = emit_plot_script(args.csv, out=args.out)
            print(path)
            return 0

        if args.command in ('sweep', 'timing'):
            cfg = SweepConfig(dims=args.dims, snr_db=args.snr_db,
                              trials=args.trials, methods=args.methods,
                              seed=args.seed, ku_table=args.ku_table,
                              lll_delta=args.lll_delta,
                              max_workers=getattr(args, 'max_workers', 1))
            run = run_rate_sweep if args.command == 'sweep' else run_timing
            df = run(cfg, progress=progress)
            _write(df, args.out)

            failures = df.attrs.get('failures', [])
            for f in failures:
                logger.error(f'Failed: L={f["L"]}, {f["snr_db"]} dB, '
                             f'{f["method"]}: {f["error"]}')
            return 1 if failures else 0

        if args.command == 'ksens':
            df = run_k_sensitivity(args.dim, args.snr_db, args.k,
                                   trials=args.trials, seed=args.seed,
                                   progress=progress)
        else:
            df = run_calibration(args.dims, snr_db=args.snr_db,
                                 trials=args.trials, seed=args.seed,
                                 k_max=args.k_max, progress=progress)
        _write(df, args.out)
        return 0
    except (ValueError, TypeError, OSError) as e:
        logger.error(str(e))
        return 2


if __name__ == '__main__':
    sys.exit(main())
