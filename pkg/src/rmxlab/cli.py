"""Command-line driver: sweep / stats / figure / selftest subcommands.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import sweeps
from .core import DecompositionError, derive_stream, is_unitary
from .ensembles import sample_cue, sample_interpolating
from .entanglement import meyer_wallach_q, q_cue_mean
from .pr_circuits import pr_parameter_count, sample_pr_operator


def _build_parser():
    parser = argparse.ArgumentParser(prog="rmxlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a Q-vs-t sweep from a config file")
    p_sweep.add_argument("--config", required=True)

    p_stats = sub.add_parser("stats", help="run a spectral-statistics sweep from a config file")
    p_stats.add_argument("--config", required=True)

    p_fig = sub.add_parser("figure", help="run a named preset sweep")
    p_fig.add_argument("name", choices=sweeps.PRESET_NAMES)
    p_fig.add_argument("--out", required=True, help="output directory")
    p_fig.add_argument("--seed", type=int, default=0)
    p_fig.add_argument("--ops", type=int, default=None, help="override operators per grid point")

    sub.add_parser("selftest", help="run a fast subset of the invariant checks")
    return parser


def _run_sweep_config(config):
    if "q_sweep" in config.stats_flags:
        rows = sweeps.run_q_sweep(config)
        path = Path(f"{config.out_prefix}q_sweep.csv")
        sweeps.write_csv(rows, path)
        print(f"wrote {path} ({len(rows)} rows)")
    other = tuple(f for f in config.stats_flags if f != "q_sweep")
    if other:
        from dataclasses import replace

        written = sweeps.run_stats_sweep(replace(config, stats_flags=other))
        for name, path in written.items():
            print(f"wrote {path} ({name})")


def _selftest():
    rng = derive_stream(7, ("selftest",))
    checks = []
    u = sample_cue(16, rng)
    checks.append(("cue sampler unitary", is_unitary(u)))
    checks.append(("delta=0 ensemble diagonal", np.allclose(
        np.abs(sample_interpolating(8, 0.0, rng)) > 1e-12, np.eye(8, dtype=bool))))
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[-1] = 1 / np.sqrt(2)
    checks.append(("Q(GHZ)=1", abs(meyer_wallach_q(ghz) - 1.0) < 1e-12))
    basis = np.zeros(8, dtype=complex)
    basis[3] = 1.0
    checks.append(("Q(basis)=0", abs(meyer_wallach_q(basis)) < 1e-12))
    checks.append(("CUE mean formula", abs(q_cue_mean(256) - 254.0 / 257.0) < 1e-15))
    checks.append(("PR parameter count", pr_parameter_count(8, 8) == 217))
    pr = sample_pr_operator(3, 2, rng)
    checks.append(("pr sampler unitary", is_unitary(pr)))
    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
        ok = ok and passed
    return ok


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            config = sweeps.load_config(args.config)
            _run_sweep_config(config)
        elif args.command == "stats":
            config = sweeps.load_config(args.config)
            flags = tuple(f for f in config.stats_flags if f != "q_sweep") or (
                "number_variance", "eigvec_hist", "matelem_hist", "asy_bound")
            from dataclasses import replace

            written = sweeps.run_stats_sweep(replace(config, stats_flags=flags))
            for name, path in written.items():
                print(f"wrote {path} ({name})")
        elif args.command == "figure":
            out_dir = Path(args.out)
            out_dir.mkdir(parents=True, exist_ok=True)
            config = sweeps.preset(
                args.name, seed=args.seed, n_operators=args.ops,
                out_prefix=str(out_dir / f"{args.name}_"),
            )
            _run_sweep_config(config)
        elif args.command == "selftest":
            if not _selftest():
                return 3
    except sweeps.ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (DecompositionError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
