"""Command line interface.

Subcommands map onto the named experiments; a flat key=value config
file can supply any setting, with command-line flags taking precedence
over the file and the file over built-in defaults.  The environment
variable CAUCHY_ANGLES_SEED supplies a default seed when neither flag
nor file does.

Exit status: 0 when every verdict passed, 1 when verification failed,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .chains import ChainStepCoeffs
from .experiments import EXPERIMENTS, ExperimentConfig, run
from .report import all_passed, to_csv, to_json
from .rng import RngSeed
from .walks import EuclideanStepSpec

__all__ = ["main"]

_ENV_SEED = "CAUCHY_ANGLES_SEED"
_DEFAULT_SEED = 1

_CONFIG_KEYS = {
    "experiment",
    "seed",
    "stream",
    "sample-count",
    "chain-depth",
    "format",
    "output",
    "points",
    "pairs",
    "steps",
    "length",
    "coeffs",
    "emit-density",
    "emit-params",
    "plot",
}


class UsageError(Exception):
    pass


def _parse_config_file(path: str) -> dict:
    cfg: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, _, value = line.partition("=")
                key = key.strip()
                value = value.strip()
                if key not in _CONFIG_KEYS and not key.startswith("tol."):
                    raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
                cfg[key] = value
    except OSError as e:
        raise UsageError(f"cannot read config file {path}: {e}") from e
    return cfg


def _parse_bool(s: str, what: str) -> bool:
    low = s.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"{what} must be a boolean, got {s!r}")


def _parse_steps(text: str) -> tuple[EuclideanStepSpec, ...]:
    """Step list 'd:a[:b],d:a[:b],...' with b defaulting to 0."""
    out = []
    for part in text.split(","):
        bits = part.strip().split(":")
        if len(bits) not in (2, 3):
            raise UsageError(f"bad step spec {part!r}; expected d:a or d:a:b")
        try:
            d, a = float(bits[0]), float(bits[1])
            b = float(bits[2]) if len(bits) == 3 else 0.0
            out.append(EuclideanStepSpec(d, a, b))
        except ValueError as e:
            raise UsageError(f"bad step spec {part!r}: {e}") from e
    if not out:
        raise UsageError("empty step list")
    return tuple(out)


def _parse_coeffs(text: str) -> tuple[ChainStepCoeffs, ...]:
    """Coefficient list 'c:d,c:d,...'; entries may be ints, decimals, or
    p/q rationals and are kept exact."""
    out = []
    for part in text.split(","):
        bits = part.strip().split(":")
        if len(bits) != 2:
            raise UsageError(f"bad coefficient pair {part!r}; expected c:d")
        try:
            out.append(ChainStepCoeffs(bits[0], bits[1]))
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad coefficient pair {part!r}: {e}") from e
    if not out:
        raise UsageError("empty coefficient list")
    return tuple(out)


def _parse_int(s, what: str) -> int:
    try:
        return int(str(s), 0)
    except ValueError as e:
        raise UsageError(f"{what} must be an integer, got {s!r}") from e


def _build_parser() -> argparse.ArgumentParser:
    # Common flags go on a parent with SUPPRESS defaults so they are
    # accepted both before and after the subcommand without the
    # subparser clobbering values parsed earlier.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", metavar="FILE", help="flat key=value settings file")
    common.add_argument("--seed", type=int, help="master RNG seed (64-bit unsigned)")
    common.add_argument("--stream", type=int, help="RNG stream index (64-bit unsigned)")
    common.add_argument("--format", choices=("csv", "json"), help="report format (default csv)")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument(
        "--plot", action="store_true", help="also render a PNG next to the report"
    )
    common.add_argument(
        "--tol",
        action="append",
        metavar="NAME=VALUE",
        help="override a named tolerance (alpha, ecf, normalization); repeatable",
    )

    p = argparse.ArgumentParser(
        prog="cauchy-angles",
        description="Verified Cauchy transformations, continued-fraction chains, "
        "and angular random walks.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    tv = sub.add_parser(
        "transform-verify", parents=[common], help="distributional closure of the transforms"
    )
    tv.add_argument("variant", choices=("centered", "noncentered", "scaled"))
    tv.add_argument("--n", type=int, default=None, help="Monte Carlo sample count")
    tv.add_argument("--pairs", type=int, default=None, help="number of randomized parameter pairs")

    ch = sub.add_parser("chain", parents=[common], help="continued-fraction chains")
    ch.add_argument("variant", choices=("v", "w", "u"))
    ch.add_argument("--depth", type=int, default=None, help="number of chain steps")
    ch.add_argument("--samples", type=int, default=None, help="Monte Carlo sample count")
    ch.add_argument("--points", type=int, default=None, help="grid points for density rows")
    ch.add_argument(
        "--coeffs", metavar="c:d,...", default=None, help="weighted-step coefficients (w chain)"
    )
    ch.add_argument("--emit-params", action="store_true", help="emit parameter rows")
    ch.add_argument("--emit-density", action="store_true", help="emit density curve rows")

    wk = sub.add_parser("walk", parents=[common], help="angular random walks")
    wk.add_argument("variant", choices=("euclid", "hyperbolic"))
    wk.add_argument("--steps", metavar="d:a[:b],...", default=None, help="step specs (euclid)")
    wk.add_argument("--length", type=int, default=None, help="walk length (hyperbolic)")
    wk.add_argument("--walks", type=int, default=None, help="number of sampled walks")

    gd = sub.add_parser("golden", parents=[common], help="golden-ratio convergence table")
    gd.add_argument("--depth", type=int, default=None, help="number of chain steps")

    va = sub.add_parser("verify-all", parents=[common], help="run every experiment")
    va.add_argument("--n", type=int, default=None, help="override every child sample count")

    sub.add_parser("run", parents=[common], help="run the experiment named in the config file")
    return p


def _experiment_name(args: argparse.Namespace, file_cfg: dict) -> str:
    if args.command == "transform-verify":
        return f"transform-{args.variant}"
    if args.command == "chain":
        return f"chain-{args.variant}"
    if args.command == "walk":
        return f"walk-{args.variant}"
    if args.command in ("golden", "verify-all"):
        return args.command
    name = file_cfg.get("experiment")
    if not name:
        raise UsageError("the run subcommand needs experiment=<name> in the config file")
    if name not in EXPERIMENTS:
        raise UsageError(f"unknown experiment in config file: {name!r}")
    return name


def _merge(flag, file_cfg: dict, key: str, parse=None):
    """Flag value if given, else config-file value, else None."""
    if flag is not None:
        return flag
    if key in file_cfg:
        return parse(file_cfg[key]) if parse else file_cfg[key]
    return None


def _build_config(args: argparse.Namespace, file_cfg: dict) -> ExperimentConfig:
    name = _experiment_name(args, file_cfg)

    seed_val = _merge(getattr(args, "seed", None), file_cfg, "seed", lambda s: _parse_int(s, "seed"))
    if seed_val is None:
        env = os.environ.get(_ENV_SEED)
        if env is not None:
            seed_val = _parse_int(env, _ENV_SEED)
        else:
            seed_val = _DEFAULT_SEED
    stream_val = (
        _merge(getattr(args, "stream", None), file_cfg, "stream", lambda s: _parse_int(s, "stream"))
        or 0
    )

    tolerances = {}
    for key, value in file_cfg.items():
        if key.startswith("tol."):
            try:
                tolerances[key[4:]] = float(value)
            except ValueError as e:
                raise UsageError(f"bad tolerance {key}={value!r}") from e
    for item in getattr(args, "tol", None) or []:
        if "=" not in item:
            raise UsageError(f"--tol needs NAME=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        try:
            tolerances[key.strip()] = float(value)
        except ValueError as e:
            raise UsageError(f"bad tolerance {item!r}") from e

    n_flag = getattr(args, "n", None) or getattr(args, "samples", None) or getattr(
        args, "walks", None
    )
    sample_count = _merge(n_flag, file_cfg, "sample-count", lambda s: _parse_int(s, "sample-count"))
    depth = _merge(
        getattr(args, "depth", None), file_cfg, "chain-depth", lambda s: _parse_int(s, "chain-depth")
    )
    points = _merge(getattr(args, "points", None), file_cfg, "points", lambda s: _parse_int(s, "points"))
    pairs = _merge(getattr(args, "pairs", None), file_cfg, "pairs", lambda s: _parse_int(s, "pairs"))
    length = _merge(getattr(args, "length", None), file_cfg, "length", lambda s: _parse_int(s, "length"))

    steps_text = _merge(getattr(args, "steps", None), file_cfg, "steps")
    steps = _parse_steps(steps_text) if steps_text else None
    coeffs_text = _merge(getattr(args, "coeffs", None), file_cfg, "coeffs")
    coeffs = _parse_coeffs(coeffs_text) if coeffs_text else None

    emit_density = getattr(args, "emit_density", False) or _parse_bool(
        file_cfg.get("emit-density", "false"), "emit-density"
    )
    emit_params_flag = getattr(args, "emit_params", False) or _parse_bool(
        file_cfg.get("emit-params", "false"), "emit-params"
    )
    # Density-only output when asked for density but not params.
    emit_params = emit_params_flag or not emit_density

    fmt = _merge(getattr(args, "format", None), file_cfg, "format") or "csv"
    output = _merge(getattr(args, "output", None), file_cfg, "output")
    plot = getattr(args, "plot", False) or _parse_bool(file_cfg.get("plot", "false"), "plot")

    try:
        return ExperimentConfig(
            experiment=name,
            seed=RngSeed(seed_val, stream_val),
            sample_count=sample_count,
            chain_depth=depth,
            output_format=fmt,
            output_path=output,
            tolerances=tolerances,
            points=points if points is not None else 201,
            pairs=pairs if pairs is not None else 20,
            walk_steps=steps,
            walk_length=length,
            coeffs=coeffs,
            emit_params=emit_params,
            emit_density=emit_density,
            plot=plot,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    try:
        config_path = getattr(args, "config", None)
        file_cfg = _parse_config_file(config_path) if config_path else {}
        cfg = _build_config(args, file_cfg)
        if cfg.plot and not cfg.output_path:
            raise UsageError("--plot requires --output so the PNG has somewhere to live")
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    t0 = time.perf_counter()
    report = run(cfg)
    elapsed = time.perf_counter() - t0

    text = to_csv(report) if cfg.output_format == "csv" else to_json(report)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if cfg.plot and cfg.output_path:
        from .plots import render_report

        png = os.path.splitext(cfg.output_path)[0] + ".png"
        render_report(report, png)
        print(f"plot written to {png}", file=sys.stderr)

    n_pass = sum(1 for v in report.verdicts if v.passed)
    for v in report.verdicts:
        tag = "PASS" if v.passed else "FAIL"
        print(
            f"[{tag}] {v.name}: statistic={v.statistic:.6g} threshold={v.threshold:.6g} "
            f"n={v.n} pole_discards={v.pole_discards}",
            file=sys.stderr,
        )
    print(
        f"{cfg.experiment}: {n_pass}/{len(report.verdicts)} checks passed "
        f"in {elapsed:.2f}s (seed={cfg.seed.seed}, stream={cfg.seed.stream})",
        file=sys.stderr,
    )
    return 0 if all_passed(report) else 1


if __name__ == "__main__":
    sys.exit(main())
