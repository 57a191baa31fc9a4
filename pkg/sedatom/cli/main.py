# -*- coding: utf-8 -*-
import os
import sys
import json
import logging
import argparse
from dataclasses import dataclass, field

from .. import __version__
from ..exceptions import ConfigurationError, SimulationEvent
from ..physmodel import RunConfig, apply_overrides


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

SUBCOMMANDS = ("run", "decay", "kepler", "fieldstats", "bench", "dump-modes")


@dataclass
class CommandSpec:
    """Parsed command line.

    Attributes
    ----------
    subcommand : `str`
        One of :data:`SUBCOMMANDS`.
    config_path : `str`
        JSON configuration file or None if the defaults are used.
    out_dir : `str`
        Output directory or None.
    overrides : `list(str)`
        Effective `key=value` overrides in the order they were applied.
    worker_count : `int`
        Number of worker processes.
    options : `dict`
        Subcommand specific options.
    """
    subcommand: str
    config_path: str = None
    out_dir: str = None
    overrides: list = field(default_factory=list)
    worker_count: int = 1
    options: dict = field(default_factory=dict)


def _csv_floats(text):
    return [float(v) for v in text.split(',') if v.strip() != '']


def _csv_ints(text):
    return [int(v) for v in text.split(',') if v.strip() != '']


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON configuration file - omitted keys take the default values")
    common.add_argument("--out", metavar="DIR", help="output directory")
    common.add_argument("--seed", type=int, help="seed of a single run / first seed of a campaign")
    common.add_argument("--seeds", type=_csv_ints, metavar="N1,N2,...", help="explicit seed list of a campaign")
    common.add_argument("--runs", type=int, metavar="K", help="number of runs if no seed list is given")
    common.add_argument("--t-end", type=float, metavar="SECONDS", help="simulation horizon")
    common.add_argument("--snapshots", type=_csv_floats, metavar="T1,T2,...", help="snapshot times")
    common.add_argument("--workers", type=int, default=1, metavar="N", help="number of worker processes")
    common.add_argument("--field-mode", choices=["window", "full"], help="sum the radius window only or all modes")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", dest="set_items",
                        help="override a configuration value, dotted keys address nested records (repeatable)")
    common.add_argument("-v", "--verbose", action="store_true", help="debug output")
    common.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    parser = argparse.ArgumentParser(prog="sedatom", description="Classical electron in a Coulomb potential under zero-point radiation and radiation reaction")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True

    p = sub.add_parser("run", parents=[common], help="run a campaign and compare the radial densities with the ground state")
    p.add_argument("--fresh", action="store_true", help="ignore existing checkpoints - by default every run continues from its newest checkpoint")

    p = sub.add_parser("decay", parents=[common], help="fields off - check the radiation-reaction decay law")
    p.add_argument("--r-stop", type=float, default=0.12e-8, metavar="CM", help="radius at which the decay is stopped")

    p = sub.add_parser("kepler", parents=[common], help="fields and radiation reaction off - check energy and angular momentum conservation")
    p.add_argument("--orbits", type=float, default=100., help="number of orbital periods")
    p.add_argument("--rel-tol", type=float, default=1e-10, help="relative tolerance (absolute tolerances are scaled alike)")

    p = sub.add_parser("fieldstats", parents=[common], help="statistics of the generated field amplitudes")
    p.add_argument("--modes", type=int, default=100000, help="number of mode integers")
    p.add_argument("--n-start", type=int, default=1, help="first mode integer")

    p = sub.add_parser("bench", parents=[common], help="compare window and full summation on a reduced cavity")
    p.add_argument("--horizon", type=float, default=1e-14, metavar="SECONDS", help="simulated time")
    p.add_argument("--L-z", type=float, default=4085e-8, dest="L_z", metavar="CM", help="length of the reduced cavity")
    p.add_argument("--samples", type=int, default=100, help="number of comparison times")

    p = sub.add_parser("dump-modes", parents=[common], help="write the amplitude table of a seed as CSV")
    p.add_argument("--n-lo", type=int, default=1, help="first mode integer")
    p.add_argument("--n-hi", type=int, default=1000, help="last mode integer")

    return parser


def _flag_overrides(args):
    overrides = []
    if args.seed is not None:
        overrides.append(f"seed={args.seed}")
    if args.seeds is not None:
        overrides.append(f"seeds={json.dumps(args.seeds)}")
    if args.runs is not None:
        overrides.append(f"runs={args.runs}")
    if args.t_end is not None:
        overrides.append(f"t_end={args.t_end!r}")
    if args.snapshots is not None:
        overrides.append(f"snapshot_times={json.dumps(args.snapshots)}")
    if args.field_mode is not None:
        overrides.append(f"field_mode=\"{args.field_mode}\"")
    return overrides + list(args.set_items)


def parse_and_validate(argv):
    """Parses the command line and builds the effective configuration.

    The JSON file (if any) is read first, command-line flags and `--set` overrides are applied on top of it.

    Parameters
    ----------
    argv : `list(str)`
        Command-line arguments without the program name.

    Returns
    -------
    `tuple`
        (:class:`CommandSpec`, :class:`sedatom.physmodel.RunConfig`)

    Raises
    ------
    SystemExit
        On usage errors (unknown flags) - raised by `argparse` with exit code 2.
    ConfigurationError
        If the configuration violates an invariant - the message names the offending key.
    OSError
        If the configuration file can not be read or the output directory is not writable.
    """
    args = build_parser().parse_args(argv)

    d = {}
    if args.config is not None:
        with open(args.config) as f:
            try:
                d = json.load(f)
            except ValueError as ex:
                raise ConfigurationError("config", f"'{args.config}' is not valid JSON ({ex})")

    overrides = _flag_overrides(args)
    try:
        config = RunConfig.from_dict(apply_overrides(d, overrides)).validate()
    except ConfigurationError:
        raise
    except (TypeError, ValueError) as ex:
        raise ConfigurationError("config", str(ex))

    if args.workers < 1:
        raise ConfigurationError("workers", f"has to be at least 1 but not {args.workers}")

    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        if not os.access(args.out, os.W_OK):
            raise PermissionError(f"Output directory '{args.out}' is not writable")

    options = {k: v for k, v in vars(args).items() if k not in ("config", "out", "seed", "seeds", "runs", "t_end", "snapshots", "workers", "field_mode", "set_items", "subcommand")}
    spec = CommandSpec(subcommand=args.subcommand, config_path=args.config, out_dir=args.out, overrides=overrides,
                       worker_count=args.workers, options=options)

    return spec, config


def dispatch(spec, config):
    """Runs the subcommand of `spec`.

    Returns
    -------
    `int`
        Exit status - 0 on success, 1 if an internal check failed, 2 on invalid configuration, 3 on a numerical event
        (collapse, ionization, stiffness) and 4 on I/O errors.
    """
    from .commands import COMMANDS

    try:
        return COMMANDS[spec.subcommand](spec, config)
    except ConfigurationError as ex:
        logging.error(str(ex))
        return EXIT_VALIDATION
    except SimulationEvent as ex:
        logging.error(str(ex))
        return EXIT_NUMERICAL
    except OSError as ex:
        logging.error(str(ex))
        return EXIT_IO


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv

    level = logging.INFO
    if "-v" in argv or "--verbose" in argv:
        level = logging.DEBUG
    elif "-q" in argv or "--quiet" in argv:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(message)s")

    try:
        spec, config = parse_and_validate(argv)
    except ConfigurationError as ex:
        logging.error(str(ex))
        return EXIT_VALIDATION
    except OSError as ex:
        logging.error(str(ex))
        return EXIT_IO

    return dispatch(spec, config)
