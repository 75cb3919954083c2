# src/cli/__init__.py
"""
Command-line front end.

    python app.py [--config FILE] [--set KEY=VALUE ...] [--format csv|json]
                  [--output PATH] {detect,optimize,sweep,simulate} ...

Records go to stdout (or ``--output``); logs go to stderr. Exit codes:
0 ok, 2 configuration error, 3 invalid parameter, 4 infeasible design.
"""

# imports built-in modules
import argparse
import sys
from pathlib import Path
from typing import Sequence

# imports local modules
from src.cli import commands
from src.cli.settings import RunSettings
from src.config import config
from src.exceptions import ConfigError, InfeasibleDesignError, InvalidParameterError, OracleError
from src.models import DesignView
from src.utils.formatters import render_csv, render_json
from src.utils.logger import get_app_logger

# Application logger
logger = get_app_logger()

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVALID = 3
EXIT_INFEASIBLE = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value or JSON run configuration file")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one configuration key (repeatable)",
    )
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write records to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="covert-jam",
        description="Covert communication with a probabilistic jammer: analysis, design and simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("detect", parents=[common], help="minimum detection error and optimal thresholds")

    opt = sub.add_parser("optimize", parents=[common], help="closed-form throughput design")
    opt.add_argument("--view", choices=[v.value for v in DesignView if v is not DesignView.CONTINUOUS], required=True)
    opt.add_argument("--verify", action="store_true", help="also run the brute-force grid oracle")

    sweep = sub.add_parser("sweep", parents=[common], help="global design versus continuous jamming")
    sweep.add_argument("--axis", choices=("epsilon", "pm_over_sigma"), required=True)

    sub.add_parser("simulate", parents=[common], help="Monte Carlo check of detection and outage")
    return parser


def run(args: argparse.Namespace) -> str:
    """Execute one parsed command and return the rendered output."""
    settings = RunSettings.resolve(args.config, args.overrides)

    if args.command == "detect":
        columns, records = commands.cmd_detect(settings)
    elif args.command == "optimize":
        columns, records = commands.cmd_optimize(settings, DesignView(args.view), args.verify)
    elif args.command == "sweep":
        columns, records = commands.cmd_sweep(settings, args.axis)
    else:
        columns, records = commands.cmd_simulate(settings)

    header = settings.resolved({"axis": args.axis} if args.command == "sweep" else None)
    render = render_json if args.format == "json" else render_csv
    return render(records, columns, header)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and return the process exit code."""
    config.validate_or_exit()
    args = build_parser().parse_args(argv)
    try:
        output = run(args)
    except ConfigError as e:
        logger.error(f"❌ Configuration error: {e}")
        return EXIT_CONFIG
    except InvalidParameterError as e:
        logger.error(f"❌ {e}")
        return EXIT_INVALID
    except InfeasibleDesignError as e:
        logger.error(f"❌ {e}")
        return EXIT_INFEASIBLE
    except OracleError as e:
        logger.error(f"❌ Oracle check failed: {e}")
        return EXIT_INFEASIBLE

    if args.output:
        Path(args.output).write_text(output, encoding="utf-8")
        logger.info(f"Wrote {args.command} records to {args.output}")
    else:
        sys.stdout.write(output)
    return EXIT_OK


__all__ = ["build_parser", "main", "run"]
