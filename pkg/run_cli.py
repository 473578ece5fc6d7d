#!/usr/bin/env python3
"""
Command-line front end for the correlator toolkit.

Usage:
    python run_cli.py --command correlator --input sample_inputs/virasoro_n4.json --format text
    python run_cli.py --command diagrams --n 4
    python run_cli.py --command verify --n 2 --dim 2 --seed 7 --bound 6
    python run_cli.py --command virasoro --n 2 --points "z1=1,z2=0" --r 2

Reports go to stdout, logs to stderr. Exit codes: 0 success, 1 verification failure,
2 input error, 3 pole at an evaluation point.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add parent directory to path
sys.path.append(str(Path(__file__).parent))

from jobs import (
    VALID_COMMANDS,
    JobError,
    build_job_config,
    error_report,
    execute_job,
    exit_code_for,
    parse_points,
    render_report,
)
from correlator_layer import PoleError

logger = logging.getLogger("run_cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact genus-zero correlators of the quadratic fields L_{a,b}.",
    )
    parser.add_argument("--command", required=True, choices=VALID_COMMANDS,
                        help="Job to run")
    parser.add_argument("--input", dest="input_path", metavar="FILE",
                        help='JSON input {"dim", "gram", "pairs"}')
    parser.add_argument("--r", dest="r", metavar="VALUE",
                        help='Central parameter: a rational such as 2 or 1/2, or "symbolic"')
    parser.add_argument("--points", metavar="ASSIGNMENT",
                        help='Evaluation point, e.g. "z1=1,z2=0"')
    parser.add_argument("--bound", type=int, metavar="N",
                        help="Truncation bound (cut degree) of series expansions")
    parser.add_argument("--seed", type=int, metavar="N", help="Seed of the verification generator")
    parser.add_argument("--format", dest="output_format", choices=("json", "text"),
                        help="Report format")
    parser.add_argument("--n", type=int, metavar="N",
                        help="Number of pairs when no input file is given")
    parser.add_argument("--dim", type=int, metavar="D",
                        help="Dimension of random verification datasets")
    parser.add_argument("--prop2", action="store_true",
                        help="Also emit the two-variable diagram sum")
    parser.add_argument("--expand", action="store_true",
                        help="Expand the term lists into Laurent series up to --bound")
    parser.add_argument("--corrupt", action="store_true",
                        help="Negative control: perturb one coefficient before verifying")
    parser.add_argument("--config", dest="config_path", metavar="FILE",
                        help="JSON configuration file")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.INFO),
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one job.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when omitted

    Returns:
        The process exit code
    """
    args = build_parser().parse_args(argv)
    flags = vars(args).copy()
    command = flags.pop("command")
    output_format = args.output_format or "text"
    try:
        if args.points is not None:
            flags["points"] = parse_points(args.points)
        cfg = build_job_config(command, flags)
    except (JobError, PoleError) as e:
        configure_logging("INFO")
        logger.error("Invalid job configuration: %s", e)
        header = {"command": command, "seed": args.seed, "bound": args.bound, "r": args.r or "symbolic"}
        sys.stdout.write(render_report(error_report(header, e), output_format))
        return exit_code_for(e)

    configure_logging(cfg.settings["global_settings"]["log_level"])
    exit_code, report = execute_job(cfg)
    sys.stdout.write(render_report(report, cfg.output_format))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
