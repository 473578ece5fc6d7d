"""
Job handlers for the correlator toolkit: configuration, input loading,
verification and report formatting behind the CLI and the HTTP API.
"""

from .config import VALID_COMMANDS, VALID_FORMATS, JobConfig, JobConfigManager, build_job_config, parse_r
from .exceptions import InputFormatError, JobConfigError, JobError
from .formatting import render_report
from .input_loader import load_pair_sequence, parse_pair_sequence, parse_points, read_input_file
from .job_handlers import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_POLE,
    EXIT_VERIFICATION_FAILED,
    error_report,
    execute_job,
    exit_code_for,
    run_correlator,
    run_diagrams,
    run_verify,
    run_virasoro,
)
from .verification import CheckResult, VerificationSuite, bounded_exponents, is_vacuous

__version__ = "1.0.0"
__all__ = [
    "VALID_COMMANDS",
    "VALID_FORMATS",
    "JobConfig",
    "JobConfigManager",
    "build_job_config",
    "parse_r",
    "JobError",
    "InputFormatError",
    "JobConfigError",
    "render_report",
    "load_pair_sequence",
    "parse_pair_sequence",
    "parse_points",
    "read_input_file",
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_POLE",
    "error_report",
    "execute_job",
    "exit_code_for",
    "run_correlator",
    "run_diagrams",
    "run_verify",
    "run_virasoro",
    "CheckResult",
    "VerificationSuite",
    "bounded_exponents",
    "is_vacuous",
]
