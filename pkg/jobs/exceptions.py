"""
Custom exceptions for the job layer.
"""


class JobError(Exception):
    """Base exception for job configuration and execution."""
    pass


class InputFormatError(JobError):
    """Raised when an input file, inline input or points string is malformed."""
    pass


class JobConfigError(JobError):
    """Raised when the job configuration is invalid."""
    pass
