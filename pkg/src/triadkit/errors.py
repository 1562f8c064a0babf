"""Exception hierarchy.

Category strings feed the CLI's ``error[<category>]:`` prefix and the
process exit codes (validation -> 1, io -> 2, numerical -> 3).
"""
from __future__ import annotations


class TriadkitError(Exception):
    category = "error"
    exit_code = 1


class ValidationError(TriadkitError):
    """Bad input: malformed matrix, unsupported order, invalid parameters."""

    category = "validation"
    exit_code = 1


class NumericalError(TriadkitError):
    """Numerical failure: eigensolve breakdown, coercion stall, separation."""

    category = "numerical"
    exit_code = 3
