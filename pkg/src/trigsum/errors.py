"""Exception types shared across the package.

ParameterError marks inputs outside the supported domain (bad ranges,
excluded shift values); NumericError marks computations that cannot
produce a trustworthy number (singular terms, cap overruns, residuals
too large to accept). The CLI maps them to exit codes 2 and 1.
"""


class ParameterError(ValueError):
    """A requested sum or argument is outside the valid domain."""


class NumericError(ArithmeticError):
    """A computation cannot produce a trustworthy numeric result."""
