"""
Precision, tolerance and interface value classes
"""


class Precision:
    """Working precision, in decimal places."""

    DEFAULT_DIGITS = 30  # default for identity checks and the CLI
    TABLE_DIGITS = 4  # default for convergence tables, as in the classic ratio table
    GUARD_DIGITS = 3  # extra places carried by iterative evaluations
    MAX_DIGITS = 100_000  # sanity cap on requested precision


class ToleranceUlps:
    """Approximate comparisons, in units of the last place (1 ulp = 10^-digits)."""

    IDENTITY = 8  # reciprocal / sqrt / substitution identity checks
    ROOT_SUM = 2  # plus_root + minus_root = a
    RADICAL = 4  # converged radical against the closed form
    SUCCESSIVE = 2  # successive radical iterates considered stable


class StepLimits:
    """Iteration caps."""

    RADICAL_BASE = 10  # radical step cap is RADICAL_BASE + RADICAL_PER_DIGIT * digits
    RADICAL_PER_DIGIT = 4


class ExitCode:
    """Process exit codes of the command-line interface."""

    OK = 0  # success, or the identity holds
    IDENTITY_FAILS = 1
    USAGE = 2  # malformed arguments, unknown identity
    DOMAIN = 3  # DomainError or PreconditionError
    CONVERGENCE = 4  # ConvergenceError


class OutputFormat:
    """Output formats of the command-line interface."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    ALL = (TEXT, JSON, CSV)
    VERSION = "1"  # top-level "version" of every JSON envelope
    CSV_HEADER = ("index", "value_exact", "value_decimal", "abs_error")
