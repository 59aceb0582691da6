"""
Numeric Constants
"""

from picophi.core.value import UlpValue
from picophi.values import ExitCode, OutputFormat, Precision, StepLimits, ToleranceUlps


class Phi:
    """Precision, tolerance and interface constants in one place."""

    precision = Precision
    tolerance = ToleranceUlps
    steps = StepLimits
    exit_code = ExitCode
    output = OutputFormat
    ulp = UlpValue
