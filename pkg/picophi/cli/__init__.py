"""
Command-Line Interface
"""

from picophi.cli.app import app, main
from picophi.cli.envelope import OutputEnvelope

__all__ = ["app", "main", "OutputEnvelope"]
