"""
Report Formatting

Deterministic text and CSV renderings of convergence reports,
verifications and term lists. Output uses '.' as the decimal separator,
LF line endings and no locale or time dependent content.
"""

import csv
import io
from typing import Iterable, List, Sequence

from picophi.core.verification import Verification
from picophi.expansions.report import ConvergenceReport
from picophi.values import OutputFormat


def format_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """
    Render rows as CSV with a header line.

    :param header: Column names
    :param rows: Row values, rendered with str()
    :return: CSV text ending in a newline
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(value) for value in row])
    return buffer.getvalue()


def format_columns(header: Sequence[str], rows: Iterable[Sequence[object]]) -> List[str]:
    """
    Left-aligned columns separated by two spaces, without trailing blanks.

    :param header: Column names
    :param rows: Row values, rendered with str()
    :return: One string per line, header first
    """
    table = [list(header)] + [[str(value) for value in row] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in table]


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def format_report_rows(report: ConvergenceReport) -> List[List[str]]:
    return [
        [str(row.index), row.value_exact, row.value_decimal, row.abs_error]
        for row in report.rows
    ]


def format_report_text(report: ConvergenceReport) -> str:
    """
    Human-readable convergence table.

    Example:
        ratio table, target 1.6180 at 4 digits
        convergence guaranteed: yes
        eventually decreasing: yes (from row 1)
        index  value_exact  value_decimal  abs_error
        1      1            1.0000         0.6180
    """
    decreasing = _yes_no(report.eventually_decreasing)
    if report.decreasing_from is not None:
        decreasing += f" (from row {report.decreasing_from})"
    lines = [
        f"{report.kind} table, target {report.target} at {report.digits} digits",
        f"convergence guaranteed: {_yes_no(report.convergence_guaranteed)}",
        f"eventually decreasing: {decreasing}",
    ]
    lines.extend(format_columns(OutputFormat.CSV_HEADER, format_report_rows(report)))
    return "\n".join(lines) + "\n"


def format_report_csv(report: ConvergenceReport) -> str:
    """CSV with columns index,value_exact,value_decimal,abs_error."""
    return format_csv(OutputFormat.CSV_HEADER, format_report_rows(report))


def format_verification_text(verification: Verification) -> str:
    return f"{verification}\n"


def format_verification_csv(verification: Verification) -> str:
    return format_csv(
        ("identity", "status", "lhs", "rhs"),
        [(verification.identity, verification.status, verification.lhs, verification.rhs)],
    )
