"""
picophi command-line interface

Commands:

    picophi seq      terms of a generalized Fibonacci sequence
    picophi phi      phi(a, b), the minus root or the k-term dominant root
    picophi cf       continued fraction convergents
    picophi radical  truncated nested radicals
    picophi verify   identity checks (exit 1 when an identity fails)
    picophi table    convergence tables

Rationals are written "p/q" or "p". Every command takes --format
text|json|csv. Results go to stdout and errors to stderr with exit codes
2 (usage), 3 (domain or precondition) and 4 (convergence).
"""

import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

import typer

from picophi.cli.envelope import OutputEnvelope
from picophi.core.exceptions import ConvergenceError, DomainError, PreconditionError
from picophi.core.verification import Verification
from picophi.expansions import (
    ContinuedFractionSpec,
    cf_convergence_table,
    cf_convergent,
    cf_equals_ratio,
    check_substitution_identity,
    radical_convergence_table,
    radical_converged,
    radical_iterate,
    ratio_convergence_table,
)
from picophi.expansions.report import ConvergenceReport
from picophi.roots import (
    check_minus_root_relations,
    check_reciprocal_identity,
    check_sqrt_identity,
    dominant_root_k,
    minus_root,
    phi,
)
from picophi.sequences import (
    RecurrenceSpec,
    check_even_sum_identity,
    check_odd_sum_identity,
    check_telescoping_identity,
    term,
    term_fast,
    terms,
)
from picophi.utils.conversion import (
    format_rational,
    format_rational_list,
    parse_rational,
    parse_rational_list,
)
from picophi.utils.formatting import (
    format_csv,
    format_report_csv,
    format_report_text,
    format_verification_csv,
    format_verification_text,
)
from picophi.values import ExitCode, OutputFormat, Precision

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="picophi",
    help="Exact generalized Fibonacci sequences, metallic ratios and their expansions.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

IDENTITIES = (
    "odd-sum",
    "even-sum",
    "telescoping",
    "reciprocal",
    "sqrt",
    "minus-root",
    "substitution",
    "cf-ratio",
)
TABLE_KINDS = ("ratio", "cf", "radical")

_log_handler: Optional[logging.Handler] = None


def _configure_logging(verbose: bool) -> None:
    global _log_handler
    package_logger = logging.getLogger("picophi")
    if _log_handler is not None:
        package_logger.removeHandler(_log_handler)
        _log_handler = None
    if verbose:
        _log_handler = logging.StreamHandler(sys.stderr)
        _log_handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        package_logger.addHandler(_log_handler)
        package_logger.setLevel(logging.DEBUG)
    else:
        package_logger.setLevel(logging.NOTSET)


def _check_format(value: str) -> str:
    if value not in OutputFormat.ALL:
        raise typer.BadParameter(f"expected one of {', '.join(OutputFormat.ALL)}, got {value!r}")
    return value


def _format_option():
    return typer.Option(
        OutputFormat.TEXT, "--format", "-f", callback=_check_format, help="text, json or csv"
    )


DIGITS_HELP = "Decimal places"


def _rational(text: str, option: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as error:
        raise typer.BadParameter(str(error), param_hint=option) from None


def _rational_list(text: str, option: str) -> List[Fraction]:
    try:
        return parse_rational_list(text)
    except ValueError as error:
        raise typer.BadParameter(str(error), param_hint=option) from None


def _recurrence(
    a: Optional[str], b: Optional[str], coeffs: Optional[str], seeds: Optional[str]
) -> RecurrenceSpec:
    """
    Build the recurrence named by --a/--b or --coeffs, with optional --seeds.

    Defaults: the classic spec; seeds (1, a) for two terms and all ones otherwise.
    """
    if coeffs is not None and (a is not None or b is not None):
        raise typer.BadParameter("use either --coeffs or --a/--b", param_hint="--coeffs")
    if coeffs is not None:
        coefficients = _rational_list(coeffs, "--coeffs")
    else:
        coefficients = [_rational(a or "1", "--a"), _rational(b or "1", "--b")]
    if seeds is not None:
        initial = _rational_list(seeds, "--seeds")
    elif len(coefficients) == 2:
        initial = [Fraction(1), coefficients[0]]
    else:
        initial = [Fraction(1)] * len(coefficients)
    try:
        return RecurrenceSpec(tuple(coefficients), tuple(initial))
    except ValueError as error:
        raise typer.BadParameter(str(error), param_hint="--seeds") from None


def _recurrence_params(spec: RecurrenceSpec) -> Dict[str, Any]:
    return {
        "coeffs": format_rational_list(spec.coefficients),
        "seeds": format_rational_list(spec.seeds),
    }


@contextmanager
def _reported(command: str, params: Dict[str, Any], output_format: str) -> Iterator[None]:
    """Map library errors to stderr output and exit codes 3 and 4."""
    try:
        yield
    except ConvergenceError as error:
        _fail(command, params, output_format, ExitCode.CONVERGENCE, error)
    except (DomainError, PreconditionError) as error:
        _fail(command, params, output_format, ExitCode.DOMAIN, error)


def _fail(command: str, params: Dict[str, Any], output_format: str, code: int, error: Exception):
    logger.debug("%s failed with exit code %d: %r", command, code, error)
    if output_format == OutputFormat.JSON:
        typer.echo(OutputEnvelope.failure(command, params, code, error).to_json(), nl=False, err=True)
    else:
        typer.echo(f"error: {error}", err=True)
    raise typer.Exit(code=code)


def _emit(
    command: str,
    params: Dict[str, Any],
    output_format: str,
    result: Any,
    text: str,
    csv_text: str,
) -> None:
    if output_format == OutputFormat.JSON:
        typer.echo(OutputEnvelope(command, params, result).to_json(), nl=False)
    elif output_format == OutputFormat.CSV:
        typer.echo(csv_text, nl=False)
    else:
        typer.echo(text, nl=False)


def _emit_value(command: str, params: Dict[str, Any], output_format: str, value: str, **extra) -> None:
    result = {"value": value, **extra}
    _emit(command, params, output_format, result, f"{value}\n", format_csv(("value",), [(value,)]))


def _emit_report(command: str, params: Dict[str, Any], output_format: str, report: ConvergenceReport) -> None:
    _emit(
        command,
        params,
        output_format,
        report.to_dict(),
        format_report_text(report),
        format_report_csv(report),
    )


def _emit_verification(params: Dict[str, Any], output_format: str, verification: Verification) -> None:
    _emit(
        "verify",
        params,
        output_format,
        verification.to_dict(),
        format_verification_text(verification),
        format_verification_csv(verification),
    )
    if not verification.holds:
        raise typer.Exit(code=ExitCode.IDENTITY_FAILS)


@app.callback()
def callback(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log DEBUG records to stderr"),
):
    """Exact generalized Fibonacci sequences, metallic ratios and their expansions."""
    _configure_logging(verbose)
    ctx.call_on_close(lambda: _configure_logging(False))


@app.command()
def seq(
    n: int = typer.Option(..., "--n", min=0, help="Index of the last term"),
    a: Optional[str] = typer.Option(None, "--a", help="First coefficient (default 1)"),
    b: Optional[str] = typer.Option(None, "--b", help="Second coefficient (default 1)"),
    coeffs: Optional[str] = typer.Option(None, "--coeffs", help="Comma-separated a_1..a_k"),
    seeds: Optional[str] = typer.Option(None, "--seeds", help="Comma-separated F_0..F_{k-1}"),
    as_list: bool = typer.Option(False, "--list", help="Print F_0..F_n"),
    fast: bool = typer.Option(False, "--fast", help="Use companion matrix exponentiation"),
    output_format: str = _format_option(),
):
    """Print F_n, or F_0..F_n with --list."""
    spec = _recurrence(a, b, coeffs, seeds)
    params = {**_recurrence_params(spec), "n": n, "list": as_list, "fast": fast}
    with _reported("seq", params, output_format):
        if as_list:
            values = [term_fast(spec, i) for i in range(n + 1)] if fast else terms(spec, n)
            rendered = [format_rational(v) for v in values]
            _emit(
                "seq",
                params,
                output_format,
                {"terms": rendered},
                "".join(f"{v}\n" for v in rendered),
                format_csv(("index", "value_exact"), enumerate(rendered)),
            )
        else:
            value = term_fast(spec, n) if fast else term(spec, n)
            _emit_value("seq", params, output_format, format_rational(value))


@app.command("phi")
def phi_command(
    a: str = typer.Option("1", "--a", help="Linear coefficient"),
    b: str = typer.Option("1", "--b", help="Constant coefficient"),
    coeffs: Optional[str] = typer.Option(None, "--coeffs", help="a_1..a_k for the dominant root"),
    digits: int = typer.Option(
        Precision.DEFAULT_DIGITS, "--digits", min=0, max=Precision.MAX_DIGITS, help=DIGITS_HELP
    ),
    minus: bool = typer.Option(False, "--minus", help="Print the minus root instead"),
    output_format: str = _format_option(),
):
    """Print phi(a, b), the minus root, or the dominant root of a k-term recurrence."""
    if coeffs is not None:
        coefficients = _rational_list(coeffs, "--coeffs")
    else:
        coefficients = [_rational(a, "--a"), _rational(b, "--b")]
    if minus and len(coefficients) != 2:
        raise typer.BadParameter("--minus needs a two-term recurrence", param_hint="--minus")
    params = {"coeffs": format_rational_list(coefficients), "digits": digits, "minus": minus}
    with _reported("phi", params, output_format):
        if len(coefficients) != 2:
            value, root = dominant_root_k(coefficients, digits), "dominant"
        elif minus:
            value, root = minus_root(*coefficients, digits), "minus"
        else:
            value, root = phi(*coefficients, digits), "plus"
        _emit_value("phi", params, output_format, str(value), root=root)


@app.command()
def cf(
    a: str = typer.Option("1", "--a", help="Partial denominator"),
    b: str = typer.Option("1", "--b", help="Partial numerator"),
    depth: int = typer.Option(..., "--depth", min=0, help="Depth of the convergent"),
    table: bool = typer.Option(False, "--table", help="Tabulate depths 0..depth"),
    digits: int = typer.Option(
        Precision.TABLE_DIGITS, "--digits", min=0, max=Precision.MAX_DIGITS, help=DIGITS_HELP
    ),
    output_format: str = _format_option(),
):
    """Print the exact depth-d convergent of a + b/(a + b/(...)), or its table."""
    a_value, b_value = _rational(a, "--a"), _rational(b, "--b")
    params: Dict[str, Any] = {"a": format_rational(a_value), "b": format_rational(b_value), "depth": depth}
    if table:
        params["digits"] = digits
    with _reported("cf", params, output_format):
        if table:
            report = cf_convergence_table(a_value, b_value, depth, digits)
            _emit_report("cf", params, output_format, report)
        else:
            value = cf_convergent(ContinuedFractionSpec(a_value, b_value, depth))
            _emit_value("cf", params, output_format, format_rational(value))


@app.command()
def radical(
    a: str = typer.Option("1", "--a", help="Coefficient inside the radical"),
    b: str = typer.Option("1", "--b", help="Constant inside the radical"),
    digits: int = typer.Option(
        Precision.DEFAULT_DIGITS, "--digits", min=0, max=Precision.MAX_DIGITS, help=DIGITS_HELP
    ),
    steps: Optional[int] = typer.Option(
        None, "--steps", min=0, help="Fixed number of steps (default: iterate until stable)"
    ),
    table: bool = typer.Option(False, "--table", help="Tabulate iterates 0..steps"),
    output_format: str = _format_option(),
):
    """Print sqrt(b + a sqrt(b + ...)) truncated to --digits places, or its table."""
    a_value, b_value = _rational(a, "--a"), _rational(b, "--b")
    params = {"a": format_rational(a_value), "b": format_rational(b_value), "digits": digits, "steps": steps}
    with _reported("radical", params, output_format):
        if table:
            count = steps if steps is not None else 10
            report = radical_convergence_table(a_value, b_value, count, digits)
            _emit_report("radical", params, output_format, report)
        elif steps is not None:
            value = radical_iterate(a_value, b_value, steps, digits)
            _emit_value("radical", params, output_format, str(value), steps=steps)
        else:
            value, taken = radical_converged(a_value, b_value, digits)
            _emit_value("radical", params, output_format, str(value), steps=taken)


@app.command()
def verify(
    identity: str = typer.Argument(..., help=", ".join(IDENTITIES)),
    index: Optional[int] = typer.Option(None, "--N", "-N", help="Index for the summation identities"),
    a: str = typer.Option("1", "--a", help="First coefficient"),
    b: str = typer.Option("1", "--b", help="Second coefficient"),
    digits: int = typer.Option(
        Precision.DEFAULT_DIGITS, "--digits", min=0, max=Precision.MAX_DIGITS, help=DIGITS_HELP
    ),
    depth: int = typer.Option(10, "--depth", min=0, help="Continued fraction depth for cf-ratio"),
    layers: int = typer.Option(5, "--layers", min=1, help="Substitutions for substitution"),
    minus: bool = typer.Option(False, "--minus", help="reciprocal: check the minus root"),
    output_format: str = _format_option(),
):
    """Check an identity; exit 0 when it holds and 1 when it fails."""
    if identity not in IDENTITIES:
        raise typer.BadParameter(
            f"unknown identity {identity!r}; expected one of {', '.join(IDENTITIES)}",
            param_hint="IDENTITY",
        )
    if identity in ("odd-sum", "even-sum", "telescoping"):
        if index is None:
            raise typer.BadParameter(f"{identity} needs --N", param_hint="--N")
        params: Dict[str, Any] = {"identity": identity, "N": index}
        checks = {
            "odd-sum": check_odd_sum_identity,
            "even-sum": check_even_sum_identity,
            "telescoping": check_telescoping_identity,
        }
        with _reported("verify", params, output_format):
            verification = checks[identity](index)
        _emit_verification(params, output_format, verification)
        return

    a_value, b_value = _rational(a, "--a"), _rational(b, "--b")
    params = {"identity": identity, "a": format_rational(a_value), "b": format_rational(b_value)}
    with _reported("verify", params, output_format):
        if identity == "cf-ratio":
            params["depth"] = depth
            verification = cf_equals_ratio(ContinuedFractionSpec(a_value, b_value, depth))
        elif identity == "substitution":
            params.update(layers=layers, digits=digits)
            verification = check_substitution_identity(a_value, b_value, layers, digits)
        elif identity == "reciprocal":
            params.update(digits=digits, minus=minus)
            root = "minus" if minus else "plus"
            verification = check_reciprocal_identity(a_value, b_value, digits, root=root)
        elif identity == "sqrt":
            params["digits"] = digits
            verification = check_sqrt_identity(a_value, b_value, digits)
        else:
            params["digits"] = digits
            verification = check_minus_root_relations(a_value, b_value, digits)
    _emit_verification(params, output_format, verification)


@app.command("table")
def table_command(
    kind: str = typer.Argument(..., help=", ".join(TABLE_KINDS)),
    a: Optional[str] = typer.Option(None, "--a", help="First coefficient (default 1)"),
    b: Optional[str] = typer.Option(None, "--b", help="Second coefficient (default 1)"),
    coeffs: Optional[str] = typer.Option(None, "--coeffs", help="ratio: comma-separated a_1..a_k"),
    seeds: Optional[str] = typer.Option(None, "--seeds", help="ratio: comma-separated seeds"),
    n_max: int = typer.Option(10, "--n-max", min=0, help="Last row index"),
    digits: int = typer.Option(
        Precision.TABLE_DIGITS, "--digits", min=0, max=Precision.MAX_DIGITS, help=DIGITS_HELP
    ),
    output_format: str = _format_option(),
):
    """Print a convergence table: ratio (F_n/F_n-1), cf (convergents) or radical (iterates)."""
    if kind not in TABLE_KINDS:
        raise typer.BadParameter(
            f"unknown table {kind!r}; expected one of {', '.join(TABLE_KINDS)}", param_hint="KIND"
        )
    if kind == "ratio":
        if n_max < 1:
            raise typer.BadParameter("ratio tables need --n-max >= 1", param_hint="--n-max")
        spec = _recurrence(a, b, coeffs, seeds)
        params = {"kind": kind, **_recurrence_params(spec), "n_max": n_max, "digits": digits}
        with _reported("table", params, output_format):
            report = ratio_convergence_table(spec, n_max, digits)
    else:
        if coeffs is not None or seeds is not None:
            raise typer.BadParameter(f"{kind} tables take --a/--b only", param_hint="--coeffs")
        a_value, b_value = _rational(a or "1", "--a"), _rational(b or "1", "--b")
        params = {
            "kind": kind,
            "a": format_rational(a_value),
            "b": format_rational(b_value),
            "n_max": n_max,
            "digits": digits,
        }
        with _reported("table", params, output_format):
            if kind == "cf":
                report = cf_convergence_table(a_value, b_value, n_max, digits)
            else:
                report = radical_convergence_table(a_value, b_value, n_max, digits)
    _emit_report("table", params, output_format, report)


def main() -> None:
    """Console script entry point."""
    app(prog_name="picophi")


if __name__ == "__main__":
    main()
