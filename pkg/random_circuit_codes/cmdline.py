"""The command line interface to random_circuit_codes."""
# pylint: disable=too-many-arguments
import functools
import logging

import click
from colorama import Fore, Style

from random_circuit_codes import main, __version__
from random_circuit_codes.errors import RandomCircuitCodeError

logger = logging.getLogger(__name__)


def _report_errors(command):
    """Turn domain errors into click errors so the process exits nonzero with the message."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except RandomCircuitCodeError as err:
            raise click.ClickException(f"{type(err).__name__}: {err}") from err

    return wrapper


def _experiment_options(command):
    """Options every experiment shares; unset options fall back to --config or the defaults."""
    options = [
        click.option(
            "--config",
            "base_config",
            type=click.Path(exists=True, dir_okay=False),
            help="Base config file the flags override.",
        ),
        click.option("--n", "-n", type=int, help="Number of bulk qubits per code block."),
        click.option("--rate", "-r", help="Code rate k/n, e.g. 1/4."),
        click.option(
            "--p", "-p", "p_grid", type=float, multiple=True, help="Erasure or error rate; repeat for a grid."
        ),
        click.option("--trials", "-t", type=int, help="Trials per point (default 1000)."),
        click.option("--seed", "-s", type=int, help="Seed of the random substreams (default 0)."),
        click.option("--batches", type=int, help="Batches for the jackknife error (default 50)."),
        click.option("--window", type=float, nargs=2, default=None, help="Fit window P_MIN P_MAX."),
        click.option("--truncate/--no-truncate", default=None, help="Truncate the fit window by the jackknife rule."),
        click.option("--out-dir", "-o", default=main.DEFAULT_OUT_DIR, show_default=True, help="Output directory."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _overrides(options: dict) -> dict:
    """Drop unset flags so they do not override the base config."""
    overrides = {}
    for key, value in options.items():
        if value is None or (isinstance(value, tuple) and not value):
            continue
        overrides[key] = list(value) if isinstance(value, tuple) else value
    return overrides


@click.group(invoke_without_command=True)
@click.pass_context
@click.option(
    "--version",
    is_flag=True,
    default=False,
    help="Get the current random circuit codes version.",
)
def cli(ctx, version: bool = False):
    """The command line interface for random circuit codes."""
    if version:
        print(f"rcc {__version__}")
    return ctx.invoked_subcommand


@cli.command()
@click.argument("config_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out-dir", "-o", default=main.DEFAULT_OUT_DIR, show_default=True, help="Output directory.")
@_report_errors
def run(config_file, out_dir):
    """Run the experiment described by a YAML or JSON config file."""
    main.run(config_file, out_dir=out_dir)


@cli.command(name="code-capacity")
@_experiment_options
@click.option("--depth", "-d", "depths", type=int, multiple=True, help="Circuit depth; repeat for several.")
@click.option("--decoder", type=click.Choice(["marginal", "minweight"]), help="Tensor network decoder.")
@click.option("--padding", type=int, help="Padding qubits per side, 2d by default.")
@_report_errors
def code_capacity(base_config, out_dir, **options):
    """Logical failure rate of random codes under depolarizing noise."""
    main.code_capacity(out_dir=out_dir, base_config=base_config, **_overrides(options))


@cli.command()
@_experiment_options
@click.option("--depth", "-d", "depths", type=int, multiple=True, help="Circuit depth.")
@click.option("--q-max", type=int, help="Largest even number of distillation rounds.")
@_report_errors
def entropy(base_config, out_dir, **options):
    """Entropy density of distilled ancilla blocks under erasure."""
    main.entropy(out_dir=out_dir, base_config=base_config, **_overrides(options))


@cli.command(name="mutual-info")
@_experiment_options
@click.option("--depth", "-d", "depths", type=int, multiple=True, help="Circuit depth; repeat for several.")
@click.option("--rounds", type=int, help="Steane error correction rounds.")
@click.option("--q", "-q", type=int, help="Distillation rounds per ancilla, the depth by default.")
@_report_errors
def mutual_info(base_config, out_dir, **options):
    """Mutual information of encoded EPR pairs under Steane error correction."""
    main.mutual_info(out_dir=out_dir, base_config=base_config, **_overrides(options))


@cli.command()
@_experiment_options
@click.option("--depth", "-d", "depths", type=int, multiple=True, help="Circuit depth; repeat for several.")
@click.option("--ec-rounds", type=int, help="Steane error correction rounds.")
@click.option("--q", "-q", type=int, help="Distillation rounds per ancilla, the depth by default.")
@_report_errors
def spacetime(base_config, out_dir, **options):
    """Failure rate of the protocol decoded as a spacetime erasure code."""
    main.spacetime(out_dir=out_dir, base_config=base_config, **_overrides(options))


@cli.command()
@click.argument("record_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--window", type=float, nargs=2, default=None, help="Fit window P_MIN P_MAX.")
@click.option("--out", type=click.Path(dir_okay=False), help="Fit JSON file, next to the record by default.")
@_report_errors
def fit(record_file, window, out):
    """Fit the finite-size scaling ansatz to a stored record."""
    scaling_fit = main.fit(record_file, window=window or None, out=out)
    sigma = "n/a" if scaling_fit.sigma_pc is None else f"{scaling_fit.sigma_pc:.2g}"
    print(f"p_c = {scaling_fit.p_c:.5f} +/- {sigma}, lambda = {scaling_fit.exponent:.4f}")


@cli.command(name="threshold-summary")
@click.argument("record_files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--window", type=float, nargs=2, default=None, help="Fit window P_MIN P_MAX.")
@click.option(
    "--out",
    default="threshold_summary.csv",
    show_default=True,
    type=click.Path(dir_okay=False),
    help="Summary CSV file.",
)
@_report_errors
def threshold_summary(record_files, window, out):
    """Table of fitted thresholds against the hashing bound."""
    rows = main.threshold_summary(record_files, window=window or None, out=out)
    print(Style.BRIGHT + f"{'rate':>8} {'p_c':>10} {'sigma':>10} {'hashing':>10}" + Style.RESET_ALL)
    for row in rows:
        colour = Fore.GREEN if row.p_c <= row.p_hashing else Fore.RED
        print(
            f"{row.rate:>8} "
            + colour
            + f"{row.p_c:>10.5f}"
            + Style.RESET_ALL
            + f" {row.sigma_pc:>10.2g} "
            + Fore.CYAN
            + f"{row.p_hashing:>10.5f}"
            + Style.RESET_ALL
        )
