#!/usr/bin/env python3

import os
import pathlib
import shutil
import sys

import click
import pytest

PACKAGE_DIR = "random_circuit_codes"
TEST_DIR = pathlib.Path(__file__).parent / "test"


@click.command(context_settings=dict(ignore_unknown_options=True))
@click.option(
    "-a",
    "--all",
    is_flag=True,
    default=False,
    help="Run all tests including the end-to-end experiments and exhaustive oracles",
)
@click.option(
    "-o",
    "--oracles",
    is_flag=True,
    default=False,
    help="Run only the exhaustive oracle checks in the integration tests",
)
@click.option(
    "-w",
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Set RCC_WORKERS for experiments run by the tests",
)
@click.option("-v", "verbose", flag_value="-v", default=False)
@click.option("-vv", "verbose", flag_value="-vv", default=False)
@click.argument("pytest_args", nargs=-1, type=click.UNPROCESSED)
def run_tests(all, oracles, workers, verbose, pytest_args):
    """Run automated tests. By default, only run unit tests."""
    if workers is not None:
        os.environ["RCC_WORKERS"] = str(workers)
    returncode = _run_tests(all=all, oracles=oracles, verbose=verbose, pytest_args=pytest_args)
    sys.exit(returncode)


def _run_tests(all, oracles, verbose, pytest_args):
    _remove_pycache(PACKAGE_DIR)
    args = ["--pylint", "--cov-report", "term-missing", f"--cov={PACKAGE_DIR}"]
    if verbose:
        args.append(verbose)
    if pytest_args:
        args.extend(pytest_args)
    if not [arg for arg in args if arg == "-x" or arg.startswith("--maxfail")]:
        args.append("--maxfail=10")
    integration = TEST_DIR / "integrationtest"
    if oracles:
        args.extend(str(path) for path in sorted(integration.glob("test_*_oracles.py")))
    elif all:
        args.append("-s")
        if not verbose:
            args.append("-vv")
    else:
        args.append(f"--ignore={integration}")
    return pytest.main(args)


def _remove_pycache(dir):
    """Remove pycache directories of the package and its subpackages."""
    for pycache in pathlib.Path(dir).rglob("__pycache__"):
        shutil.rmtree(pycache, ignore_errors=True)


if __name__ == "__main__":
    run_tests()
