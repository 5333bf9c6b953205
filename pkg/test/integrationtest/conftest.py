"""Shared setup for the end to end tests."""
import shutil
from pathlib import Path

import pytest


@pytest.fixture(scope="module")
def results_dir(request):
    """Fresh results directory for a test module, removed afterwards."""
    path = Path(__file__).parent.absolute() / f"results_{request.module.__name__.split('.')[-1]}"
    if path.exists():
        shutil.rmtree(path)
    path.mkdir()

    def teardown():
        if path.is_dir():
            shutil.rmtree(path)

    request.addfinalizer(teardown)
    return path
