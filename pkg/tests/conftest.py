import os
import random

import pytest
from hypothesis import settings

SEED = int(os.environ.get("JUMPLOCI_SEED", "20240611"))

settings.register_profile("repro", derandomize=True, database=None, deadline=None, max_examples=60)
settings.load_profile("repro")


def pytest_report_header(config):
    return f"jumploci seed: {SEED} (set JUMPLOCI_SEED to override)"


@pytest.fixture
def rng(request):
    # one stream per test, stable under reordering
    return random.Random(f"{SEED}:{request.node.nodeid}")
