import random

import pytest


@pytest.fixture
def rng(request):
    # one reproducible stream per test
    return random.Random(request.node.nodeid)
