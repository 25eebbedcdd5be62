import random

import pytest
from hypothesis import settings, strategies as st

from plhomeo.sampling import random_fn, random_interval_map, random_lift

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rngs = st.randoms(use_true_random=False)
lifts = rngs.map(random_lift)
small_lifts = rngs.map(lambda r: random_lift(r, max_pieces=3, offset=0))
fns = rngs.map(random_fn)
seeds = rngs.map(lambda r: random_interval_map(r, 0, 1))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
