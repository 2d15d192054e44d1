import random

import pytest
from hypothesis import strategies as st

from divseq.satset import MultiplicityMap, saturate

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def saturated_sets(max_gen=12, max_count=3):
    return st.lists(st.integers(1, max_gen), min_size=1, max_size=max_count).map(saturate)


def order_reversing_maps(max_gen=10, max_mult=3):
    """Sums of saturated-set indicators are exactly the order-reversing maps."""
    return st.lists(saturated_sets(max_gen), min_size=1, max_size=max_mult).map(
        lambda layers: sum((MultiplicityMap.indicator(s) for s in layers), MultiplicityMap())
    )


def random_order_reversing_map(rng: random.Random, max_gen=8, max_mult=3) -> MultiplicityMap:
    lam = MultiplicityMap()
    for _ in range(rng.randint(1, max_mult)):
        gens = [rng.randint(1, max_gen) for _ in range(rng.randint(1, 3))]
        lam = lam + MultiplicityMap.indicator(saturate(gens))
    return lam
