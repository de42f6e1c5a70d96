import sys
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from math import gcd
from functools import reduce

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def generator_sets(draw, max_gen=14, max_len=4):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=2, max_size=max_len, unique=True))
    if reduce(gcd, gens) != 1:
        gens.append(draw(st.sampled_from([3, 5, 7, 11, 13])))
        if reduce(gcd, gens) != 1:
            gens.append(1 + max(gens))
    return sorted(gens)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for i in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[i])
