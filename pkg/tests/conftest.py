import random

import pytest

from hedrites.gen import generate_hedrite_table, generate_octahedrites
from hedrites.pmap.core import PlanarMap, relabel
from hedrites.selfdual import generate_self_hedrites

CORPUS_N = 14


def shuffled(m: PlanarMap, rng: random.Random) -> PlanarMap:
    perm = list(range(m.dart_count))
    rng.shuffle(perm)
    return relabel(m, perm)


@pytest.fixture(scope="session")
def hedrites14():
    """i -> GenerationRun for i = 4..8, n <= 14."""
    return generate_hedrite_table(CORPUS_N)


@pytest.fixture(scope="session")
def self_hedrites14():
    return {i: generate_self_hedrites(i, CORPUS_N) for i in (2, 3, 4)}


@pytest.fixture(scope="session")
def octahedrites22():
    return generate_octahedrites(22)


@pytest.fixture(scope="session")
def four_regular_corpus(hedrites14):
    return [m for i in range(4, 9) for m in hedrites14[i].all_maps()]


@pytest.fixture(scope="session")
def self_corpus(self_hedrites14):
    return [g for i in (2, 3, 4) for g in self_hedrites14[i].all_maps()]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
