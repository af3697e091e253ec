import itertools

import pytest

from strata_atlas import admissible_set, gsp_context, level_to_parahoric
from strata_atlas.siegel import NAMED_LEVELS_G2


def all_levels(g):
    return [J for r in range(1, g + 2) for J in itertools.combinations(range(g + 1), r)]


@pytest.fixture(scope="session")
def ctx():
    return gsp_context(2)


@pytest.fixture(scope="session")
def adm(ctx):
    return admissible_set(ctx)


@pytest.fixture(scope="session")
def levels(ctx):
    """Named GSp4 levels mapped to their parahorics."""
    return {name: level_to_parahoric(ctx, J) for name, J in NAMED_LEVELS_G2.items()}


@pytest.fixture(scope="session")
def ctx3():
    return gsp_context(3)


@pytest.fixture(scope="session")
def adm3(ctx3):
    return admissible_set(ctx3)


@pytest.fixture
def w(ctx):
    """Parse word notation in the GSp4 context."""
    return ctx.parse


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA_LINES
    except ImportError:
        return
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES):
            terminalreporter.write_line(line)
