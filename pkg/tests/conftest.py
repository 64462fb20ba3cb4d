import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from lyt import corpus  # noqa: E402

settings.register_profile(
    "lyt", deadline=None, max_examples=40, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lyt")

SMALL = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def rational_vectors(n):
    return st.lists(SMALL, min_size=n, max_size=n).map(tuple)


def rational_matrices(rows, cols, elements=SMALL):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


CORPUS = corpus.corpus_pairs()
CORPUS_IDS = [name for name, _, _ in CORPUS]


@pytest.fixture(params=CORPUS, ids=CORPUS_IDS)
def pair(request):
    """(name, algebra, operator) for every corpus entry."""
    return request.param



_CRITERIA = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """``criterion(number, title)`` marks a criterion as failing until the returned
    callback records the verdict; the lines are printed in the terminal summary."""
    lines = request.config.stash.setdefault(_CRITERIA, {})

    def start(number, title):
        def done(ok):
            lines[number] = f"criterion {number:2d}: {'pass' if ok else 'FAIL'}  {title}"
            return ok
        done(False)
        return done

    return start


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_CRITERIA, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
