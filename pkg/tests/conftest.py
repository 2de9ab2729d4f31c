import itertools

import pytest

from polyskel.graphs import SimpleGraph
from polyskel.posets import Poset


def brute_force_posets(d):
    """Labeled strict orders on range(d): pick <, > or nothing per pair, keep transitive ones."""
    pairs = list(itertools.combinations(range(d), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel.add((i, j))
            elif c == 2:
                rel.add((j, i))
        if all((a, c) in rel for a, b in rel for b2, c in rel if b == b2):
            yield frozenset(rel)


def brute_force_ideals(P):
    out = []
    for mask in range(1 << P.d):
        S = {i for i in range(P.d) if mask >> i & 1}
        if all(a in S for a, b in P.relations if b in S):
            out.append(frozenset(S))
    return out


def from_one_based(pairs):
    return frozenset((i - 1, j - 1) for i, j in pairs)


@pytest.fixture
def vposet():
    # a < c, b < c with a, b, c = 0, 1, 2
    return Poset(3, frozenset({(0, 2), (1, 2)}))


@pytest.fixture
def diamond():
    # a < b, a < c, b < d, c < d
    return Poset(4, frozenset({(0, 1), (0, 2), (1, 3), (2, 3)}))


@pytest.fixture
def path3():
    return SimpleGraph.path(3)


# one summary line per acceptance criterion, taken from the test outcome

_criteria = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")
    config.stash[_criteria] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.failed):
        label = marker.args[0]
        detail = "; ".join(str(v) for k, v in report.user_properties if k == "detail")
        status = "PASS" if report.passed else "FAIL"
        item.config.stash[_criteria][label] = (status, detail)
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash[_criteria]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(results):
        status, detail = results[label]
        line = f"{status} criterion {label}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
