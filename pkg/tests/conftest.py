from __future__ import annotations

import functools

import pytest

import ulc.constructions
import ulc.unique
from ulc.coloring import unique_list_coloring

# (graph, list assignment, coloring, origin) for every witness handed out
# while the suite runs; the acceptance sweep audits them at the very end.
WITNESSES: list[tuple] = []
_SEEN: set = set()
ACCEPTANCE: dict[str, tuple[str, str]] = {}


def _remember(g, L, c, origin):
    key = (g, L, tuple(c))
    if key not in _SEEN:
        _SEEN.add(key)
        WITNESSES.append((g, L, tuple(c), origin))


def _wrap_uflc(fn):
    @functools.wraps(fn)
    def wrapper(g, sizes, budget):
        report = fn(g, sizes, budget)
        if report.witness is not None:
            _remember(g, *report.witness, "search")
        return report

    return wrapper


def _wrap_equality(fn):
    @functools.wraps(fn)
    def wrapper(g, order=None):
        f, L = fn(g, order)
        _remember(g, L, unique_list_coloring(g, L), "equality")
        return f, L

    return wrapper


def _wrap_lemma1(fn):
    @functools.wraps(fn)
    def wrapper(g, k):
        L = fn(g, k)
        _remember(g, L, unique_list_coloring(g, L), "lemma1")
        return L

    return wrapper


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.addinivalue_line("markers", "run_last: schedule after every other test")
    ulc.unique._uflc = _wrap_uflc(ulc.unique._uflc)
    ulc.constructions.equality_flist = _wrap_equality(ulc.constructions.equality_flist)
    ulc.constructions.lemma1_assignment = _wrap_lemma1(ulc.constructions.lemma1_assignment)


def pytest_collection_modifyitems(session, config, items):
    # the witness audit must see everything the rest of the run produced
    last = [it for it in items if it.get_closest_marker("run_last")]
    items[:] = [it for it in items if it not in last] + last


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = dict(report.user_properties).get("criterion")
    if marker is None:
        return
    number, title = marker
    ACCEPTANCE[number] = ("PASS" if report.passed else "FAIL", title)


@pytest.fixture
def criterion(request, record_property):
    mark = request.node.get_closest_marker("criterion")
    record_property("criterion", mark.args)
    return mark.args


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE, key=int):
        verdict, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {int(number):2d}: {verdict}  {title}")
