from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs
from ulc.coloring import (
    Budget,
    BudgetExceeded,
    ListAssignment,
    alon_tarsi_certificate,
    chromatic_number,
    clear_memo,
    color_partitions,
    count_list_colorings,
    find_list_coloring,
    is_k_choosable,
    is_k_colorable,
    is_proper_list_coloring,
    is_uniquely_k_colorable,
    kernel_certificate,
    list_chromatic_number,
    unique_list_coloring,
)
from ulc.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    figure1,
    graph6_encode,
    parse_named,
    path,
    theta,
)


def brute_colorings(g: Graph, L: ListAssignment) -> list[tuple[int, ...]]:
    return [c for c in itertools.product(*[sorted(L[v]) for v in range(g.n)])
            if all(c[u] != c[v] for u, v in g.edges())]


@st.composite
def graph_and_lists(draw, max_n=6, palette=4, max_size=3):
    g = draw(graphs(max_n=max_n))
    lists = [draw(st.frozensets(st.integers(1, palette), min_size=1, max_size=max_size))
             for _ in range(g.n)]
    return g, ListAssignment(tuple(lists))


# -- counting -------------------------------------------------------------------


def test_count_examples():
    k2 = complete(2)
    assert count_list_colorings(k2, ListAssignment.of([{1, 2}, {1, 2}]), 10) == 2
    p3 = path(3)
    assert count_list_colorings(p3, ListAssignment.of([{1}, {1, 2}, {1}]), 10) == 1
    assert count_list_colorings(p3, ListAssignment.of([{1}, {1, 2}, {2}]), 10) == 0


def test_unique_list_coloring_examples():
    assert unique_list_coloring(cycle(4), ListAssignment.uniform(4, {1, 2})) is None
    assert unique_list_coloring(path(3), ListAssignment.of([{1}, {2}, {1}])) == (1, 2, 1)
    assert unique_list_coloring(path(3), ListAssignment.of([{1}, {1}, {2}])) is None


@settings(max_examples=300, deadline=None)
@given(graph_and_lists())
def test_count_matches_brute_force(data):
    g, L = data
    every = brute_colorings(g, L)
    assert count_list_colorings(g, L, 10**6) == len(every)
    assert count_list_colorings(g, L, 2) == min(len(every), 2)
    c = find_list_coloring(g, L)
    assert (c is None) == (not every)
    if c is not None:
        assert is_proper_list_coloring(g, L, c)
    u = unique_list_coloring(g, L)
    assert u == (every[0] if len(every) == 1 else None)


@settings(max_examples=150, deadline=None)
@given(graph_and_lists(), st.permutations(list(range(1, 5))))
def test_count_invariant_under_color_renaming(data, perm):
    g, L = data
    mapping = {c: perm[c - 1] + 10 for c in range(1, 5)}
    assert count_list_colorings(g, L.renamed(mapping), 100) == count_list_colorings(g, L, 100)


@settings(max_examples=150, deadline=None)
@given(graph_and_lists(), st.data())
def test_shrinking_lists_never_adds_colorings(data, draw):
    g, L = data
    if g.n == 0:
        return
    v = draw.draw(st.integers(0, g.n - 1))
    if len(L[v]) < 2:
        return
    smaller = list(L.lists)
    smaller[v] = frozenset(sorted(L[v])[1:])
    assert count_list_colorings(g, ListAssignment(tuple(smaller)), 100) <= count_list_colorings(g, L, 100)


def test_list_assignment_json_roundtrip():
    L = ListAssignment.of([{1, 2}, {3}])
    assert ListAssignment.from_json(L.to_json(), 2) == L
    with pytest.raises(ValueError):
        ListAssignment.from_json('{"0": [1]}', 2)


# -- chromatic number and partitions ---------------------------------------------


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    chi = chromatic_number(g)
    if g.n == 0:
        assert chi == 0
        return
    assert is_k_colorable(g, chi)
    assert chi == 1 or not is_k_colorable(g, chi - 1)
    # an independent oracle: colorings from networkx's greedy are an upper bound
    greedy = nx.greedy_color(nx.Graph(g.edges()) if g.edges() else nx.empty_graph(g.n))
    assert chi <= max(greedy.values(), default=0) + 1


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6))
def test_partitions_count_matches_chromatic_polynomial(g):
    # partitions into at most k independent sets, times k falling factorials,
    # equal the number of proper k-colorings
    k = 3
    parts = list(color_partitions(g, k))
    falling = sum(math.perm(k, len(set(c))) for c in parts)
    brute = sum(1 for c in itertools.product(range(k), repeat=g.n)
                if all(c[u] != c[v] for u, v in g.edges()))
    assert falling == brute


def test_uniquely_colorable_examples():
    c = is_uniquely_k_colorable(cycle(6), 2)
    assert c is not None and sorted(c.count(x) for x in set(c)) == [3, 3]
    c = is_uniquely_k_colorable(complete(3), 3)
    assert c is not None and len(set(c)) == 3
    assert is_uniquely_k_colorable(cycle(5), 3) is None


# -- choosability -------------------------------------------------------------------


def test_choosable_examples():
    assert is_k_choosable(cycle(4), 2)
    res = is_k_choosable(complete(3), 2)
    assert not res and res.witness == ListAssignment.uniform(3, {1, 2})
    assert is_k_choosable(theta(2, 2, 2), 2)


@pytest.mark.parametrize("g,expected", [
    (cycle(6), 2), (cycle(5), 3), (complete(4), 4), (complete_bipartite(3, 3), 3),
    (complete_bipartite(2, 4), 3), (theta(2, 2, 4), 2), (figure1(), 4), (Graph.empty(3), 1),
])
def test_list_chromatic_number_examples(g, expected):
    assert list_chromatic_number(g) == expected


@pytest.mark.parametrize("g6", ["Cr", "D~{", "Es\\o", "EFz_", "Ehuw", "E~~w", "F?zV_", "F{dw?"])
@pytest.mark.parametrize("k", [2, 3])
def test_certificates_agree_with_exhaustive(g6, k):
    from ulc.graph import graph6_decode

    g = graph6_decode(g6)
    clear_memo()
    fast = bool(is_k_choosable(g, k, certificates=True))
    clear_memo()
    slow = bool(is_k_choosable(g, k, certificates=False))
    assert fast == slow


def _brute_choosable(g: Graph, k: int, palette: int) -> bool:
    lists = list(itertools.combinations(range(1, palette + 1), k))
    for choice in itertools.product(lists, repeat=g.n):
        if not brute_colorings(g, ListAssignment.of(choice)):
            return False
    return True


@pytest.mark.parametrize("g", [cycle(3), cycle(4), path(4), complete(4), parse_named("K4-e"),
                               complete_bipartite(1, 3), Graph.empty(2)])
def test_two_choosability_against_brute_force(g):
    # a bad 2-assignment on n vertices needs at most 2n colors; n <= 4 here
    assert bool(is_k_choosable(g, 2, certificates=False)) == _brute_choosable(g, 2, 2 * g.n)


def test_k23_is_not_three_colors_short():
    # K_{2,3}: 2-choosable; K_{2,4}: not
    assert is_k_choosable(complete_bipartite(2, 3), 2)
    res = is_k_choosable(complete_bipartite(2, 4), 2, certificates=False)
    assert not res
    assert count_list_colorings(complete_bipartite(2, 4), res.witness, 1) == 0


def test_certificate_functions():
    assert alon_tarsi_certificate(cycle(4), 2) is True
    assert alon_tarsi_certificate(cycle(5), 2) is False
    assert kernel_certificate(cycle(5), 3) is True
    assert kernel_certificate(complete(3), 2) is False


def test_k33_line_graph_is_three_choosable_by_kernel():
    from ulc.graph import line_graph

    rook = line_graph(complete_bipartite(3, 3))
    assert alon_tarsi_certificate(rook, 3) is False
    clear_memo()
    res = is_k_choosable(rook, 3)
    assert res and res.method == "kernel"


def test_budget_exceeded_is_raised():
    clear_memo()
    with pytest.raises(BudgetExceeded):
        is_k_choosable(complete_bipartite(3, 3), 2, Budget(3), certificates=False)
    with pytest.raises(ValueError):
        is_k_choosable(cycle(4), 0)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_list_chromatic_number_between_chi_and_degeneracy(g):
    if g.n == 0:
        return
    chi_l = list_chromatic_number(g)
    assert chromatic_number(g) <= chi_l <= max(g.degrees()) + 1
    res = is_k_choosable(g, chi_l)
    assert res, graph6_encode(g)
    if chi_l > 1:
        bad = is_k_choosable(g, chi_l - 1)
        assert not bad and count_list_colorings(g, bad.witness, 1) == 0
