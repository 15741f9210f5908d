from __future__ import annotations

import itertools

import networkx as nx
import pytest

from ulc.coloring import Budget, ListAssignment, count_list_colorings
from ulc.graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    figure1,
    figure2,
    parse_named,
    path,
    star,
)
from ulc.unique import (
    Undecided,
    WitnessAuditError,
    audit_witness,
    candidate_count,
    degree_ceiling,
    edge_m_number,
    is_uflc,
    is_uklc,
    m_number,
    necessary_condition_holds,
    rich_classes,
)


def small_graphs(max_n: int):
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


def brute_uflc(g: Graph, sizes) -> bool:
    """Every witness only uses colors of its own coloring, so renaming puts
    it inside {1..n}; try all such assignments."""
    pal = range(1, g.n + 1)
    options = [list(itertools.combinations(pal, s)) for s in sizes]
    for choice in itertools.product(*options):
        if count_list_colorings(g, ListAssignment.of(choice), 2) == 1:
            return True
    return False


@pytest.mark.parametrize("k", [2, 3])
def test_uklc_matches_brute_force_up_to_4_vertices(k):
    for g in small_graphs(4):
        assert is_uklc(g, k).found == brute_uflc(g, [k] * g.n), (g, k)


@pytest.mark.parametrize("g", [cycle(5), parse_named("K4-e"), star(4),
                               complete_bipartite(2, 3), path(5)])
def test_u2lc_matches_brute_force_on_5_vertices(g):
    assert is_uklc(g, 2).found == brute_uflc(g, [2] * g.n)


def test_uflc_matches_brute_force_mixed_sizes():
    for g in small_graphs(4):
        for sizes in itertools.product((1, 2, 3), repeat=g.n):
            if sum(sizes) > g.n + g.num_edges + 1:
                continue
            assert is_uflc(g, sizes).found == brute_uflc(g, sizes), (g, sizes)


def test_uklc_examples():
    rep = is_uklc(cycle(5), 2)
    assert rep.decided and not rep.found
    rep = is_uklc(figure1(), 3)
    assert rep.decided and rep.found
    L, c = rep.witness
    assert count_list_colorings(figure1(), L, 2) == 1
    rep = is_uklc(parse_named("K4-e"), 2)
    assert rep.decided and rep.found


def test_uflc_examples():
    rep = is_uflc(complete(2), {0: 1, 1: 2})
    L, c = rep.witness
    assert len(L[0]) == 1 and len(L[1]) == 2 and L[0] <= L[1]
    assert not is_uflc(complete(2), [2, 2]).found
    g = figure2()
    rep = is_uflc(g, [1] * g.n)
    assert rep.found and all(len(x) == 1 for x in rep.witness[0].lists)


def test_uflc_input_errors():
    with pytest.raises(ValueError):
        is_uflc(complete(2), [1])
    with pytest.raises(ValueError):
        is_uflc(complete(2), [0, 1])
    with pytest.raises(ValueError):
        is_uklc(complete(2), 0)


def test_disconnected_graph_needs_every_component():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5)])
    # triangle is not U2LC, K4-e is
    assert not is_uklc(g, 2).found
    diamond = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    h = Graph.from_edges(8, diamond + [(u + 4, v + 4) for u, v in diamond])
    assert is_uklc(h, 2).found
    # an isolated vertex with a 2-list always has two colorings
    assert not is_uklc(Graph.from_edges(5, diamond), 2).found


def test_budget_gives_undecided_report():
    rep = is_uklc(figure1(), 3, Budget(5))
    assert not rep.decided and not rep.found
    with pytest.raises(Undecided) as info:
        m_number(figure1(), Budget(60), memo=False)
    assert info.value.partial.witnesses[1]


@pytest.mark.parametrize("g,m", [
    (cycle(7), 2), (figure1(), 4), (complete_bipartite(3, 3), 2), (cycle(5), 2),
    (parse_named("K4-e"), 3), (complete(1), 2), (complete(2), 2), (figure2(), 2),
])
def test_m_number_examples(g, m):
    res = m_number(g)
    assert res.m == m
    assert res.m <= degree_ceiling(g)
    for k, (L, c) in res.witnesses.items():
        assert L.sizes() == [k] * g.n
        assert count_list_colorings(g, L, 2) == 1


def test_m_number_memo_relabels_witnesses():
    g = figure1()
    perm = [3, 5, 0, 6, 1, 2, 4]
    h = g.relabel(perm)
    first = m_number(g)
    second = m_number(h)
    assert first.m == second.m
    for k, (L, c) in second.witnesses.items():
        assert count_list_colorings(h, L, 2) == 1


def test_m_number_null_graph():
    with pytest.raises(GraphError):
        m_number(Graph.empty(0))


@pytest.mark.parametrize("g,m", [(path(3), 2), (complete(3), 2), (cycle(4), 2), (star(3), 2)])
def test_edge_m_number_examples(g, m):
    assert edge_m_number(g) == m


def test_audit_rejects_bad_witnesses():
    g = path(3)
    L = ListAssignment.of([{1, 2}, {2}, {1}])
    c = (1, 2, 1)
    audit_witness(g, L, c, [2, 1, 1])
    with pytest.raises(WitnessAuditError):
        audit_witness(g, L, c, [2, 2, 1])
    with pytest.raises(WitnessAuditError):
        audit_witness(g, ListAssignment.of([{1, 3}, {2}, {1}]), c, [2, 1, 1])
    with pytest.raises(WitnessAuditError):
        audit_witness(g, ListAssignment.of([{1, 2}, {1, 2}, {1, 2}]), c, [2, 2, 2])


def test_witness_helpers():
    g = path(3)
    assert necessary_condition_holds(g, ListAssignment.of([{1, 2}, {2}, {1}]), (1, 2, 1))
    assert not necessary_condition_holds(g, ListAssignment.of([{1, 3}, {2}, {1}]), (1, 2, 1))
    assert rich_classes(g, (1, 2, 1), 1) == 2
    assert candidate_count(g, (1, 2, 1), [2, 2, 2]) == 1
