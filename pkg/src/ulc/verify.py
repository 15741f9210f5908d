"""Replays the inequalities on computed quantities.

Each check returns a :class:`CheckOutcome`; a failed outcome is a finding
(either a bug or a counterexample) and carries what is needed to reproduce
it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .coloring import Budget, ListAssignment, count_list_colorings, list_chromatic_number
from .corpus import CorpusEntry
from .graph import Graph, GraphError, PlaneGraph, contains_k4, contains_triangle, graph6_encode, line_graph
from .recognizers import is_list_critical_bruteforce
from .unique import WitnessReport, degree_ceiling, is_uklc, m_number, rich_classes


class RejectedInput(ValueError):
    """The check's precondition does not hold for the supplied data."""


@dataclass(frozen=True)
class CheckOutcome:
    claim_id: str
    instance: str
    lhs: int | float
    rhs: int | float
    holds: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _name(g: Graph, name: str | None) -> str:
    return name or graph6_encode(g)


def _verified(g: Graph, L: ListAssignment, c: Sequence[int]) -> None:
    if len(L) != g.n or len(c) != g.n:
        raise RejectedInput("witness does not cover the graph")
    if count_list_colorings(g, L, 2) != 1 or any(c[v] not in L[v] for v in range(g.n)):
        raise RejectedInput("witness is not a verified unique coloring")
    if any(c[u] == c[v] for u, v in g.edges()):
        raise RejectedInput("witness coloring is improper")


def check_sigmafv(g: Graph, report: WitnessReport | tuple[ListAssignment, Sequence[int]],
                  name: str | None = None) -> CheckOutcome:
    """Sum of list sizes is at most n + e."""
    witness = report.witness if isinstance(report, WitnessReport) else report
    if witness is None:
        raise RejectedInput("report carries no witness")
    L, c = witness
    _verified(g, L, c)
    total = sum(L.sizes())
    bound = g.n + g.num_edges
    return CheckOutcome("sigmafv", _name(g, name), total, bound, total <= bound,
                        {"assignment": L.to_dict()})


def record_uniform_excess(g: Graph, k: int, name: str | None = None) -> CheckOutcome:
    """Informational: for a graph carrying a UkLC witness, compare e with
    (k-1) n. Nothing is asserted; ``detail["strict"]`` tells whether e
    exceeded (k-1) n on this instance."""
    lhs, rhs = g.num_edges, (k - 1) * g.n
    return CheckOutcome("uniform_excess", _name(g, name), lhs, rhs, True,
                        {"k": k, "strict": lhs > rhs, "informational": True})


def check_bound(g: Graph, name: str | None = None, budget: Budget | int | None = None) -> CheckOutcome:
    """m(G) <= floor(average degree / 2) + 2."""
    m = m_number(g, budget).m
    ceiling = degree_ceiling(g)
    return CheckOutcome("bound", _name(g, name), m, ceiling, m <= ceiling,
                        {"n": g.n, "e": g.num_edges})


def check_logbnd(g: Graph, name: str | None = None, budget: Budget | int | None = None) -> CheckOutcome:
    """For bipartite G, m(G) <= 2 + log2 n, compared as 2**(m-2) <= n."""
    if not g.is_bipartite():
        raise RejectedInput("logarithmic bound applies to bipartite graphs only")
    m = m_number(g, budget).m
    return CheckOutcome("logbnd", _name(g, name), 2 ** (m - 2), g.n, 2 ** (m - 2) <= g.n, {"m": m})


def check_8face(pg: PlaneGraph, name: str | None = None,
                budget: Budget | int | None = None) -> CheckOutcome:
    """At most 7 triangular faces forces m <= 3; equivalently m >= 4 forces
    at least 8 triangular faces."""
    try:
        pg.validate()
    except GraphError as exc:
        raise RejectedInput(str(exc)) from exc
    t = pg.triangular_faces()
    m = m_number(pg.graph, budget).m
    detail = {"m": m, "triangular_faces": t, "faces": len(pg.faces)}
    if t <= 7:
        return CheckOutcome("8face", _name(pg.graph, name), m, 3, m <= 3, detail)
    return CheckOutcome("8face", _name(pg.graph, name), t, 8, m <= 3 or t >= 8, detail)


def check_kcolor(g: Graph, L: ListAssignment, c: Sequence[int], k: int,
                 name: str | None = None) -> CheckOutcome:
    """At least k-1 color classes hold a vertex whose neighbours see k colors."""
    if set(L.sizes()) - {k}:
        raise RejectedInput(f"lists are not all of size {k}")
    _verified(g, L, c)
    rich = rich_classes(g, c, k)
    return CheckOutcome("kcolor", _name(g, name), rich, k - 1, rich >= k - 1, {"k": k})


def check_necessary(g: Graph, L: ListAssignment, c: Sequence[int],
                    name: str | None = None) -> CheckOutcome:
    """Every list color other than c(v) occurs on N(v); lhs counts offenders."""
    _verified(g, L, c)
    offenders = [v for v in range(g.n)
                 if not L[v] - {c[v]} <= {c[u] for u in g.neighbors(v)}]
    return CheckOutcome("neighborhood", _name(g, name), len(offenders), 0, not offenders,
                        {"offenders": offenders})


def check_edge_mnumber(g: Graph, name: str | None = None,
                       budget: Budget | int | None = None) -> CheckOutcome:
    """m'(G) <= Delta + 1, and equality only for regular G."""
    if g.num_edges == 0:
        raise RejectedInput("edge m-number needs at least one edge")
    m = m_number(line_graph(g), budget).m
    delta = g.max_degree
    holds = m <= delta + 1 and (m < delta + 1 or g.is_regular())
    return CheckOutcome("edgemnum", _name(g, name), m, delta + 1, holds,
                        {"regular": g.is_regular()})


def check_planar_bound(entry: CorpusEntry, budget: Budget | int | None = None) -> CheckOutcome:
    """m <= 4 for planar graphs, m <= 3 when also triangle-free."""
    if not entry.planar:
        raise RejectedInput("entry is not flagged planar")
    g = entry.graph
    m = m_number(g, budget).m
    triangle_free = not contains_triangle(g)
    cap = 3 if triangle_free else 4
    return CheckOutcome("plnrbbnd", entry.name, m, cap, m <= cap,
                        {"triangle_free": triangle_free})


def scan_conjecture_u3lc_planar(entries: Iterable[CorpusEntry],
                                budget: Budget | int | None = None) -> list[CheckOutcome]:
    """For every planar entry that is U3LC, require a K4 subgraph. A
    triangle-free U3LC hit is reported as a violation of the degree bound."""
    out = []
    for entry in entries:
        if not entry.planar:
            raise RejectedInput(f"{entry.name} is not flagged planar")
        g = entry.graph
        report = is_uklc(g, 3, budget)
        if not report.decided:
            out.append(CheckOutcome("conj_k4", entry.name, 0, 0, False, {"undecided": True}))
            continue
        if report.witness is None:
            out.append(CheckOutcome("conj_k4", entry.name, 0, 0, True, {"u3lc": False}))
            continue
        has_k4 = contains_k4(g)
        triangle_free = not contains_triangle(g)
        L, c = report.witness
        out.append(CheckOutcome(
            "conj_k4", entry.name, int(has_k4), 1, has_k4 and not triangle_free,
            {"u3lc": True, "graph6": graph6_encode(g), "assignment": L.to_dict(),
             "coloring": list(c), "triangle_free": triangle_free}))
    return out


def check_critical_mnumber(g: Graph, name: str | None = None,
                           budget: Budget | int | None = None) -> CheckOutcome:
    """A k-list-critical graph has m-number at most k."""
    if not is_list_critical_bruteforce(g, budget):
        raise RejectedInput("graph is not list-critical")
    k = list_chromatic_number(g, budget)
    m = m_number(g, budget).m
    return CheckOutcome("critical_mnumber", _name(g, name), m, k, m <= k, {"chi_list": k})
