"""Complete search for uniquely list colorable witnesses, and m-numbers.

A witness is a list assignment together with its single coloring ``c``.
Every color of ``L(v)`` other than ``c(v)`` must sit on a neighbour of ``v``
(otherwise ``v`` could switch to it), so the search runs over target colorings
``c`` (set partitions into independent sets) and, per vertex, over lists
``{c(v)} | S`` with ``S`` drawn from the colors on ``N(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .coloring import (
    Budget,
    BudgetExceeded,
    ListAssignment,
    _budget,
    _search,
    color_partitions,
    count_list_colorings,
    degree_order,
)
from .graph import Graph, GraphError, _bits, canonical_form, line_graph


class WitnessAuditError(AssertionError):
    """A returned witness violates a property every witness must have."""


class Undecided(RuntimeError):
    """The search ran out of budget; ``partial`` holds what was settled."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class WitnessReport:
    decided: bool
    witness: tuple[ListAssignment, tuple[int, ...]] | None
    colorings_considered: int
    sizes: tuple[int, ...]
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        out: dict = {
            "decided": self.decided,
            "found": self.found,
            "colorings_considered": self.colorings_considered,
            "nodes": self.nodes,
            "sizes": list(self.sizes),
        }
        if self.witness is not None:
            L, c = self.witness
            out["assignment"] = L.to_dict()
            out["coloring"] = {str(v): x for v, x in enumerate(c)}
        return out


@dataclass(frozen=True)
class MNumberResult:
    m: int
    witnesses: dict[int, tuple[ListAssignment, tuple[int, ...]]]
    ceiling_used: int
    reports: dict[int, WitnessReport] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "ceiling": self.ceiling_used,
            "witnesses": {
                str(k): {"assignment": L.to_dict(), "coloring": {str(v): x for v, x in enumerate(c)}}
                for k, (L, c) in sorted(self.witnesses.items())
            },
        }


# -- post-hoc witness properties -------------------------------------------


def neighbor_colors(g: Graph, c: Sequence[int], v: int) -> set[int]:
    return {c[u] for u in g.neighbors(v)}


def necessary_condition_holds(g: Graph, L: ListAssignment, c: Sequence[int]) -> bool:
    """Every color of L(v) besides c(v) appears on N(v)."""
    return all(L[v] - {c[v]} <= neighbor_colors(g, c, v) for v in range(g.n))


def rich_classes(g: Graph, c: Sequence[int], k: int) -> int:
    """Number of color classes holding a vertex that sees at least k colors."""
    return len({c[v] for v in range(g.n) if len(neighbor_colors(g, c, v)) >= k})


def audit_witness(g: Graph, L: ListAssignment, c: Sequence[int],
                  sizes: Sequence[int]) -> None:
    if L.sizes() != list(sizes):
        raise WitnessAuditError(f"list sizes {L.sizes()} differ from requested {list(sizes)}")
    if count_list_colorings(g, L, 2) != 1:
        raise WitnessAuditError("witness assignment does not have a unique coloring")
    if not necessary_condition_holds(g, L, c):
        raise WitnessAuditError("a list color is missing from its vertex's neighbourhood")
    if sum(sizes) > g.n + g.num_edges:
        raise WitnessAuditError(f"sum of list sizes {sum(sizes)} exceeds n + e = {g.n + g.num_edges}")
    if len(set(sizes)) == 1 and sizes:
        k = sizes[0]
        if rich_classes(g, c, k) < k - 1:
            raise WitnessAuditError(f"fewer than {k - 1} classes contain a vertex seeing {k} colors")


# -- search ----------------------------------------------------------------


def _search_component(g: Graph, sizes: Sequence[int], budget: Budget
                      ) -> tuple[tuple[list[int], tuple[int, ...]] | None, int]:
    """Return ((list masks, coloring), colorings_considered) for one graph."""
    n = g.n
    adj = g.adj
    order = degree_order(g)
    considered = 0
    for c in color_partitions(g, budget=budget):
        considered += 1
        seen = []
        ok = True
        for v in range(n):
            m = 0
            for u in _bits(adj[v]):
                m |= 1 << c[u]
            if m.bit_count() < sizes[v] - 1:
                ok = False
                break
            seen.append(m)
        if not ok:
            continue
        options = []
        for v in order:
            pool = list(_bits(seen[v]))
            opts = []
            for extra in combinations(pool, sizes[v] - 1):
                m = 1 << c[v]
                for x in extra:
                    m |= 1 << x
                opts.append(m)
            options.append(opts)
        found = _assign(adj, order, options, c, budget)
        if found is not None:
            return (found, c), considered
    return None, considered


def _assign(adj: Sequence[int], order: Sequence[int], options: Sequence[Sequence[int]],
            c: Sequence[int], budget: Budget) -> list[int] | None:
    """Choose a list for each vertex in ``order`` so that ``c`` stays the
    only coloring.

    After each choice the assigned prefix ``A`` is tested: if ``G[A]`` has a
    second coloring that avoids ``c`` on the unassigned neighbours, it
    extends by ``c`` to a second coloring of any completion, so the branch
    is dead.
    """
    n = len(order)
    lists = [0] * len(adj)
    prefix: list[int] = []

    def rec(i: int) -> bool:
        if i == n:
            return True
        budget.tick()
        v = order[i]
        prefix.append(v)
        placed = 0
        for u in prefix:
            placed |= 1 << u
        for m in options[i]:
            lists[v] = m
            domains = [0] * len(adj)
            for a in prefix:
                d = lists[a]
                for w in _bits(adj[a] & ~placed):
                    d &= ~(1 << c[w])
                domains[a] = d
            count, _ = _search(adj, prefix, domains, 2, budget)
            if count == 1 and rec(i + 1):
                return True
        lists[v] = 0
        prefix.pop()
        return False

    return lists if rec(0) else None


def _uflc(g: Graph, sizes: Sequence[int], budget: Budget | int | None) -> WitnessReport:
    if len(sizes) != g.n:
        raise ValueError(f"size function covers {len(sizes)} vertices, graph has {g.n}")
    if any(s < 1 for s in sizes):
        raise ValueError("list sizes must be positive")
    b = _budget(budget)
    start = b.nodes
    lists: list[frozenset[int]] = [frozenset()] * g.n
    coloring = [0] * g.n
    considered = 0
    try:
        for comp in g.components():
            h = g.induced(comp)
            found, seen = _search_component(h, [sizes[v] for v in comp], b)
            considered += seen
            if found is None:
                return WitnessReport(True, None, considered, tuple(sizes), b.nodes - start)
            masks, c = found
            for i, v in enumerate(comp):
                lists[v] = frozenset(_bits(masks[i]))
                coloring[v] = c[i]
    except BudgetExceeded:
        return WitnessReport(False, None, considered, tuple(sizes), b.nodes - start)
    L = ListAssignment(tuple(lists))
    audit_witness(g, L, coloring, sizes)
    return WitnessReport(True, (L, tuple(coloring)), considered, tuple(sizes), b.nodes - start)


def is_uklc(g: Graph, k: int, budget: Budget | int | None = None) -> WitnessReport:
    """Search for a k-list assignment with exactly one coloring.

    A disconnected graph has a unique coloring iff each component does, so
    components are searched separately and the witnesses merged.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return _uflc(g, [k] * g.n, budget)


def is_uflc(g: Graph, f: Mapping[int, int] | Sequence[int],
            budget: Budget | int | None = None) -> WitnessReport:
    """As :func:`is_uklc` with per-vertex list sizes ``f(v)``."""
    if isinstance(f, Mapping):
        sizes = [int(f[v]) for v in range(g.n)]
    else:
        sizes = [int(x) for x in f]
    return _uflc(g, sizes, budget)


# -- m-number ----------------------------------------------------------------


def degree_ceiling(g: Graph) -> int:
    """floor(average degree / 2) + 2, computed as floor(e / n) + 2."""
    return g.num_edges // g.n + 2


_M_MEMO: dict[str, MNumberResult] = {}


def clear_memo() -> None:
    _M_MEMO.clear()


def m_number(g: Graph, budget: Budget | int | None = None, memo: bool = True) -> MNumberResult:
    """Least k for which ``g`` is not uniquely k-list colorable.

    k ascends from 2; every graph is U1LC via singleton lists of any proper
    coloring. The average-degree ceiling bounds the loop.
    """
    if g.n == 0:
        raise GraphError("the m-number of the null graph is undefined")
    key = None
    if memo:
        key, perm = canonical_form(g)
        hit = _M_MEMO.get(key)
        if hit is not None:
            return _relabel_result(hit, perm)
    b = _budget(budget)
    ceiling = degree_ceiling(g)
    try:
        first = next(color_partitions(g, budget=b))
    except BudgetExceeded as exc:
        raise Undecided(str(exc), None) from exc
    witnesses = {1: (ListAssignment(tuple(frozenset([x]) for x in first)), first)}
    reports: dict[int, WitnessReport] = {}
    k = 2
    while True:
        report = is_uklc(g, k, b)
        reports[k] = report
        if not report.decided:
            raise Undecided(f"search for k={k} exceeded the budget",
                            MNumberResult(k, witnesses, ceiling, reports))
        if report.witness is None:
            break
        witnesses[k] = report.witness
        if k >= ceiling:
            raise WitnessAuditError(
                f"found a U{k}LC witness at or above the ceiling {ceiling}")
        k += 1
    result = MNumberResult(k, witnesses, ceiling, reports)
    if key is not None:
        _M_MEMO[key] = _relabel_result(result, perm, forward=True)
    return result


def _relabel_result(res: MNumberResult, perm: Sequence[int], forward: bool = False) -> MNumberResult:
    """Move witnesses between input labels and canonical labels."""
    n = len(perm)

    def move(seq):
        out = [None] * n
        for v in range(n):
            if forward:
                out[perm[v]] = seq[v]
            else:
                out[v] = seq[perm[v]]
        return tuple(out)

    ws = {k: (ListAssignment(move(L.lists)), move(c)) for k, (L, c) in res.witnesses.items()}
    return MNumberResult(res.m, ws, res.ceiling_used, {})


def edge_m_number(g: Graph, budget: Budget | int | None = None) -> int:
    """m-number of the line graph, checked against Delta + 1 (equality only
    for regular graphs)."""
    m = m_number(line_graph(g), budget).m
    delta = g.max_degree
    if m > delta + 1:
        raise WitnessAuditError(f"edge m-number {m} exceeds Delta + 1 = {delta + 1}")
    if m == delta + 1 and not g.is_regular():
        raise WitnessAuditError("edge m-number reaches Delta + 1 on a non-regular graph")
    return m


def f_sum_bound(g: Graph) -> int:
    return g.n + g.num_edges


def candidate_count(g: Graph, c: Sequence[int], sizes: Sequence[int]) -> int:
    """Number of list assignments the search would try for target ``c``."""
    total = 1
    for v in range(g.n):
        total *= comb(len(neighbor_colors(g, c, v)), sizes[v] - 1)
    return total
