"""Builders for graphs and list assignments with a prescribed unique
coloring. Each builder checks its own result with the coloring engine
before returning it."""

from __future__ import annotations

from itertools import chain, combinations
from math import comb
from typing import Sequence

from .coloring import (
    ListAssignment,
    color_classes,
    count_list_colorings,
    is_uniquely_k_colorable,
    unique_list_coloring,
)
from .graph import Graph, GraphError


class ConstructionError(ValueError):
    """The input does not meet the construction's precondition."""


class ConstructionCheckFailed(AssertionError):
    """A construction produced output failing its own postcondition."""


def _sorted_classes(c: Sequence[int]) -> list[list[int]]:
    classes = list(color_classes(c).values())
    classes.sort(key=lambda cl: (len(cl), cl))
    return classes


def lemma1_assignment(g: Graph, k: int) -> ListAssignment:
    """k-lists on colors ``1..k+1`` with a unique coloring, for a uniquely
    (k+1)-colorable ``g`` whose classes sorted by size satisfy
    ``|C_i| >= i - 1``.

    Induction on k: the class ``C_{k+1}`` is removed, the rest gets
    (k-1)-lists on ``1..k`` recursively, every list then gains ``k+1``, and
    ``C_{k+1}`` receives lists whose common part is exactly ``{k+1}``.
    """
    if k < 1:
        raise ConstructionError("k must be positive")
    c = is_uniquely_k_colorable(g, k + 1)
    if c is None:
        raise ConstructionError(f"graph is not uniquely {k + 1}-colorable")
    classes = _sorted_classes(c)
    for i, cl in enumerate(classes, start=1):
        if len(cl) < i - 1:
            raise ConstructionError(
                f"class C_{i} has {len(cl)} vertices, needs at least {i - 1}")
    lists = _lemma1(g, classes, k)
    L = ListAssignment(tuple(frozenset(lists[v]) for v in range(g.n)))
    target = [0] * g.n
    for i, cl in enumerate(classes, start=1):
        for v in cl:
            target[v] = i
    if unique_list_coloring(g, L) != tuple(target):
        raise ConstructionCheckFailed("class-forcing assignment does not force the class coloring")
    if len(L.palette()) != k + 1:
        raise ConstructionCheckFailed("class-forcing assignment must use exactly k+1 colors")
    return L


def _lemma1(g: Graph, classes: list[list[int]], k: int) -> dict[int, set[int]]:
    """Lists for the vertices of ``classes`` (sizes ascending); class i gets
    color i in the forced coloring."""
    if k == 1:
        return {v: {i} for i, cl in enumerate(classes, start=1) for v in cl}
    inner = _lemma1(g, classes[:k], k - 1)
    for lst in inner.values():
        lst.add(k + 1)
    top = classes[k]
    base = list(range(1, k + 1))
    candidates = [
        # rotation: vertex j drops color (j mod k) + 1
        {v: {k + 1} | (set(base) - {base[j % k]}) for j, v in enumerate(top)},
    ]
    for lists in chain(candidates, _alternatives(top, base, k)):
        trial = dict(inner)
        trial.update(lists)
        sub = sorted(v for cl in classes[:k + 1] for v in cl)
        h = g.induced(sub)
        L = ListAssignment(tuple(frozenset(trial[v]) for v in sub))
        if count_list_colorings(h, L, 2) == 1:
            return trial
    raise ConstructionCheckFailed(f"no list choice for class C_{k + 1} forces a unique coloring")


def _alternatives(top: list[int], base: list[int], k: int):
    """Other ways to give ``top`` (k-1)-subsets of ``base`` plus ``k+1`` with
    common part exactly ``{k+1}``."""
    subsets = [set(s) for s in combinations(base, k - 1)]
    def rec(i, acc, common):
        if i == len(top):
            if not common:
                yield {v: {k + 1} | s for v, s in zip(top, acc)}
            return
        for s in subsets:
            yield from rec(i + 1, acc + [s], common & s)
    yield from rec(0, [], set(base))


def equality_flist(g: Graph, order: Sequence[int] | None = None
                   ) -> tuple[dict[int, int], ListAssignment]:
    """Size function with sum n + e and a matching assignment with a unique
    coloring.

    Vertices are added in ``order``; the i-th gets the fresh color ``i`` as its
    whole list and each already-added neighbour gains ``i``. The default
    order is descending degree.
    """
    if order is None:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must enumerate every vertex exactly once")
    lists: dict[int, set[int]] = {}
    for i, v in enumerate(order):
        for u in g.neighbors(v):
            if u in lists:
                lists[u].add(i)
        lists[v] = {i}
    L = ListAssignment(tuple(frozenset(lists[v]) for v in range(g.n)))
    f = {v: len(lists[v]) for v in range(g.n)}
    if sum(f.values()) != g.n + g.num_edges:
        raise ConstructionCheckFailed("sum of list sizes differs from n + e")
    expected = [0] * g.n
    for i, v in enumerate(order):
        expected[v] = i
    if unique_list_coloring(g, L) != tuple(expected):
        raise ConstructionCheckFailed("equality assignment does not have a unique coloring")
    return f, L


def gstar(g: Graph, L: ListAssignment, t: int, check: bool = True) -> Graph:
    """G together with a clique ``w_1..w_t`` (vertices ``n..n+t-1``), where
    ``v`` is joined to ``w_j`` whenever ``j`` is not in ``L(v)``.

    With ``check`` and a uniquely L-colorable ``g``, the result is verified to
    be uniquely t-colorable.
    """
    if len(L) != g.n:
        raise ValueError("list assignment does not cover the graph")
    for v, lst in enumerate(L.lists):
        bad = [c for c in lst if not 1 <= c <= t]
        if bad:
            raise ConstructionError(f"vertex {v} uses colors {bad} outside 1..{t}")
    n = g.n
    edges = list(g.edges())
    edges += [(n + i, n + j) for i, j in combinations(range(t), 2)]
    edges += [(v, n + j - 1) for v in range(n) for j in range(1, t + 1) if j not in L[v]]
    out = Graph.from_edges(n + t, edges)
    expected_e = g.num_edges + comb(t, 2) + sum(t - len(l) for l in L.lists)
    if out.num_edges != expected_e:
        raise ConstructionCheckFailed("G* edge count formula fails")
    if check and unique_list_coloring(g, L) is not None:
        if is_uniquely_k_colorable(out, t) is None:
            raise ConstructionCheckFailed("G* is not uniquely t-colorable")
    return out


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a twin of ``v``: a new vertex ``n`` joined to exactly N(v)."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    edges = list(g.edges()) + [(u, g.n) for u in g.neighbors(v)]
    return Graph.from_edges(g.n + 1, edges)


def truszczynski_slack(g: Graph, t: int) -> int:
    """e - ((t-1) n - C(t, 2)); nonnegative for uniquely t-colorable graphs."""
    return g.num_edges - ((t - 1) * g.n - comb(t, 2))
