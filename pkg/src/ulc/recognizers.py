"""Structural recognizers for 2-choosable, U2LC and 3-list-critical graphs,
with brute-force criticality checks to validate them against."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Budget, list_chromatic_number, _budget
from .graph import Graph, blocks, classify_block, core, is_cycle, line_graph


@dataclass(frozen=True)
class CriticalityVerdict:
    is_critical: bool
    family: str | None = None
    certificate: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"is_critical": self.is_critical, "family": self.family,
                "certificate": self.certificate}


def recognize_theta(g: Graph) -> list[int] | None:
    """Sorted path lengths if ``g`` is two poles of degree d >= 3 joined by d
    internally disjoint paths, every other vertex of degree 2."""
    poles_lengths = theta_paths(g)
    if poles_lengths is None:
        return None
    return sorted(len(p) - 1 for p in poles_lengths[1])


def theta_paths(g: Graph) -> tuple[tuple[int, int], list[list[int]]] | None:
    """Poles and the pole-to-pole paths (as vertex sequences) of a theta."""
    degs = g.degrees()
    high = [v for v in range(g.n) if degs[v] != 2]
    if len(high) != 2 or not g.is_connected():
        return None
    a, b = high
    if degs[a] != degs[b] or degs[a] < 3:
        return None
    paths = []
    for start in g.neighbors(a):
        walk = [a, start]
        while walk[-1] not in (a, b):
            nxt = [u for u in g.neighbors(walk[-1]) if u != walk[-2]]
            walk.append(nxt[0])
        if walk[-1] != b:
            return None
        paths.append(walk)
    return (a, b), paths


def _cycle_walk(g: Graph, vertices: list[int]) -> list[int]:
    h = g.induced(vertices)
    walk = [0]
    prev = -1
    while len(walk) < h.n:
        nxt = [u for u in h.neighbors(walk[-1]) if u != prev][0]
        prev = walk[-1]
        walk.append(nxt)
    return [vertices[i] for i in walk]


def _is_2_choosable_connected(g: Graph) -> bool:
    c = core(g)
    if c.n == 1:
        return True
    if is_cycle(c):
        return c.n % 2 == 0
    lengths = recognize_theta(c)
    return (lengths is not None and len(lengths) == 3
            and lengths[:2] == [2, 2] and lengths[2] % 2 == 0)


def is_2_choosable_fast(g: Graph) -> bool:
    """Core is a single vertex, an even cycle, or theta(2, 2, 2r); checked
    per component."""
    return all(_is_2_choosable_connected(g.induced(comp)) for comp in g.components())


def _u2lc_connected(g: Graph) -> bool:
    d = blocks(g)
    return any(classify_block(b) == "other" for b in d.block_graphs(g))


def is_u2lc_fast(g: Graph) -> bool:
    """Some block is neither a cycle, a complete graph nor complete
    bipartite. A disconnected graph needs this in every component, since its
    coloring count is the product over components."""
    comps = g.components()
    if not comps:
        return False
    return all(_u2lc_connected(g.induced(comp)) for comp in comps)


def is_3_list_critical_fast(g: Graph) -> CriticalityVerdict:
    if g.n == 0 or not g.is_connected():
        return CriticalityVerdict(False, "none")
    if is_cycle(g):
        if g.n % 2:
            return CriticalityVerdict(True, "odd_cycle", {"cycle": _cycle_walk(g, list(range(g.n)))})
        return CriticalityVerdict(False, "none")
    th = theta_paths(g)
    if th is not None:
        poles, paths = th
        lengths = sorted(len(p) - 1 for p in paths)
        cert = {"poles": list(poles), "paths": paths, "lengths": lengths}
        if (len(lengths) == 3 and len({l % 2 for l in lengths}) == 1
                and lengths.count(2) <= 1):
            return CriticalityVerdict(True, "theta_same_parity", cert)
        if len(lengths) == 4 and lengths[:3] == [2, 2, 2] and lengths[3] % 2 == 0:
            return CriticalityVerdict(True, "theta_2_2_2_2r", cert)
        return CriticalityVerdict(False, "none")
    cert = _dumbbell(g)
    if cert is not None:
        return CriticalityVerdict(True, "two_even_cycles_path", cert)
    return CriticalityVerdict(False, "none")


def _dumbbell(g: Graph) -> dict | None:
    """Two edge-disjoint even cycles joined by a path of length >= 0 and
    nothing else."""
    if g.num_edges != g.n + 1 or g.min_degree < 2:
        return None
    d = blocks(g)
    cycles = []
    bridges = []
    for vs, es in zip(d.blocks, d.block_edges):
        if len(es) == 1:
            bridges.append(list(es[0]))
        elif is_cycle(g.induced(list(vs))):
            cycles.append(list(vs))
        else:
            return None
    if len(cycles) != 2 or any(len(c) % 2 for c in cycles):
        return None
    walks = [_cycle_walk(g, c) for c in cycles]
    return {"cycles": walks, "path_edges": bridges, "path_length": len(bridges)}


def is_list_critical_bruteforce(g: Graph, budget: Budget | int | None = None,
                                certificates: bool = True) -> bool:
    """Every edge deletion lowers the list chromatic number.

    A proper subgraph either misses an edge, and then sits inside some
    ``g - e``, or keeps every edge and drops only isolated vertices; the
    second kind cannot lower the list chromatic number of a graph with an
    edge. So ``g - e`` for each edge plus an isolated-vertex check decide
    criticality.
    """
    b = _budget(budget)
    if g.n == 1:
        return True
    if g.n == 0 or g.min_degree == 0:
        return False
    chi = list_chromatic_number(g, b, certificates)
    return all(list_chromatic_number(g.remove_edge(u, v), b, certificates) < chi
               for u, v in g.edges())


def list_chromatic_index(g: Graph, budget: Budget | int | None = None,
                         certificates: bool = True) -> int:
    return list_chromatic_number(line_graph(g), budget, certificates)


def is_edge_list_critical(g: Graph, budget: Budget | int | None = None,
                          certificates: bool = True) -> bool:
    """Every edge deletion lowers the list chromatic index."""
    b = _budget(budget)
    if g.num_edges == 0 or (g.n > 1 and g.min_degree == 0):
        return False
    top = list_chromatic_index(g, b, certificates)
    return all(list_chromatic_index(g.remove_edge(u, v), b, certificates) < top
               for u, v in g.edges())


def is_star(g: Graph) -> bool:
    if g.n < 2 or not g.is_connected() or g.num_edges != g.n - 1:
        return False
    return g.max_degree == g.n - 1
