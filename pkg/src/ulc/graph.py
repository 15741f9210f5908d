"""Simple undirected graphs on bitset adjacency, plus the structural helpers
the coloring engines lean on (core, blocks, line graph, canonical form)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for malformed graph input or an invalid generator request."""


class Graph6Error(GraphError):
    """graph6 parse failure; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a bitmask of the neighbours of ``v``. Instances are
    immutable; every operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic quantities -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def average_degree2(self) -> tuple[int, int]:
        """Average degree as the exact fraction ``(2e, n)``."""
        return 2 * self.num_edges, self.n

    # -- derived graphs ---------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            mask = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    mask |= 1 << index[u]
            adj.append(mask)
        return Graph(len(vertices), tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> list[int] | None:
        """Side (0/1) of every vertex, or ``None`` if an odd cycle exists."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in _bits(self.adj[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return None
        return side

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- graph6 --------------------------------------------------------------

_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 size form for n={g.n} is unsupported (n <= {MAX_VERTICES})")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        out.append(chr(63 + int("".join(map(str, chunk)), 2)))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 record", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range byte {ch!r}", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte size prefix is unsupported", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(s) - 1}",
                          base + min(len(s), nbytes + 1))
    bits = []
    for ch in s[1:]:
        x = ord(ch) - 63
        bits.extend((x >> (5 - b)) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def edges_json_decode(text: str) -> Graph:
    """Read ``{"n": int, "edges": [[u, v], ...]}``."""
    data = json.loads(text)
    try:
        return Graph.from_edges(int(data["n"]), data.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"bad edge-list JSON: {exc}") from exc


# -- generators ----------------------------------------------------------


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(m: int) -> Graph:
    return complete_bipartite(1, m)


def theta(*lengths: int) -> Graph:
    """Poles 0 and 1 joined by internally disjoint paths of the given lengths.

    Interior vertices are numbered from 2 onwards, path by path in input order.
    """
    if len(lengths) < 2 or any(l < 1 for l in lengths):
        raise GraphError("theta needs at least two positive path lengths")
    if sum(1 for l in lengths if l == 1) > 1:
        raise GraphError("theta with two paths of length 1 is a multigraph")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def join(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges())
    edges += [(g.n + u, g.n + v) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges()) + [(g.n + u, g.n + v) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def figure1() -> Graph:
    """K2 joined with P5: poles 0, 1 and path 2-3-4-5-6."""
    return join(complete(2), path(5))


def figure2() -> Graph:
    """Two 4-cycles sharing the cut vertex 0."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0),
                                (0, 4), (4, 5), (5, 6), (6, 0)])


def generate(family: str, *args) -> Graph:
    """Build a named family member, e.g. ``generate("theta", 2, 2, 4)``."""
    table = {
        "path": path, "cycle": cycle, "complete": complete,
        "complete_bipartite": complete_bipartite, "star": star,
        "theta": theta, "join": join, "figure1": figure1, "figure2": figure2,
    }
    try:
        builder = table[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    return builder(*args)


def parse_named(spec: str) -> Graph:
    """Parse names such as ``figure1``, ``C5``, ``K4``, ``P3``, ``K3,3``,
    ``theta2,2,4`` or ``K4-e``."""
    s = spec.strip()
    low = s.lower()
    if low in ("figure1", "figure2"):
        return generate(low)
    try:
        if low.endswith("-e"):
            g = parse_named(s[:-2])
            u, v = g.edges()[0]
            return g.remove_edge(u, v)
        if low.startswith("theta"):
            return theta(*(int(x) for x in low[5:].strip("_()").split(",")))
        if low.startswith("k") and "," in low:
            a, b = low[1:].split(",")
            return complete_bipartite(int(a), int(b))
        if low.startswith("k"):
            return complete(int(low[1:]))
        if low.startswith("c"):
            return cycle(int(low[1:]))
        if low.startswith("p"):
            return path(int(low[1:]))
        if low.startswith("star"):
            return star(int(low[4:]))
    except ValueError as exc:
        raise GraphError(f"cannot parse graph name {spec!r}: {exc}") from exc
    raise GraphError(f"unknown graph name {spec!r}")


# -- structure -----------------------------------------------------------


def core(g: Graph) -> Graph:
    """Strip degree-1 vertices until none remain.

    A tree collapses to a single vertex (the last edge leaves two leaves, one
    of which is deleted). Isolated vertices of the input are kept.
    """
    alive = (1 << g.n) - 1
    deg = g.degrees()
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive >> v & 1 and deg[v] == 1:
                alive &= ~(1 << v)
                for u in _bits(g.adj[v] & alive):
                    deg[u] -= 1
                deg[v] = 0
                changed = True
    return g.induced(list(_bits(alive)))


def k_core(g: Graph, k: int) -> list[int]:
    """Vertices surviving repeated deletion of vertices of degree < k."""
    alive = (1 << g.n) - 1
    deg = g.degrees()
    stack = [v for v in range(g.n) if deg[v] < k]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in _bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == k - 1:
                stack.append(u)
    return list(_bits(alive))


def degeneracy(g: Graph) -> int:
    alive = (1 << g.n) - 1
    deg = g.degrees()
    best = 0
    for _ in range(g.n):
        v = min(_bits(alive), key=lambda x: deg[x])
        best = max(best, deg[v])
        alive &= ~(1 << v)
        for u in _bits(g.adj[v] & alive):
            deg[u] -= 1
    return best


@dataclass(frozen=True)
class BlockDecomposition:
    """``blocks`` are vertex lists (sorted) of the biconnected components and
    bridges; ``block_edges`` the matching edge lists."""

    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: frozenset[int]

    def block_graphs(self, g: Graph) -> list[Graph]:
        return [g.induced(list(b)) for b in self.blocks]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components by Hopcroft-Tarjan with an explicit edge stack.

    Isolated vertices form no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    found: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                found.append(comp)
        if root_children > 1:
            cuts.add(root)
    block_vs = []
    block_es = []
    for comp in found:
        es = tuple(sorted((min(a, b), max(a, b)) for a, b in comp))
        block_es.append(es)
        block_vs.append(tuple(sorted({x for e in es for x in e})))
    order = sorted(range(len(block_vs)), key=lambda i: block_vs[i])
    return BlockDecomposition(
        tuple(block_vs[i] for i in order),
        tuple(block_es[i] for i in order),
        frozenset(cuts),
    )


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and g.is_connected()


def is_complete_bipartite(g: Graph) -> bool:
    side = g.bipartition()
    if side is None or not g.is_connected() or g.n < 2:
        return False
    a = side.count(0)
    return g.num_edges == a * (g.n - a)


def classify_block(b: Graph) -> str:
    """One of ``cycle``, ``complete``, ``complete_bipartite``, ``other``,
    tested in that order."""
    if is_cycle(b):
        return "cycle"
    if is_complete(b):
        return "complete"
    if is_complete_bipartite(b):
        return "complete_bipartite"
    return "other"


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    adj_edges = [
        (i, j)
        for i, j in combinations(range(len(es)), 2)
        if set(es[i]) & set(es[j])
    ]
    return Graph.from_edges(len(es), adj_edges)


def contains_k4(g: Graph) -> bool:
    for a in range(g.n):
        for b in _bits(g.adj[a] >> (a + 1) << (a + 1)):
            common = g.adj[a] & g.adj[b]
            for c in _bits(common >> (b + 1) << (b + 1)):
                if common & g.adj[c] >> (c + 1) << (c + 1):
                    return True
    return False


def contains_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


# -- canonical labelling ---------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (deterministic)."""
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in cell_masks) for v in cell}
            keys = sorted(set(sig.values()))
            for key in keys:
                new_cells.append([v for v in cell if sig[v] == key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def canonical_form(g: Graph) -> tuple[str, list[int]]:
    """Canonical graph6 string and the labelling achieving it.

    Individualisation-refinement over equitable partitions; the leaf with the
    lexicographically smallest relabelled edge code wins. ``perm[v]`` is the
    canonical label of ``v``.
    """
    if g.n == 0:
        return graph6_encode(g), []
    best: list = [None, None]

    def code_of(order: list[int]) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges()))

    def search(cells: list[list[int]]):
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = code_of(order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    search([by_degree[d] for d in sorted(by_degree)])
    order = best[1]
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return graph6_encode(g.relabel(perm)), perm


# -- plane graphs ----------------------------------------------------------


@dataclass(frozen=True)
class PlaneGraph:
    graph: Graph
    faces: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        g = self.graph
        if not g.is_connected():
            raise GraphError("plane graph must be connected")
        n, e, f = g.n, g.num_edges, len(self.faces)
        if n - e + f != 2:
            raise GraphError(f"Euler formula fails: {n} - {e} + {f} != 2")
        seen: dict[tuple[int, int], int] = {}
        for face in self.faces:
            for i, u in enumerate(face):
                v = face[(i + 1) % len(face)]
                if not g.has_edge(u, v):
                    raise GraphError(f"face walk uses non-edge ({u}, {v})")
                key = (min(u, v), max(u, v))
                seen[key] = seen.get(key, 0) + 1
        if sum(len(face) for face in self.faces) != 2 * e:
            raise GraphError("face lengths must sum to 2e")
        bad = [edge for edge in g.edges() if seen.get(edge, 0) != 2]
        if bad:
            raise GraphError(f"edges not bordering exactly two face sides: {bad}")

    def triangular_faces(self) -> int:
        return sum(1 for face in self.faces if len(face) == 3)

    @classmethod
    def from_json(cls, text: str) -> "PlaneGraph":
        data = json.loads(text)
        g = Graph.from_edges(int(data["n"]), data["edges"])
        return cls(g, tuple(tuple(f) for f in data["faces"]))

    def to_json(self) -> str:
        return json.dumps({"n": self.graph.n, "edges": [list(e) for e in self.graph.edges()],
                           "faces": [list(f) for f in self.faces]})
