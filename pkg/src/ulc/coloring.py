"""Exact list-coloring engines.

Colors are small positive integers; internally every list is a bitmask with
bit ``c`` standing for color ``c``. Vertices are branched in descending degree
order (ties by index) and colors ascending, so the first coloring found, and
every witness derived from it, is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graph import Graph, _bits, canonical_form, degeneracy, k_core

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """The node-expansion limit ran out before the question was decided."""

    def __init__(self, limit: int):
        super().__init__(f"work budget of {limit} node expansions exceeded")
        self.limit = limit


class Budget:
    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.nodes = 0

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.nodes > self.limit:
            raise BudgetExceeded(self.limit)


def _budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else budget)


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists; ``lists[v]`` is the list of vertex ``v``."""

    lists: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        return cls(tuple(frozenset(int(c) for c in l) for l in lists))

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> "ListAssignment":
        s = frozenset(colors)
        return cls((s,) * n)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def sizes(self) -> list[int]:
        return [len(l) for l in self.lists]

    def palette(self) -> frozenset[int]:
        return frozenset().union(*self.lists) if self.lists else frozenset()

    def masks(self) -> list[int]:
        out = []
        for l in self.lists:
            m = 0
            for c in l:
                if c < 0:
                    raise ValueError("colors must be nonnegative integers")
                m |= 1 << c
            out.append(m)
        return out

    def renamed(self, mapping: Mapping[int, int]) -> "ListAssignment":
        return ListAssignment(tuple(frozenset(mapping[c] for c in l) for l in self.lists))

    def to_dict(self) -> dict[str, list[int]]:
        return {str(v): sorted(l) for v, l in enumerate(self.lists)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: Mapping[str, Iterable[int]], n: int | None = None) -> "ListAssignment":
        size = n if n is not None else (max((int(k) for k in data), default=-1) + 1)
        lists: list[frozenset[int]] = [frozenset()] * size
        for key, colors in data.items():
            v = int(key)
            if not 0 <= v < size:
                raise ValueError(f"vertex {v} outside 0..{size - 1}")
            lists[v] = frozenset(int(c) for c in colors)
        missing = [v for v in range(size) if not lists[v]]
        if missing:
            raise ValueError(f"no list (or an empty one) for vertices {missing}")
        return cls(tuple(lists))

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> "ListAssignment":
        return cls.from_dict(json.loads(text), n)


Coloring = tuple  # tuple[int, ...]; color of vertex v at index v


def _check_cover(g: Graph, L: ListAssignment) -> None:
    if len(L) != g.n:
        raise ValueError(f"list assignment covers {len(L)} vertices, graph has {g.n}")


def degree_order(g: Graph, vertices: Iterable[int] | None = None) -> list[int]:
    vs = range(g.n) if vertices is None else vertices
    return sorted(vs, key=lambda v: (-g.degree(v), v))


def _search(adj: Sequence[int], order: Sequence[int], domains: Sequence[int],
            cap: int, budget: Budget) -> tuple[int, list[int] | None]:
    """Count colorings of the vertices in ``order`` (capped at ``cap``).

    Adjacency to vertices outside ``order`` is ignored. Forward checking keeps
    the live domain of every unassigned vertex. Returns the count and the
    first coloring found as a full-length list (``-1`` off ``order``).
    """
    if cap <= 0:
        return 0, None
    inside = 0
    for v in order:
        inside |= 1 << v
    size = max(len(adj), 1)
    dom = list(domains) + [0] * (size - len(domains))
    if any(dom[v] == 0 for v in order):
        return 0, None
    col = [-1] * size
    first: list[list[int] | None] = [None]
    nv = len(order)
    later = [0] * nv
    acc = 0
    for i in range(nv - 1, -1, -1):
        later[i] = acc
        acc |= 1 << order[i]
    count = 0

    def rec(i: int) -> int:
        nonlocal count
        if i == nv:
            count += 1
            if first[0] is None:
                first[0] = col[:]
            return count >= cap
        budget.tick()
        v = order[i]
        nbrs = list(_bits(adj[v] & later[i]))
        for c in _bits(dom[v]):
            bit = 1 << c
            touched = []
            ok = True
            for u in nbrs:
                if dom[u] & bit:
                    dom[u] ^= bit
                    touched.append(u)
                    if not dom[u]:
                        ok = False
                        break
            if ok:
                col[v] = c
                stop = rec(i + 1)
                col[v] = -1
            else:
                stop = False
            for u in touched:
                dom[u] |= bit
            if stop:
                return True
        return False

    rec(0)
    return count, first[0]


def _iter_colorings(adj: Sequence[int], order: Sequence[int], domains: Sequence[int],
                    budget: Budget):
    """Yield every coloring of the vertices in ``order`` (shared list, do not
    keep it)."""
    nv = len(order)
    col = [-1] * len(adj)
    later = [0] * nv
    acc = 0
    for i in range(nv - 1, -1, -1):
        later[i] = acc
        acc |= 1 << order[i]
    dom = list(domains)

    def rec(i: int):
        if i == nv:
            yield col
            return
        budget.tick()
        v = order[i]
        nbrs = list(_bits(adj[v] & later[i]))
        for c in _bits(dom[v]):
            bit = 1 << c
            touched = []
            ok = True
            for u in nbrs:
                if dom[u] & bit:
                    dom[u] ^= bit
                    touched.append(u)
                    if not dom[u]:
                        ok = False
                        break
            if ok:
                col[v] = c
                yield from rec(i + 1)
                col[v] = -1
            for u in touched:
                dom[u] |= bit

    if all(dom[v] for v in order):
        yield from rec(0)


def count_list_colorings(g: Graph, L: ListAssignment, cap: int = 2,
                         budget: Budget | int | None = None) -> int:
    """Number of proper L-colorings of ``g``, capped at ``cap``."""
    _check_cover(g, L)
    count, _ = _search(g.adj, degree_order(g), L.masks(), cap, _budget(budget))
    return count


def find_list_coloring(g: Graph, L: ListAssignment,
                       budget: Budget | int | None = None) -> Coloring | None:
    _check_cover(g, L)
    count, col = _search(g.adj, degree_order(g), L.masks(), 1, _budget(budget))
    return tuple(col[:g.n]) if count else None


def unique_list_coloring(g: Graph, L: ListAssignment,
                         budget: Budget | int | None = None) -> Coloring | None:
    """The L-coloring of ``g`` if there is exactly one, else ``None``."""
    _check_cover(g, L)
    count, col = _search(g.adj, degree_order(g), L.masks(), 2, _budget(budget))
    if count != 1:
        return None
    return tuple(col[:g.n])


def is_proper_list_coloring(g: Graph, L: ListAssignment, c: Sequence[int]) -> bool:
    if len(c) != g.n:
        return False
    if any(c[v] not in L[v] for v in range(g.n)):
        return False
    return all(c[u] != c[v] for u, v in g.edges())


# -- ordinary coloring -----------------------------------------------------


def is_k_colorable(g: Graph, k: int, budget: Budget | int | None = None) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return False
    full = ((1 << k) - 1) << 1
    count, _ = _search(g.adj, degree_order(g), [full] * g.n, 1, _budget(budget))
    return count > 0


def chromatic_number(g: Graph, budget: Budget | int | None = None) -> int:
    b = _budget(budget)
    k = 0
    while not is_k_colorable(g, k, b):
        k += 1
    return k


def color_partitions(g: Graph, max_colors: int | None = None,
                     budget: Budget | None = None):
    """Yield every partition of V(g) into independent sets, as colorings
    with colors ``1..t`` where classes are numbered by their least vertex.

    With ``max_colors`` only partitions into at most that many classes are
    produced. Order: lexicographic in the color tuple.
    """
    n = g.n
    limit = n if max_colors is None else max_colors
    col = [0] * n
    class_mask = [0] * (n + 2)

    def rec(v: int, used: int):
        if v == n:
            yield tuple(col)
            return
        if budget is not None:
            budget.tick()
        for c in range(1, min(used + 1, limit) + 1):
            if class_mask[c] & g.adj[v]:
                continue
            col[v] = c
            class_mask[c] |= 1 << v
            yield from rec(v + 1, max(used, c))
            class_mask[c] &= ~(1 << v)
        col[v] = 0

    yield from rec(0, 0)


def is_uniquely_k_colorable(g: Graph, k: int,
                            budget: Budget | int | None = None) -> Coloring | None:
    """The unique proper k-coloring up to renaming, or ``None``.

    Requires all k colors to be used. The representative numbers classes
    ``1..k`` by least vertex.
    """
    if k < 1:
        raise ValueError("k must be positive")
    found = None
    for c in color_partitions(g, k, _budget(budget)):
        if found is not None:
            return None
        found = c
    if found is None or len(set(found)) != k:
        return None
    return found


def color_classes(c: Sequence[int]) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for v, x in enumerate(c):
        classes.setdefault(x, []).append(v)
    return classes


# -- choosability ----------------------------------------------------------


@dataclass(frozen=True)
class Choosability:
    """``choosable`` plus, when false, a k-list assignment with no coloring."""

    choosable: bool
    witness: ListAssignment | None = None
    method: str = ""
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.choosable


_CHOICE_MEMO: dict[tuple[str, int, bool], tuple[bool, tuple[frozenset[int], ...] | None, str]] = {}


def clear_memo() -> None:
    _CHOICE_MEMO.clear()


def alon_tarsi_certificate(g: Graph, k: int, max_states: int = 400_000) -> bool | None:
    """True if the graph polynomial has a nonzero coefficient on a monomial
    with every exponent at most ``k - 1`` (then ``g`` is k-choosable).

    Returns ``None`` when the state space exceeds ``max_states``; ``False``
    means no certificate of this kind exists.
    """
    n = g.n
    if k < 1:
        return False
    if k ** n > max_states:
        return None
    if g.num_edges > n * (k - 1):
        return False
    weights = [k ** v for v in range(n)]
    poly = {0: 1}
    for u, v in g.edges():
        wu, wv = weights[u], weights[v]
        nxt: dict[int, int] = {}
        for mono, coef in poly.items():
            if (mono // wu) % k < k - 1:
                key = mono + wu
                nxt[key] = nxt.get(key, 0) + coef
            if (mono // wv) % k < k - 1:
                key = mono + wv
                nxt[key] = nxt.get(key, 0) - coef
        poly = {m: c for m, c in nxt.items() if c}
        if not poly:
            return False
    return bool(poly)


def _independent_sets(g: Graph) -> list[int]:
    out = []

    def rec(v: int, chosen: int, banned: int) -> None:
        if v == g.n:
            out.append(chosen)
            return
        rec(v + 1, chosen, banned)
        if not banned >> v & 1:
            rec(v + 1, chosen | 1 << v, banned | g.adj[v])

    rec(0, 0, 0)
    return out


def _kernel_perfect(n: int, out_mask: Sequence[int], indep: Sequence[int]) -> bool:
    good = bytearray(1 << n)
    for kernel in indep:
        absorbed = 0
        for v in range(n):
            if out_mask[v] & kernel and not kernel >> v & 1:
                absorbed |= 1 << v
        # every S with kernel <= S <= kernel | absorbed has kernel as a kernel
        sub = absorbed
        while True:
            good[kernel | sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & absorbed
    return all(good)


def kernel_certificate(g: Graph, k: int, max_orientations: int = 20_000,
                       max_vertices: int = 14) -> bool | None:
    """True if some orientation with every out-degree below ``k`` is
    kernel-perfect (every induced subdigraph has an independent set that
    absorbs the rest); such a graph is k-choosable.

    ``None`` means the search was cut off; ``False`` means no such
    orientation exists.
    """
    n = g.n
    if k < 1 or g.num_edges > n * (k - 1):
        return False
    if n > max_vertices:
        return None
    edges = g.edges()
    indep = _independent_sets(g)
    out_mask = [0] * n
    outdeg = [0] * n
    tried = 0

    def rec(i: int) -> bool | None:
        nonlocal tried
        if i == len(edges):
            tried += 1
            if tried > max_orientations:
                return None
            return _kernel_perfect(n, out_mask, indep)
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if outdeg[a] >= k - 1:
                continue
            outdeg[a] += 1
            out_mask[a] |= 1 << b
            res = rec(i + 1)
            outdeg[a] -= 1
            out_mask[a] &= ~(1 << b)
            if res or res is None:
                return res
        return False

    return rec(0)


def _extend(n: int, keep: Sequence[int], sub_lists: Sequence[frozenset[int]],
            k: int) -> tuple[frozenset[int], ...]:
    """Lift a bad assignment on ``keep`` to all ``n`` vertices; the others get
    a fresh block of k colors, which cannot rescue the bad part."""
    top = max((c for l in sub_lists for c in l), default=0)
    fresh = frozenset(range(top + 1, top + 1 + k))
    lists = [fresh] * n
    for i, v in enumerate(keep):
        lists[v] = sub_lists[i]
    return tuple(lists)


def _closure_order(g: Graph) -> list[int]:
    """Start at a maximum-degree vertex, then repeatedly take the vertex with
    most already-placed neighbours (ties: degree desc, index)."""
    if g.n == 0:
        return []
    order = [min(range(g.n), key=lambda v: (-g.degree(v), v))]
    placed = 1 << order[0]
    while len(order) < g.n:
        v = min((u for u in range(g.n) if not placed >> u & 1),
                key=lambda u: (-(g.adj[u] & placed).bit_count(), -g.degree(u), u))
        order.append(v)
        placed |= 1 << v
    return order


def _tight_search(g: Graph, k: int, budget: Budget) -> tuple[frozenset[int], ...] | None:
    """Search k-assignments in which every color of every list also occurs in
    some neighbour's list, for one with no coloring.

    Colors are introduced in restricted-growth order (a list's new colors are
    the next unused integers), which covers every assignment up to renaming.
    """
    n = g.n
    order = _closure_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = [0] * n
    has_later = [False] * n
    closes_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        nb = g.neighbors(v)
        for u in nb:
            if pos[u] < pos[v]:
                earlier[v] |= 1 << u
            else:
                has_later[v] = True
        last = max([pos[v]] + [pos[u] for u in nb])
        closes_at[last].append(v)
    lists = [0] * n
    adj = g.adj

    def covered(w: int) -> bool:
        union = 0
        for u in _bits(adj[w]):
            union |= lists[u]
        return lists[w] & ~union == 0

    head = order[:-1]
    last = order[-1]

    def close_last(near: int):
        # The last list must avoid being hit by some coloring of the rest:
        # it is bad iff it lies inside the neighbour colors of every coloring.
        common = near
        for col in _iter_colorings(adj, head, lists, budget):
            seen = 0
            for u in _bits(adj[last]):
                seen |= 1 << col[u]
            common &= seen
            if common.bit_count() < k:
                return None
        picked = 0
        for c in list(_bits(common))[:k]:
            picked |= 1 << c
        lists[last] = picked
        out = tuple(frozenset(c + 1 for c in _bits(m)) for m in lists)
        lists[last] = 0
        return out

    def rec(i: int, used: int):
        budget.tick()
        v = order[i]
        near = 0
        for u in _bits(earlier[v]):
            near |= lists[u]
        if i == n - 1:
            return close_last(near)
        if has_later[v]:
            pool = list(range(used))
            fresh_max = k
        else:
            pool = list(_bits(near))
            fresh_max = 0
        for fresh in range(0, min(fresh_max, k) + 1):
            take = k - fresh
            if take > len(pool):
                continue
            new_bits = ((1 << fresh) - 1) << used
            for olds in combinations(pool, take):
                m = new_bits
                for c in olds:
                    m |= 1 << c
                lists[v] = m
                if all(covered(w) for w in closes_at[i]):
                    hit = rec(i + 1, used + fresh)
                    if hit is not None:
                        return hit
        lists[v] = 0
        return None

    return rec(0, 0)


def _decide(g: Graph, k: int, budget: Budget, certificates: bool
            ) -> tuple[tuple[frozenset[int], ...] | None, str]:
    n = g.n
    if n == 0:
        return None, "empty"
    keep = k_core(g, k)
    if not keep:
        return None, "degenerate"
    if len(keep) < n:
        sub, how = _decide(g.induced(keep), k, budget, certificates)
        return (None if sub is None else _extend(n, keep, sub, k)), how
    comps = g.components()
    if len(comps) > 1:
        for comp in comps:
            sub, how = _decide(g.induced(comp), k, budget, certificates)
            if sub is not None:
                return _extend(n, comp, sub, k), how
        return None, "components"
    # connected, minimum degree >= k >= 1
    if not is_k_colorable(g, k, budget):
        return tuple([frozenset(range(1, k + 1))] * n), "chromatic"
    key = (canonical_form(g)[0], k, certificates)
    perm = canonical_form(g)[1]
    hit = _CHOICE_MEMO.get(key)
    if hit is not None:
        ok, canon_lists, how = hit
        if ok:
            return None, how
        return tuple(canon_lists[perm[v]] for v in range(n)), how
    result: tuple[frozenset[int], ...] | None = None
    how = ""
    if certificates and alon_tarsi_certificate(g, k):
        how = "alon-tarsi"
    elif certificates and kernel_certificate(g, k):
        how = "kernel"
    else:
        for v in range(n):
            rest = [u for u in range(n) if u != v]
            sub, sub_how = _decide(g.induced(rest), k, budget, certificates)
            if sub is not None:
                result, how = _extend(n, rest, sub, k), sub_how
                break
        else:
            result = _tight_search(g, k, budget)
            how = "exhaustive"
    canon = None
    if result is not None:
        canon = [frozenset()] * n
        for v in range(n):
            canon[perm[v]] = result[v]
        canon = tuple(canon)
    _CHOICE_MEMO[key] = (result is None, canon, how)
    return result, how


def is_k_choosable(g: Graph, k: int, budget: Budget | int | None = None,
                   certificates: bool = True) -> Choosability:
    """Decide whether every k-list assignment of ``g`` admits a coloring.

    The search reduces to the k-core and to connected pieces, answers
    non-k-colorable graphs with the all-``{1..k}`` assignment, recurses on
    vertex-deleted subgraphs (choosability is inherited by induced
    subgraphs), and only then enumerates assignments on the whole graph.
    At that point a minimal bad assignment has no color private to one
    vertex's closed neighbourhood, so only such assignments are tried.

    ``certificates=True`` additionally accepts an Alon-Tarsi coefficient or a
    kernel-perfect orientation as proof of choosability, skipping the
    enumeration where either applies.
    """
    if k < 1:
        raise ValueError("k must be positive")
    b = _budget(budget)
    start = b.nodes
    lists, how = _decide(g, k, b, certificates)
    if lists is None:
        return Choosability(True, None, how, b.nodes - start)
    witness = ListAssignment(lists)
    assert count_list_colorings(g, witness, 1) == 0, "choosability witness is colorable"
    return Choosability(False, witness, how, b.nodes - start)


def list_chromatic_number(g: Graph, budget: Budget | int | None = None,
                          certificates: bool = True) -> int:
    """Least k such that ``g`` is k-choosable."""
    b = _budget(budget)
    if g.n == 0:
        return 0
    lower = chromatic_number(g, b)
    upper = degeneracy(g) + 1
    k = max(lower, 1)
    while k < upper and not is_k_choosable(g, k, b, certificates):
        k += 1
    assert lower <= k <= g.max_degree + 1, "list chromatic number outside [chi, Delta+1]"
    return k
