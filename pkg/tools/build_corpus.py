"""Regenerate the bundled corpora in src/ulc/data/.

Development-time only: uses networkx for the graph atlas and for planar
embeddings (face lists). The library never tests planarity itself; the
``planar`` flag in the output is this script's provenance.

    python tools/build_corpus.py
"""

from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ulc.corpus import write_corpus  # noqa: E402
from ulc.graph import Graph, contains_triangle, figure1  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "ulc" / "data"


def to_graph(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def faces_of(g: Graph) -> list[list[int]]:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(G)
    assert ok
    if g.n == 1:
        return []
    seen = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        faces.append(list(face))
    return faces


def connected_atlas(max_n: int):
    for i, G in enumerate(nx.graph_atlas_g()):
        n = G.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(G):
            yield i, to_graph(G)


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    with open(DATA / "connected_le7.g6", "w") as out:
        out.write("# all connected graphs on 1..7 vertices (networkx graph atlas order)\n")
        write_corpus(((g, {"name": f"atlas{i}"}) for i, g in connected_atlas(7)), out)

    planar = []
    f1 = figure1()
    planar.append((f1, {"name": "figure1"}))
    for i, g in connected_atlas(7):
        G = nx.Graph(g.edges())
        G.add_nodes_from(range(g.n))
        if not nx.check_planarity(G)[0]:
            continue
        maximal = g.n >= 3 and g.num_edges == 3 * g.n - 6
        if g.n <= 6 or maximal:
            planar.append((g, {"name": f"atlas{i}", "maximal": maximal}))
    extra = {
        "cube_Q3": to_graph(nx.hypercube_graph(3)),
        "grid_2x4": to_graph(nx.grid_2d_graph(2, 4)),
        "grid_3x3": to_graph(nx.grid_2d_graph(3, 3)),
        "C8": to_graph(nx.cycle_graph(8)),
    }
    for name, g in extra.items():
        planar.append((g, {"name": name}))
    with open(DATA / "planar.g6", "w") as out:
        out.write("# planar fixtures: planar flag and faces from a networkx embedding\n")
        rows = []
        for g, meta in planar:
            meta = dict(meta)
            meta["planar"] = True
            meta["triangle_free"] = not contains_triangle(g)
            if g.n >= 2:
                meta["faces"] = faces_of(g)
            rows.append((g, meta))
        write_corpus(rows, out)


if __name__ == "__main__":
    main()
