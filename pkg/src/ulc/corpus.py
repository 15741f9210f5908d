"""graph6 corpus streams.

One record per line: a graph6 string, optionally followed by whitespace and a
JSON object of metadata (``planar``, ``faces``, ``name``, ...). Blank lines
and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, PlaneGraph, graph6_decode, graph6_encode


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    meta: dict = field(default_factory=dict)
    line: int = 0

    @property
    def name(self) -> str:
        return self.meta.get("name") or graph6_encode(self.graph)

    @property
    def planar(self) -> bool:
        return bool(self.meta.get("planar", False))

    def plane_graph(self) -> PlaneGraph | None:
        faces = self.meta.get("faces")
        if faces is None:
            return None
        return PlaneGraph(self.graph, tuple(tuple(f) for f in faces))


def parse_corpus(lines: Iterable[str]) -> Iterator[CorpusEntry]:
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        head, _, tail = text.partition(" ")
        try:
            g = graph6_decode(head)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc
        meta = {}
        tail = tail.strip()
        if tail:
            try:
                meta = json.loads(tail)
            except json.JSONDecodeError as exc:
                raise GraphError(f"line {lineno}: bad JSON sidecar: {exc}") from exc
        yield CorpusEntry(g, meta, lineno)


def read_corpus(source: str | Path | TextIO) -> list[CorpusEntry]:
    if hasattr(source, "read"):
        return list(parse_corpus(source))
    with open(source, encoding="ascii") as fh:
        return list(parse_corpus(fh))


def write_corpus(entries: Iterable[tuple[Graph, dict | None]], out: TextIO) -> None:
    for g, meta in entries:
        line = graph6_encode(g)
        if meta:
            line += " " + json.dumps(meta, separators=(",", ":"))
        out.write(line + "\n")


def bundled(name: str) -> list[CorpusEntry]:
    """Load a corpus shipped with the package (``connected_le7``, ``planar``)."""
    path = resources.files("ulc") / "data" / f"{name}.g6"
    with path.open(encoding="ascii") as fh:
        return list(parse_corpus(fh))
