"""Line-oriented text format for multigraphs with an optional rotation system.

::

    # comments and blank lines are ignored
    graph <n> <m>
    e <tail> <head>          (m lines; edge ids 0..m-1 in order)
    embedding                (optional)
    rot <v> <dart> ...       (one line per vertex, darts +<eid>/-<eid>, counterclockwise)
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import EmbeddingError, InputError
from .multigraph import Multigraph
from .planar import Dart, PlaneGraph


class GraphFileError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@dataclass(frozen=True)
class GraphFile:
    graph: Multigraph
    plane: PlaneGraph | None = None


def _int(tok, lineno, what):
    try:
        value = int(tok)
    except ValueError:
        raise GraphFileError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise GraphFileError(f"{what} must be non-negative", lineno)
    return value


def parse_graph_file(text: str) -> GraphFile:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise GraphFileError("empty graph file")

    lineno, head = lines[0]
    if head[0] != "graph" or len(head) != 3:
        raise GraphFileError("expected 'graph <n> <m>'", lineno)
    n = _int(head[1], lineno, "vertex count")
    m = _int(head[2], lineno, "edge count")

    edges = []
    pos = 1
    for _ in range(m):
        if pos >= len(lines):
            raise GraphFileError(f"expected {m} edge lines, found {len(edges)}", lines[-1][0])
        lineno, tok = lines[pos]
        if tok[0] != "e" or len(tok) != 3:
            raise GraphFileError("expected 'e <tail> <head>'", lineno)
        t, h = _int(tok[1], lineno, "tail"), _int(tok[2], lineno, "head")
        if t >= n or h >= n:
            raise GraphFileError(f"endpoint outside 0..{n - 1}", lineno)
        edges.append((t, h))
        pos += 1
    G = Multigraph(n, edges)

    if pos == len(lines):
        return GraphFile(G)
    lineno, tok = lines[pos]
    if tok != ["embedding"]:
        raise GraphFileError(f"unexpected {tok[0]!r} after the edge list", lineno)
    pos += 1
    rotation: list = [None] * n
    for lineno, tok in lines[pos:]:
        if tok[0] != "rot" or len(tok) < 2:
            raise GraphFileError("expected 'rot <v> <dart>...'", lineno)
        v = _int(tok[1], lineno, "vertex")
        if v >= n:
            raise GraphFileError(f"vertex {v} outside 0..{n - 1}", lineno)
        if rotation[v] is not None:
            raise GraphFileError(f"second rot line for vertex {v}", lineno)
        try:
            rotation[v] = tuple(Dart.parse(d) for d in tok[2:])
        except InputError as exc:
            raise GraphFileError(str(exc), lineno) from None
    missing = [v for v, r in enumerate(rotation) if r is None]
    if missing:
        raise EmbeddingError(f"no rot line for vertices {missing}")
    return GraphFile(G, PlaneGraph(G, tuple(rotation)))


def read_graph_file(path) -> GraphFile:
    return parse_graph_file(Path(path).read_text(encoding="utf-8"))


def render_graph(G: Multigraph, plane: PlaneGraph | None = None) -> str:
    out = [f"graph {G.n()} {G.m()}"]
    out.extend(f"e {t} {h}" for t, h in G.edges)
    if plane is not None:
        out.append("embedding")
        for v, darts in enumerate(plane.rotation):
            out.append(" ".join(["rot", str(v), *map(str, darts)]))
    return "\n".join(out) + "\n"
