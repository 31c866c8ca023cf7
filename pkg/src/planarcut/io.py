"""Plain-text graph files.

Format: a header line ``n m``, then ``m`` lines ``u v`` (1-based). Lines
starting with ``#`` and blank lines are ignored. An optional embedding
follows as lines ``rot u: v1 v2 ... vd`` giving the clockwise neighbour
order of ``u``; when present it must cover every vertex.
"""

from __future__ import annotations

import os
from pathlib import Path

from .embedding import RotationSystem
from .graph import Graph, GraphError


class GraphFormatError(ValueError):
    """A graph file could not be parsed; ``line`` is 1-based."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> tuple[Graph, RotationSystem | None]:
    """Parse the text format; the rotation is ``None`` if the file has no ``rot`` lines."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    rot: dict[int, list[int]] = {}
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        if line.startswith("rot"):
            if header is None:
                raise GraphFormatError(lineno, "rot line before header")
            head, sep, rest = line[3:].partition(":")
            if not sep:
                raise GraphFormatError(lineno, "rot line needs 'rot u: v1 v2 ...'")
            head = head.strip()
            u = _ints([head], lineno)[0] if head else 0
            if not 1 <= u <= header[0]:
                raise GraphFormatError(lineno, f"rot vertex {head!r} out of range")
            if u in rot:
                raise GraphFormatError(lineno, f"second rot line for vertex {u}")
            rot[u] = _ints(rest.split(), lineno)
            continue
        nums = _ints(line.split(), lineno)
        if len(nums) != 2:
            raise GraphFormatError(lineno, f"expected two integers, got {len(nums)}")
        if header is None:
            if nums[0] < 0 or nums[1] < 0:
                raise GraphFormatError(lineno, "negative count in header")
            header = (nums[0], nums[1])
            continue
        if rot:
            raise GraphFormatError(lineno, "edge line after rot lines")
        u, v = nums
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            raise GraphFormatError(lineno, f"edge {u} {v} out of range 1..{header[0]}")
        edges.append((u, v))
    if header is None:
        raise GraphFormatError(max(last, 1), "missing header 'n m'")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(max(last, 1), f"header says {m} edges, file has {len(edges)}")
    try:
        G = Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(max(last, 1), str(exc)) from None
    if not rot:
        return G, None
    missing = [v for v in range(1, n + 1) if v not in rot]
    if missing:
        raise GraphFormatError(max(last, 1), f"rot block misses vertex {missing[0]}")
    return G, RotationSystem.from_lists(rot, n=n)


def read_graph(path: str | os.PathLike) -> tuple[Graph, RotationSystem | None]:
    return parse_graph(Path(path).read_text())


def format_graph(G: Graph, rot: RotationSystem | None = None, comment: str | None = None) -> str:
    """Serialise ``G`` (and ``rot``) deterministically: edges sorted, ``u < v``."""
    out = []
    if comment:
        out += [f"# {c}" for c in comment.splitlines()]
    out.append(f"{G.n} {G.m}")
    out += [f"{u} {v}" for u, v in sorted(G.edges())]
    if rot is not None:
        out += [f"rot {v}: {' '.join(map(str, rot.order(v)))}" for v in range(1, rot.n + 1)]
    return "\n".join(out) + "\n"


def write_graph(path: str | os.PathLike, G: Graph, rot: RotationSystem | None = None, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(G, rot, comment))
