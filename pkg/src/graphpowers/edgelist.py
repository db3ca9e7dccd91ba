"""Plain-text edge-list format.

::

    U 5 5          # or "D n m" for a digraph; always the first data line
    # comments start with '#', may appear anywhere, never counted in m
    0 1
    1 2
    ...

Undirected edge lines must satisfy ``u < v``. Lines end with LF.
"""

from __future__ import annotations

import io
import os
from typing import Iterable, Union

from .graph import Digraph, Graph, GraphInputError, build_digraph, build_graph


class EdgeListError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


def parse_edgelist(text: str) -> Union[Graph, Digraph]:
    kind = None
    n = m = 0
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        tokens = line.split()
        if kind is None:
            if len(tokens) != 3 or tokens[0] not in ("U", "D"):
                raise EdgeListError(f"expected header 'U n m' or 'D n m', got {line!r}", lineno)
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise EdgeListError(f"non-integer counts in header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise EdgeListError("negative counts in header", lineno)
            kind = tokens[0]
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex id in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex id out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop {line!r}", lineno)
        if kind == "U" and u >= v:
            raise EdgeListError(f"undirected edge must have u < v, got {line!r}", lineno)
        pairs.append((u, v))
    if kind is None:
        raise EdgeListError("missing header line")
    if len(pairs) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return build_graph(n, pairs) if kind == "U" else build_digraph(n, pairs)
    except GraphInputError as exc:
        raise EdgeListError(str(exc)) from exc


def format_edgelist(G: Union[Graph, Digraph], comments: Iterable[str] = ()) -> str:
    """Serialize canonically: header, optional ``#`` lines, sorted pairs."""
    buf = io.StringIO()
    if isinstance(G, Digraph):
        buf.write(f"D {G.n} {G.m}\n")
        pairs = G.arcs()
    else:
        buf.write(f"U {G.n} {G.m}\n")
        pairs = G.edges()
    for c in comments:
        buf.write(f"# {c}\n")
    for u, v in pairs:
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def read_edgelist(path: Union[str, os.PathLike]) -> Union[Graph, Digraph]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return parse_edgelist(fh.read())


def write_edgelist(path: Union[str, os.PathLike], G: Union[Graph, Digraph], comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edgelist(G, comments))
