"""Discussion retrieval.

The discussion of a root vertex is the subgraph of everything with a directed
path to the root, together with every line whose head lies inside that set.
It is the exact unit the evaluator consumes: nothing outside it can influence
the root's label.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import SourceMismatch, UnknownVertex
from .graph import AceGraph


@dataclass
class Discussion:
    root: str
    graph: AceGraph
    source: AceGraph

    @property
    def vertex_ids(self) -> set[str]:
        return set(self.graph.vertices)


def find_discussion(graph: AceGraph, root: str) -> Discussion:
    """Breadth-first walk over incoming lines from the root."""
    if root not in graph:
        raise UnknownVertex(root)
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in graph.in_neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    lines = [key for key in graph.lines if key[1] in seen]
    return Discussion(root=root, graph=graph.subgraph(seen, lines),
                      source=graph)


def is_subdiscussion(inner: Discussion, outer: Discussion) -> bool:
    if inner.source is not outer.source:
        raise SourceMismatch("discussions come from different source graphs")
    return (set(inner.graph.vertices) <= set(outer.graph.vertices)
            and set(inner.graph.lines) <= set(outer.graph.lines))
