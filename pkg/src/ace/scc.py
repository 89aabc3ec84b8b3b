"""Strongly connected components, condensation, and cycle counting.

Hand-rolled (iterative Tarjan, Kahn, Johnson) so the brute-force oracles in
the test suite exercise this code rather than a library's.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import CycleDetected
from .graph import AceGraph


@dataclass
class Condensation:
    components: list[list[str]]          # node n stands for components[n]
    lines: set[tuple[int, int]]
    component_of: dict[str, int]


def enumerate_scc(graph: AceGraph) -> list[list[str]]:
    """Iterative Tarjan; components come out in reverse topological order,
    members sorted by seq."""
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[list[str]] = []
    counter = 0

    order = sorted(graph.vertices, key=lambda v: graph.vertices[v].seq)
    for root in order:
        if root in index:
            continue
        # explicit call stack of (vertex, iterator position)
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            succ = graph.out_neighbors(v)
            while i < len(succ):
                w = succ[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort(key=lambda x: graph.vertices[x].seq)
                components.append(comp)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def contract_scc(graph: AceGraph, components: list[list[str]]) -> Condensation:
    component_of = {v: n for n, comp in enumerate(components) for v in comp}
    lines = {(component_of[s], component_of[t])
             for (s, t) in graph.lines
             if component_of[s] != component_of[t]}
    return Condensation(components=[list(c) for c in components],
                        lines=lines, component_of=component_of)


def topological_sort(condensation: Condensation,
                     graph: AceGraph) -> list[int]:
    """Kahn's algorithm; ties broken by the smallest seq inside a component
    so evaluations are reproducible."""
    n = len(condensation.components)
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for s, t in condensation.lines:
        out[s].append(t)
        indeg[t] += 1

    def min_seq(node: int) -> int:
        return min(graph.vertices[v].seq for v in condensation.components[node])

    ready = [(min_seq(i), i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        _, node = heapq.heappop(ready)
        order.append(node)
        for t in out[node]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(ready, (min_seq(t), t))
    if len(order) != n:
        raise CycleDetected("condensation is not acyclic")
    return order


def expand_scc(order: list[int], condensation: Condensation) -> list[list[str]]:
    return [condensation.components[n] for n in order]


def enumerate_simple_cycles(graph: AceGraph, component: list[str]) -> list[list[str]]:
    """Johnson's elementary-circuit enumeration restricted to one SCC's
    induced subgraph.  Returns each cycle as a vertex list starting at its
    smallest-seq member."""
    comp = set(component)
    seq = {v: graph.vertices[v].seq for v in component}
    adj = {v: sorted((w for w in graph.out_neighbors(v) if w in comp),
                     key=seq.__getitem__)
           for v in component}
    cycles: list[list[str]] = []
    order = sorted(component, key=seq.__getitem__)
    rank = {v: i for i, v in enumerate(order)}

    for start in order:
        blocked: dict[str, bool] = {v: False for v in component}
        b_sets: dict[str, set[str]] = {v: set() for v in component}
        path: list[str] = []

        def unblock(v: str):
            stack = [v]
            while stack:
                u = stack.pop()
                if blocked[u]:
                    blocked[u] = False
                    stack.extend(b_sets[u])
                    b_sets[u].clear()

        def circuit(v: str) -> bool:
            found = False
            path.append(v)
            blocked[v] = True
            for w in adj[v]:
                if rank[w] < rank[start]:
                    continue  # handled when w was the start vertex
                if w == start:
                    cycles.append(list(path))
                    found = True
                elif not blocked[w]:
                    if circuit(w):
                        found = True
            if found:
                unblock(v)
            else:
                for w in adj[v]:
                    if rank[w] >= rank[start]:
                        b_sets[w].add(v)
            path.pop()
            return found

        circuit(start)
    return cycles


def count_simple_cycles(graph: AceGraph, component: list[str]) -> int:
    return len(enumerate_simple_cycles(graph, component))
