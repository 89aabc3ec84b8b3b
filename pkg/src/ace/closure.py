"""Transitive closure of transitive preference rules over a discussion.

When a preference rule is declared transitive, chains of its applications
imply dominations the participants never wrote down: if P dominates something
that (through the rule's own parameter subgraph) feeds a later application P',
then P also dominates P''s targets.  The closure materializes those implied
dominations as synthetic lines so the evaluator can treat them like ordinary
preference lines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import UnknownRule
from .graph import AceGraph, VertexKind
from .retrieval import Discussion
from .store import RuleInfo


@dataclass
class TransitiveGroups:
    groups: list[set[str]] = field(default_factory=list)


def group_transitive_applications(discussion: Discussion,
                                  rule_meta: dict[str, RuleInfo]) -> TransitiveGroups:
    by_rule: dict[str, set[str]] = {}
    for v in discussion.graph.vertices.values():
        if v.kind is not VertexKind.PREFERENCE:
            continue
        if v.rule_id not in rule_meta:
            raise UnknownRule(v.rule_id)
        if rule_meta[v.rule_id].transitive:
            by_rule.setdefault(v.rule_id, set()).add(v.id)
    return TransitiveGroups(groups=[by_rule[r] for r in sorted(by_rule)])


def _parameter_subgraph(graph: AceGraph, group: set[str]):
    """Vertices = the group's applications plus their parameters; lines = the
    parameter lines among them.  Everything else (conflicts, inferences,
    other rules) is invisible to the closure."""
    vertices = set(group)
    for pid in group:
        v = graph.vertices[pid]
        vertices |= v.antecedents | v.consequents
    vertices &= set(graph.vertices)
    out: dict[str, list[str]] = {u: [] for u in vertices}
    indeg = {u: 0 for u in vertices}
    for pid in group:
        v = graph.vertices[pid]
        for a in v.antecedents:
            if a in vertices and (a, pid) in graph.lines:
                out[a].append(pid)
                indeg[pid] += 1
        for c in v.consequents:
            if c in vertices and (pid, c) in graph.lines:
                out[pid].append(c)
                indeg[c] += 1
    return vertices, out, indeg


def _weak_components(vertices, out):
    undirected: dict[str, set[str]] = {u: set() for u in vertices}
    for u, targets in out.items():
        for t in targets:
            undirected[u].add(t)
            undirected[t].add(u)
    seen: set[str] = set()
    comps: list[set[str]] = []
    for u in vertices:
        if u in seen:
            continue
        comp = {u}
        stack = [u]
        seen.add(u)
        while stack:
            x = stack.pop()
            for y in undirected[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _reaches(out, comp, source, target) -> bool:
    if source == target:
        return True
    stack = [source]
    seen = {source}
    while stack:
        x = stack.pop()
        for y in out.get(x, []):
            if y not in comp or y in seen:
                continue
            if y == target:
                return True
            seen.add(y)
            stack.append(y)
    return False


def build_transitive_closure(discussion: Discussion,
                             groups: TransitiveGroups) -> AceGraph:
    """Returns a copy of the discussion graph plus synthetic domination lines."""
    graph = discussion.graph.copy()
    for group in groups.groups:
        vertices, out, indeg = _parameter_subgraph(graph, group)
        for comp in _weak_components(vertices, out):
            sources = sorted((u for u in comp if indeg[u] == 0),
                             key=lambda u: graph.vertices[u].seq)
            if not sources:
                # fully cyclic parameter subgraph: deterministic fallback
                sources = [min(comp, key=lambda u: graph.vertices[u].seq)]
            visited_prefs: list[str] = []
            seen = set(sources)
            queue = deque(sources)
            while queue:
                u = queue.popleft()
                if u in group:
                    targets = [c for c in out[u] if c in comp]
                    for earlier in visited_prefs:
                        if _reaches(out, comp, earlier, u):
                            for c in targets:
                                graph.add_synthetic_line(earlier, c)
                    visited_prefs.append(u)
                for y in sorted(out[u], key=lambda x: graph.vertices[x].seq):
                    if y in comp and y not in seen:
                        seen.add(y)
                        queue.append(y)
    return graph
