"""Independent oracles and random graph generation.

Everything here is deliberately written with different algorithms than the
package (matrix-style reachability, path-enumeration cycle counting, a
re-transcribed propagation table) so agreement is meaningful.
"""

import random

from ace import AceGraph, CLabel, VertexKind

RULE_KINDS = [VertexKind.INFERENCE, VertexKind.CONFLICT, VertexKind.PREFERENCE]


def random_valid_graph(rng: random.Random, max_vertices: int = 12) -> AceGraph:
    """Random graphs built only through the mutation API, hence always valid.
    New rule applications pick parameters among existing vertices; since the
    application vertex is fresh, no line conflict can arise."""
    g = AceGraph()
    for k in range(rng.randint(1, 3)):
        g.add_information(f"seed {k}")
    target = rng.randint(len(g), max_vertices)
    while len(g) < target:
        if rng.random() < 0.35:
            g.add_information(f"info {len(g)}")
            continue
        ids = list(g.vertices)
        if len(ids) < 2:
            g.add_information(f"info {len(g)}")
            continue
        kind = rng.choice(RULE_KINDS)
        k = rng.randint(2, min(4, len(ids)))
        params = rng.sample(ids, k)
        split = rng.randint(1, k - 1)
        g.add_rule_application(kind, f"{kind.value}-rule-{rng.randint(0, 2)}",
                               params[:split], params[split:])
    return g


def meta_for(graph: AceGraph, transitive=frozenset()):
    """Rule metadata matching whatever rules a (random) graph uses."""
    from ace import RuleInfo
    meta = {}
    for v in graph.vertices.values():
        if v.is_rule_application and v.rule_id not in meta:
            meta[v.rule_id] = RuleInfo(rule_id=v.rule_id, kind=v.kind,
                                       transitive=v.rule_id in transitive)
    return meta


def reachability_oracle(graph: AceGraph) -> dict:
    """Warshall-style transitive closure over the line set."""
    ids = list(graph.vertices)
    reach = {u: {v: False for v in ids} for u in ids}
    for (s, t) in graph.lines:
        reach[s][t] = True
    for k in ids:
        for u in ids:
            if reach[u][k]:
                row_k = reach[k]
                row_u = reach[u]
                for v in ids:
                    if row_k[v]:
                        row_u[v] = True
    return reach


def scc_oracle(graph: AceGraph):
    """Mutual-reachability partition from the Warshall closure."""
    reach = reachability_oracle(graph)
    ids = sorted(graph.vertices, key=lambda v: graph.vertices[v].seq)
    assigned = {}
    comps = []
    for u in ids:
        if u in assigned:
            continue
        comp = [v for v in ids if v not in assigned
                and (v == u or (reach[u][v] and reach[v][u]))]
        for v in comp:
            assigned[v] = len(comps)
        comps.append(comp)
    return comps


def brute_count_cycles(graph: AceGraph, component) -> int:
    """Count elementary cycles by exhaustive simple-path enumeration: for
    each vertex in rank order, walk every simple path that avoids
    lower-ranked vertices and count edges closing back to the start."""
    comp = set(component)
    rank = {v: i for i, v in enumerate(sorted(comp))}
    adj = {v: [w for w in graph.out_neighbors(v) if w in comp]
           for v in comp}
    count = 0
    for start in sorted(comp):
        stack = [(start, {start})]
        while stack:
            v, on_path = stack.pop()
            for w in adj[v]:
                if w == start:
                    count += 1
                elif rank[w] > rank[start] and w not in on_path:
                    stack.append((w, on_path | {w}))
    return count


def oracle_propagate(graph: AceGraph, source: str, target: str,
                     label: CLabel) -> CLabel:
    """Re-transcription of the deduction table, written case by case."""
    line = graph.lines[(source, target)]
    s = graph.vertices[source]
    t = graph.vertices[target]
    if line.synthetic:
        return {CLabel.A: CLabel.AD, CLabel.AD: CLabel.AD,
                CLabel.R: CLabel.A}[label]
    if source in t.antecedents:
        return {CLabel.A: CLabel.A, CLabel.AD: CLabel.A,
                CLabel.R: CLabel.R}[label]
    assert target in s.consequents
    if s.kind is VertexKind.INFERENCE:
        return {CLabel.A: CLabel.A, CLabel.AD: CLabel.A,
                CLabel.R: CLabel.R}[label]
    if s.kind is VertexKind.CONFLICT:
        return {CLabel.A: CLabel.R, CLabel.AD: CLabel.R,
                CLabel.R: CLabel.A}[label]
    assert s.kind is VertexKind.PREFERENCE
    return {CLabel.A: CLabel.AD, CLabel.AD: CLabel.AD,
            CLabel.R: CLabel.A}[label]


def oracle_collapse(labels) -> CLabel:
    labels = list(labels)
    if CLabel.R in labels:
        return CLabel.R
    if CLabel.AD in labels:
        return CLabel.AD
    return CLabel.A


def fixed_point_labelings(graph: AceGraph):
    """All assignments that COMPUTELABEL maps to themselves (every vertex's
    label equals the collapse of its propagated in-labels).  Exponential;
    call on small graphs only."""
    ids = sorted(graph.vertices, key=lambda v: graph.vertices[v].seq)
    found = []

    def consistent(assign, v):
        incoming = [oracle_propagate(graph, u, v, assign[u])
                    for u in graph.in_neighbors(v)]
        return oracle_collapse(incoming) == assign[v]

    def recurse(i, assign):
        if i == len(ids):
            found.append(dict(assign))
            return
        for lbl in CLabel:
            assign[ids[i]] = lbl
            # prune: check every vertex whose in-neighborhood is now fixed
            ok = True
            for v in ids[:i + 1]:
                if all(u in assign for u in graph.in_neighbors(v)):
                    if not consistent(assign, v):
                        ok = False
                        break
            if ok:
                recurse(i + 1, assign)
        del assign[ids[i]]

    recurse(0, {})
    return found
