"""Label computation: deciding which propositions a discussion accepts.

Every vertex ends up with a computed label: A (accepted), AD (accepted but
dominated by some preference), or R (rejected).  Labels flow along lines --
premises feed rule applications, inferences support their conclusions,
conflicts attack, preferences dominate -- and stronger verdicts overrule
weaker ones (R > AD > A).  Acyclic regions are labeled in one topological
pass; strongly connected regions are labeled by a queue of conceptual walkers
that re-traverse the component until the labels settle, or provably never
will.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .closure import TransitiveGroups, build_transitive_closure, \
    group_transitive_applications
from .errors import AceError, StructureError, UnknownVertex, UnstableEvaluation
from .graph import AceGraph, VertexKind
from .retrieval import Discussion, find_discussion
from .scc import contract_scc, count_simple_cycles, enumerate_scc, \
    expand_scc, topological_sort
from .store import RuleInfo


class CLabel(enum.Enum):
    A = "A"    # accepted
    AD = "AD"  # accepted and dominated
    R = "R"    # rejected

    @property
    def strength(self) -> int:
        return {"A": 0, "AD": 1, "R": 2}[self.value]


def overrule(labels) -> CLabel:
    """Collapse a t-set: the strongest verdict wins (R > AD > A)."""
    result = CLabel.A
    for lbl in labels:
        if lbl.strength > result.strength:
            result = lbl
    return result


@dataclass
class LabelingState:
    """Per-vertex label history (c-sequence) and last t-set, for one
    evaluation run."""
    sequences: dict[str, list[CLabel]] = field(default_factory=dict)
    t_sets: dict[str, list[CLabel]] = field(default_factory=dict)

    def last(self, vertex_id: str) -> CLabel:
        return self.sequences[vertex_id][-1]

    def clone(self) -> "LabelingState":
        return LabelingState(
            sequences={k: list(v) for k, v in self.sequences.items()},
            t_sets={k: list(v) for k, v in self.t_sets.items()})


def propagation_rule(source_kind: VertexKind, target_kind: VertexKind,
                     source_is_antecedent: bool, target_is_consequent: bool,
                     label: CLabel) -> CLabel:
    """The full deduction table.  72 configurations are defined; everything
    else is a structure error (the line has no single meaning)."""
    if source_is_antecedent == target_is_consequent:
        raise StructureError(
            "line meaning undecidable: needs exactly one parameter-set "
            f"membership (antecedent={source_is_antecedent}, "
            f"consequent={target_is_consequent})")
    if source_is_antecedent:
        if target_kind is VertexKind.INFORMATION:
            raise StructureError("an information vertex cannot take parameters")
        # source is a premise / attacker-premise / preference-premise of the
        # target application: rejection poisons it, domination does not
        return CLabel.R if label is CLabel.R else CLabel.A
    if source_kind is VertexKind.INFERENCE:
        # inference supports its conclusion
        return CLabel.R if label is CLabel.R else CLabel.A
    if source_kind is VertexKind.CONFLICT:
        # an effective attack rejects; a rejected attack is harmless
        return CLabel.A if label is CLabel.R else CLabel.R
    if source_kind is VertexKind.PREFERENCE:
        # domination marks, but never rejects
        return CLabel.A if label is CLabel.R else CLabel.AD
    raise StructureError("an information vertex has no consequents")


def propagate_label(source: str, target: str, graph: AceGraph,
                    state: LabelingState) -> CLabel:
    line = graph.lines.get((source, target))
    if line is None:
        raise StructureError(f"no line {source}->{target}", line=(source, target))
    label = state.last(source)
    sv = graph.vertices[source]
    tv = graph.vertices[target]
    if line.synthetic:
        # closure-derived domination
        if sv.kind is not VertexKind.PREFERENCE:
            raise StructureError(
                f"synthetic line {source}->{target} from a non-preference vertex",
                line=(source, target))
        return CLabel.A if label is CLabel.R else CLabel.AD
    s_ant, t_con = graph.membership(source, target)
    try:
        return propagation_rule(sv.kind, tv.kind, s_ant, t_con, label)
    except StructureError as exc:
        raise StructureError(f"line {source}->{target}: {exc}",
                             line=(source, target)) from None


def compute_label(vertex_id: str, graph: AceGraph,
                  state: LabelingState) -> CLabel:
    t_set = [propagate_label(u, vertex_id, graph, state)
             for u in sorted(graph.in_neighbors(vertex_id),
                             key=lambda u: graph.vertices[u].seq)]
    state.t_sets[vertex_id] = t_set
    return overrule(t_set)


def select_first_vertex(component, graph: AceGraph) -> str:
    """The last word laughs best: start from the newest vertex."""
    return max(component, key=lambda v: graph.vertices[v].seq)


STABLE = "stable"
UNSTABLE = "unstable"
STRUCTURE_ERROR = "structure-error"


def label_complex_scc(component, first: str, closure: AceGraph,
                      state: LabelingState) -> str:
    """Walker labeling of one multi-vertex strongly connected component.

    Conceptually C(c) walkers leave `first` together.  Each traversal of a
    non-first vertex recomputes and appends its label; `first` itself is only
    relabeled once all walkers have come home (counter q), which starts the
    next round.  Verdict comes from first's label history: two identical
    labels in a row mean stable; four labels without that means the component
    can never settle.
    """
    comp = set(component)
    cycle_count = count_simple_cycles(closure, component)
    for v in component:
        state.sequences[v] = [CLabel.A]  # seed with the weakest label
    seq_of = lambda v: closure.vertices[v].seq
    out_edges = {v: sorted((w for w in closure.out_neighbors(v) if w in comp),
                           key=seq_of)
                 for v in component}
    queue: deque[str] = deque([first])
    q = 0
    rounds = 1  # label count in first's history
    guard = 0
    limit = 10000 * (len(component) + 1) * (cycle_count + 1)
    while queue:
        v = queue.popleft()
        for w in out_edges[v]:
            guard += 1
            if guard > limit:  # pragma: no cover - defensive
                raise AceError("walker traversal failed to terminate")
            if w != first:
                state.sequences[w].append(compute_label(w, closure, state))
                queue.append(w)
                continue
            q += 1
            if q < cycle_count:
                continue  # park the walker until the last one is home
            queue.clear()
            state.sequences[first].append(compute_label(first, closure, state))
            q = 0
            rounds += 1
            queue.append(first)
            seq = state.sequences[first]
            if seq[-1] == seq[-2]:
                return STABLE
            if rounds == 4:
                return UNSTABLE
    raise AceError("walker queue drained without a verdict")  # pragma: no cover


@dataclass
class UniquenessResult:
    unique: bool
    runs: dict[str, dict[str, CLabel]]  # chosen first -> final labels

    def witnesses(self):
        """A divergent pair of runs, if any."""
        items = sorted(self.runs.items())
        for i, (fa, la) in enumerate(items):
            for fb, lb in items[i + 1:]:
                if la != lb:
                    return (fa, la), (fb, lb)
        return None


def check_uniqueness(component, closure: AceGraph,
                     state: LabelingState) -> UniquenessResult:
    """Brute-force: relabel the component starting from every member."""
    if len(component) == 1:
        v = next(iter(component))
        label = state.last(v) if v in state.sequences else CLabel.A
        return UniquenessResult(unique=True, runs={v: {v: label}})
    runs: dict[str, dict[str, CLabel]] = {}
    for member in sorted(component, key=lambda v: closure.vertices[v].seq):
        trial = state.clone()
        verdict = label_complex_scc(component, member, closure, trial)
        if verdict is not STABLE:
            raise UnstableEvaluation(
                f"component is unstable when started from {member}")
        runs[member] = {v: trial.last(v) for v in component}
    values = list(runs.values())
    return UniquenessResult(unique=all(r == values[0] for r in values),
                            runs=runs)


@dataclass
class ComponentDiagnostics:
    members: list[str]
    cycle_count: int
    first: str | None
    c_sequences: dict[str, list[CLabel]]
    uniqueness: UniquenessResult | None = None


@dataclass
class EvaluationResult:
    status: str
    labels: dict[str, CLabel] | None = None
    diagnostics: list[ComponentDiagnostics] = field(default_factory=list)
    unstable_component: list[str] | None = None
    first_vertex: str | None = None
    first_sequence: list[CLabel] | None = None
    error: str | None = None
    error_line: tuple[str, str] | None = None


def evaluate_discussion(discussion: Discussion,
                        rule_meta: dict[str, RuleInfo],
                        check_unique: bool = False) -> EvaluationResult:
    groups = group_transitive_applications(discussion, rule_meta)
    closure = build_transitive_closure(discussion, groups)
    components = enumerate_scc(closure)
    condensation = contract_scc(closure, components)
    order = topological_sort(condensation, closure)
    state = LabelingState()
    diagnostics: list[ComponentDiagnostics] = []
    try:
        for component in expand_scc(order, condensation):
            if len(component) == 1:
                v = component[0]
                if closure.in_neighbors(v):
                    state.sequences[v] = [compute_label(v, closure, state)]
                else:
                    state.sequences[v] = [CLabel.A]
                diagnostics.append(ComponentDiagnostics(
                    members=list(component), cycle_count=0, first=None,
                    c_sequences={v: list(state.sequences[v])}))
                continue
            first = select_first_vertex(component, closure)
            verdict = label_complex_scc(component, first, closure, state)
            diag = ComponentDiagnostics(
                members=list(component),
                cycle_count=count_simple_cycles(closure, component),
                first=first,
                c_sequences={v: list(state.sequences[v]) for v in component})
            diagnostics.append(diag)
            if verdict is not STABLE:
                return EvaluationResult(
                    status=UNSTABLE, diagnostics=diagnostics,
                    unstable_component=list(component), first_vertex=first,
                    first_sequence=list(state.sequences[first]))
            if check_unique:
                try:
                    diag.uniqueness = check_uniqueness(component, closure, state)
                except UnstableEvaluation:
                    # stability can depend on the starting vertex; a rerun
                    # that never settles makes the component unstable too
                    return EvaluationResult(
                        status=UNSTABLE, diagnostics=diagnostics,
                        unstable_component=list(component), first_vertex=first,
                        first_sequence=list(state.sequences[first]))
    except StructureError as exc:
        return EvaluationResult(status=STRUCTURE_ERROR,
                                diagnostics=diagnostics,
                                error=str(exc), error_line=exc.line)
    labels = {v: state.last(v) for v in discussion.graph.vertices}
    return EvaluationResult(status=STABLE, labels=labels,
                            diagnostics=diagnostics)


@dataclass
class ArtifactTriple:
    input_ids: set[str]
    method_ids: set[str]
    output_ids: set[str]

    @property
    def all_ids(self) -> set[str]:
        return set(self.input_ids) | set(self.method_ids) | set(self.output_ids)


@dataclass
class AcceptabilityVerdict:
    holds: bool
    per_vertex: dict[str, CLabel]
    failures: list[str]
    evaluated_roots: list[str]


def check_acceptability(graph: AceGraph, triple: ArtifactTriple,
                        rule_meta: dict[str, RuleInfo]) -> AcceptabilityVerdict:
    """The artifact is acceptable iff every constituent proposition's stable
    label is A or AD.  Vertices already inside another constituent's
    discussion inherit its labels, so only covering discussions are
    evaluated."""
    ids = triple.all_ids
    for vid in sorted(ids):
        if vid not in graph:
            raise UnknownVertex(vid)
    discussions = {vid: find_discussion(graph, vid) for vid in ids}
    order = sorted(ids, key=lambda v: (-len(discussions[v].graph.vertices),
                                       graph.vertices[v].seq))
    per_vertex: dict[str, CLabel] = {}
    evaluated_roots: list[str] = []
    covered: set[str] = set()
    for vid in order:
        if vid in covered:
            continue
        result = evaluate_discussion(discussions[vid], rule_meta)
        if result.status == UNSTABLE:
            raise UnstableEvaluation(
                f"discussion of {vid} has no stable labels; "
                "the discussion should continue", result=result)
        if result.status == STRUCTURE_ERROR:
            raise StructureError(result.error or "structure error",
                                 line=result.error_line)
        evaluated_roots.append(vid)
        members = set(discussions[vid].graph.vertices)
        covered |= members
        for other in ids & members:
            per_vertex.setdefault(other, result.labels[other])
    failures = sorted(v for v, lbl in per_vertex.items() if lbl is CLabel.R)
    return AcceptabilityVerdict(holds=not failures, per_vertex=per_vertex,
                                failures=failures,
                                evaluated_roots=evaluated_roots)
