"""Directed labeled graphs of propositions and rule applications.

Vertices are either plain information (a proposition somebody stated) or the
application of an inference, conflict, or preference rule to specific other
vertices.  Rule applications carry explicit antecedent/consequent id sets;
every line in the graph is derived from those sets, so a line's meaning
(premise-of, concludes, attacks, dominates) is always decidable from its
endpoints.  Closure-added domination lines are the one exception and are
flagged synthetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import StructureViolation, UnknownVertex


class VertexKind(enum.Enum):
    INFORMATION = "information"
    INFERENCE = "inference"
    CONFLICT = "conflict"
    PREFERENCE = "preference"

    @property
    def short(self) -> str:
        return {"information": "i", "inference": "I",
                "conflict": "C", "preference": "P"}[self.value]


RULE_KINDS = (VertexKind.INFERENCE, VertexKind.CONFLICT, VertexKind.PREFERENCE)


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: VertexKind
    statement: str
    seq: int
    rule_id: str | None = None
    antecedents: frozenset[str] = frozenset()
    consequents: frozenset[str] = frozenset()

    @property
    def is_rule_application(self) -> bool:
        return self.kind is not VertexKind.INFORMATION


@dataclass(frozen=True)
class Line:
    source: str
    target: str
    synthetic: bool = False

    @property
    def key(self) -> tuple[str, str]:
        return (self.source, self.target)


@dataclass
class Violation:
    code: str
    message: str
    vertex_id: str | None = None
    line: tuple[str, str] | None = None

    def __str__(self):
        return f"{self.code}: {self.message}"


class AceGraph:
    """Mutable vertex/line store with invariant-preserving mutations.

    Mutations validate locally, so a graph built through add_information /
    add_rule_application always passes validate().  Loaded or hand-patched
    graphs should be checked with validate() explicitly.
    """

    def __init__(self):
        self.vertices: dict[str, Vertex] = {}
        self.lines: dict[tuple[str, str], Line] = {}
        self._out: dict[str, list[str]] = {}
        self._in: dict[str, list[str]] = {}
        self._next_seq = 0

    # ------------------------------------------------------------------ views

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, vertex_id: str) -> Vertex:
        try:
            return self.vertices[vertex_id]
        except KeyError:
            raise UnknownVertex(vertex_id) from None

    def out_neighbors(self, vertex_id: str) -> list[str]:
        return self._out.get(vertex_id, [])

    def in_neighbors(self, vertex_id: str) -> list[str]:
        return self._in.get(vertex_id, [])

    def line(self, source: str, target: str) -> Line:
        return self.lines[(source, target)]

    # -------------------------------------------------------------- mutation

    def _fresh_id(self, prefix: str) -> str:
        n = len(self.vertices)
        while f"{prefix}{n}" in self.vertices:
            n += 1
        return f"{prefix}{n}"

    def add_information(self, statement: str, vertex_id: str | None = None) -> str:
        if vertex_id is None:
            vertex_id = self._fresh_id("v")
        if vertex_id in self.vertices:
            raise StructureViolation(f"duplicate vertex id {vertex_id!r}")
        v = Vertex(id=vertex_id, kind=VertexKind.INFORMATION,
                   statement=statement, seq=self._next_seq)
        self._next_seq += 1
        self.vertices[vertex_id] = v
        return vertex_id

    def add_rule_application(self, kind: VertexKind, rule_id: str,
                             antecedents, consequents,
                             statement: str = "",
                             vertex_id: str | None = None) -> str:
        if kind not in RULE_KINDS:
            raise StructureViolation("information vertices take no parameters")
        antecedents = frozenset(antecedents)
        consequents = frozenset(consequents)
        if not antecedents or not consequents:
            raise StructureViolation("parameter sets must be nonempty")
        if antecedents & consequents:
            raise StructureViolation(
                "antecedents and consequents must be disjoint: "
                f"{sorted(antecedents & consequents)}")
        for pid in sorted(antecedents | consequents):
            if pid not in self.vertices:
                raise UnknownVertex(pid)
        if vertex_id is None:
            vertex_id = self._fresh_id(kind.short)
        if vertex_id in self.vertices:
            raise StructureViolation(f"duplicate vertex id {vertex_id!r}")
        if vertex_id in antecedents or vertex_id in consequents:
            raise StructureViolation("a rule application cannot be its own parameter")
        v = Vertex(id=vertex_id, kind=kind, statement=statement,
                   seq=self._next_seq, rule_id=rule_id,
                   antecedents=antecedents, consequents=consequents)
        # the new vertex is fresh, so none of its incident lines can duplicate
        # or anti-parallel an existing one; nothing to pre-check beyond params
        self._next_seq += 1
        self.vertices[vertex_id] = v
        for a in sorted(antecedents, key=lambda x: self.vertices[x].seq):
            self._add_line(Line(a, vertex_id))
        for c in sorted(consequents, key=lambda x: self.vertices[x].seq):
            self._add_line(Line(vertex_id, c))
        return vertex_id

    def _add_line(self, line: Line) -> None:
        self.lines[line.key] = line
        self._out.setdefault(line.source, []).append(line.target)
        self._in.setdefault(line.target, []).append(line.source)

    def add_synthetic_line(self, source: str, target: str) -> bool:
        """Add a closure-derived domination line; returns False if the pair
        is already connected (either flavor, either reading)."""
        if (source, target) in self.lines:
            return False
        if (target, source) in self.lines:
            raise StructureViolation(
                f"synthetic line {source}->{target} would be anti-parallel")
        self._add_line(Line(source, target, synthetic=True))
        return True

    # ---------------------------------------------------------------- copies

    def copy(self) -> "AceGraph":
        g = AceGraph()
        g.vertices = dict(self.vertices)
        g.lines = dict(self.lines)
        g._out = {k: list(v) for k, v in self._out.items()}
        g._in = {k: list(v) for k, v in self._in.items()}
        g._next_seq = self._next_seq
        return g

    def subgraph(self, vertex_ids, line_keys) -> "AceGraph":
        """Restriction to the given vertices and lines (objects are shared)."""
        g = AceGraph()
        vertices = self.vertices
        lines = self.lines
        g.vertices = {vid: vertices[vid] for vid in vertex_ids}
        g.lines = {key: lines[key] for key in line_keys}
        out, inn = g._out, g._in
        for source, target in g.lines:
            out.setdefault(source, []).append(target)
            inn.setdefault(target, []).append(source)
        g._next_seq = self._next_seq
        return g

    # ------------------------------------------------------------ validation

    def membership(self, source: str, target: str) -> tuple[bool, bool]:
        """(source is antecedent of target, target is consequent of source)."""
        sv, tv = self.vertices[source], self.vertices[target]
        return (source in tv.antecedents, target in sv.consequents)

    def validate(self) -> list[Violation]:
        out: list[Violation] = []
        seqs: dict[int, str] = {}
        for v in self.vertices.values():
            if v.seq in seqs:
                out.append(Violation("DUPLICATE_SEQ",
                                     f"vertices {seqs[v.seq]} and {v.id} share seq {v.seq}",
                                     vertex_id=v.id))
            seqs[v.seq] = v.id
            if v.kind is VertexKind.INFORMATION:
                if v.rule_id is not None or v.antecedents or v.consequents:
                    out.append(Violation(
                        "INFORMATION_WITH_PARAMETERS",
                        f"information vertex {v.id} carries rule data",
                        vertex_id=v.id))
                continue
            if v.rule_id is None:
                out.append(Violation("MISSING_RULE_ID",
                                     f"rule application {v.id} has no rule id",
                                     vertex_id=v.id))
            if not v.antecedents or not v.consequents:
                out.append(Violation(
                    "EMPTY_PARAMETER_SET",
                    f"rule application {v.id} must have >=1 incoming and >=1 "
                    "outgoing line", vertex_id=v.id))
            if v.antecedents & v.consequents or v.id in v.antecedents | v.consequents:
                out.append(Violation(
                    "PARAMETER_OVERLAP",
                    f"parameter sets of {v.id} overlap or include {v.id} itself",
                    vertex_id=v.id))
            for a in sorted(v.antecedents):
                if a not in self.vertices:
                    out.append(Violation("UNKNOWN_PARAMETER",
                                         f"{v.id} references missing vertex {a}",
                                         vertex_id=v.id))
                elif (a, v.id) not in self.lines:
                    out.append(Violation("MISSING_LINE",
                                         f"line {a}->{v.id} implied by antecedents is absent",
                                         line=(a, v.id)))
            for c in sorted(v.consequents):
                if c not in self.vertices:
                    out.append(Violation("UNKNOWN_PARAMETER",
                                         f"{v.id} references missing vertex {c}",
                                         vertex_id=v.id))
                elif (v.id, c) not in self.lines:
                    out.append(Violation("MISSING_LINE",
                                         f"line {v.id}->{c} implied by consequents is absent",
                                         line=(v.id, c)))
        for line in self.lines.values():
            s, t = line.source, line.target
            if s not in self.vertices or t not in self.vertices:
                out.append(Violation("DANGLING_LINE",
                                     f"line {s}->{t} has a missing endpoint",
                                     line=line.key))
                continue
            if s == t:
                out.append(Violation("SELF_LOOP", f"line {s}->{t}", line=line.key))
                continue
            if (t, s) in self.lines and s < t:  # report each pair once
                out.append(Violation("ANTI_PARALLEL",
                                     f"lines {s}->{t} and {t}->{s} both present",
                                     line=line.key))
            sv, tv = self.vertices[s], self.vertices[t]
            if (sv.kind is VertexKind.INFORMATION
                    and tv.kind is VertexKind.INFORMATION):
                out.append(Violation("INFORMATION_TO_INFORMATION",
                                     f"line {s}->{t} connects two information vertices",
                                     line=line.key))
                continue
            if line.synthetic:
                if sv.kind is not VertexKind.PREFERENCE:
                    out.append(Violation(
                        "SYNTHETIC_NOT_PREFERENCE",
                        f"synthetic line {s}->{t} must start at a preference "
                        "application", line=line.key))
                continue
            s_param, t_conseq = self.membership(s, t)
            if s_param == t_conseq:
                # both memberships make the line's meaning ambiguous; neither
                # makes it meaningless -- both are disallowed cells
                out.append(Violation(
                    "AMBIGUOUS_LINE" if s_param else "UNDECIDABLE_LINE",
                    f"line {s}->{t} must correspond to exactly one parameter-set "
                    f"membership (antecedent: {s_param}, consequent: {t_conseq})",
                    line=line.key))
        return out
