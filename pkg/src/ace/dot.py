"""Graphviz export: shape by vertex kind, fill color by computed label."""

from __future__ import annotations

from .evaluation import CLabel
from .graph import AceGraph, VertexKind

_SHAPES = {
    VertexKind.INFORMATION: "ellipse",
    VertexKind.INFERENCE: "box",
    VertexKind.CONFLICT: "diamond",
    VertexKind.PREFERENCE: "hexagon",
}

_COLORS = {
    CLabel.A: "palegreen",
    CLabel.AD: "gold",
    CLabel.R: "lightcoral",
}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: AceGraph, labels: dict[str, CLabel] | None = None) -> str:
    labels = labels or {}
    lines = ["digraph discussion {", "  rankdir=LR;"]
    for v in sorted(graph.vertices.values(), key=lambda v: v.seq):
        attrs = [f"shape={_SHAPES[v.kind]}"]
        label = v.id if not v.statement else f"{v.id}\\n{v.statement[:40]}"
        attrs.append(f"label={_quote(label)}")
        if v.id in labels:
            attrs.append("style=filled")
            attrs.append(f"fillcolor={_COLORS[labels[v.id]]}")
        lines.append(f"  {_quote(v.id)} [{', '.join(attrs)}];")
    for line in sorted(graph.lines.values(), key=lambda l: l.key):
        style = " [style=dashed]" if line.synthetic else ""
        lines.append(f"  {_quote(line.source)} -> {_quote(line.target)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
