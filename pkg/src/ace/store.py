"""JSON persistence for graphs and rule metadata.

Lines are never stored: the parameter/line duality makes them derivable, and
storing both would invite corruption.  Documents are canonical -- vertices
sorted by seq, sets sorted -- so re-saving an untouched graph is
byte-identical.
"""

from __future__ import annotations

import dataclasses
import json
import os
import tempfile
from dataclasses import dataclass

from .errors import (InvalidGraph, ParseError, SchemaVersionUnsupported,
                     StructureViolation, UnknownVertex)
from .graph import AceGraph, VertexKind

FORMAT_VERSION = 1

_KIND_NAMES = {k.value: k for k in VertexKind}


@dataclass(frozen=True)
class RuleInfo:
    rule_id: str
    kind: VertexKind
    transitive: bool = False
    description: str = ""


def save(graph: AceGraph, rule_meta: dict[str, RuleInfo]) -> bytes:
    violations = graph.validate()
    if violations:
        raise InvalidGraph("refusing to save an invalid graph", violations)
    doc = {
        "format_version": FORMAT_VERSION,
        "rules": [
            {
                "rule_id": r.rule_id,
                "kind": r.kind.value,
                "transitive": r.transitive,
                "description": r.description,
            }
            for r in (rule_meta[k] for k in sorted(rule_meta))
        ],
        "vertices": [
            {
                "id": v.id,
                "kind": v.kind.value,
                "statement": v.statement,
                "seq": v.seq,
                **({"rule_id": v.rule_id} if v.rule_id is not None else {}),
                **({"antecedents": sorted(v.antecedents),
                    "consequents": sorted(v.consequents)}
                   if v.is_rule_application else {}),
            }
            for v in sorted(graph.vertices.values(), key=lambda v: v.seq)
        ],
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def load(data: bytes) -> tuple[AceGraph, dict[str, RuleInfo]]:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not a well-formed document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise SchemaVersionUnsupported(f"format_version {version!r} unsupported")

    rule_meta: dict[str, RuleInfo] = {}
    for entry in doc.get("rules", []):
        try:
            kind = _KIND_NAMES[entry["kind"]]
            rule_meta[entry["rule_id"]] = RuleInfo(
                rule_id=entry["rule_id"], kind=kind,
                transitive=bool(entry.get("transitive", False)),
                description=entry.get("description", ""))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed rule entry {entry!r}") from exc

    graph = AceGraph()
    try:
        entries = sorted(doc.get("vertices", []), key=lambda e: e["seq"])
    except (KeyError, TypeError) as exc:
        raise ParseError("vertex entries need a seq field") from exc
    # replay in seq order; the mutation API re-derives lines and re-checks
    # the structural invariants as it goes
    for entry in entries:
        try:
            kind = _KIND_NAMES[entry["kind"]]
            vid = entry["id"]
            statement = entry.get("statement", "")
            if kind is VertexKind.INFORMATION:
                graph.add_information(statement, vertex_id=vid)
            else:
                graph.add_rule_application(
                    kind, entry["rule_id"],
                    entry["antecedents"], entry["consequents"],
                    statement=statement, vertex_id=vid)
        except (UnknownVertex, StructureViolation) as exc:
            raise InvalidGraph(str(exc)) from exc
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed vertex entry {entry!r}") from exc
        stored_seq = entry["seq"]
        actual = graph.vertices[vid].seq
        if stored_seq != actual:
            # keep the document's seq values (they drive recency); replaying
            # in sorted order preserves their relative order
            graph.vertices[vid] = dataclasses.replace(
                graph.vertices[vid], seq=stored_seq)
            graph._next_seq = max(graph._next_seq, stored_seq + 1)
    violations = graph.validate()
    if violations:
        raise InvalidGraph("document describes an invalid graph", violations)
    for v in graph.vertices.values():
        if v.is_rule_application and v.rule_id not in rule_meta:
            raise InvalidGraph(f"vertex {v.id} uses undeclared rule {v.rule_id!r}")
    return graph, rule_meta


def save_file(path: str, graph: AceGraph, rule_meta: dict[str, RuleInfo]) -> None:
    """Atomic replace: write a sibling temp file, then rename."""
    data = save(graph, rule_meta)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ace-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_file(path: str) -> tuple[AceGraph, dict[str, RuleInfo]]:
    with open(path, "rb") as fh:
        return load(fh.read())
