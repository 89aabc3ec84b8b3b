"""Command-line interface.

Exit codes: 0 ok / verdict holds, 1 usage or parse error (or a failing
acceptability verdict), 2 unstable labels, 3 structure error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import dot, store
from .errors import (AceError, InvalidGraph, ParseError,
                     SchemaVersionUnsupported, UnknownVertex,
                     UnstableEvaluation)
from .evaluation import (STABLE, STRUCTURE_ERROR, UNSTABLE, ArtifactTriple,
                         check_acceptability, evaluate_discussion)
from .retrieval import find_discussion

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSTABLE = 2
EXIT_STRUCTURE = 3

STORE_DIR_ENV = "ACE_STORE_DIR"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _resolve(path: str) -> str:
    if os.path.exists(path) or os.path.isabs(path):
        return path
    base = os.environ.get(STORE_DIR_ENV)
    if base:
        candidate = os.path.join(base, path)
        if os.path.exists(candidate):
            return candidate
    return path


def _load(path: str):
    try:
        return store.load_file(_resolve(path))
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    except (ParseError, SchemaVersionUnsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    except InvalidGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        raise SystemExit(EXIT_STRUCTURE)


def _ids(raw: str) -> set[str]:
    return {part for part in (p.strip() for p in raw.split(",")) if part}


def _print_trace(result, out):
    for n, diag in enumerate(result.diagnostics):
        members = ", ".join(diag.members)
        print(f"component {n}: {{{members}}}", file=out)
        if diag.first is not None:
            print(f"  cycles: {diag.cycle_count}  first: {diag.first}",
                  file=out)
        for v in diag.members:
            seq = diag.c_sequences.get(v, [])
            rendered = ", ".join(lbl.value for lbl in seq)
            print(f"  {v}: <{rendered}>", file=out)
        if diag.uniqueness is not None:
            verdict = "unique" if diag.uniqueness.unique else "non-unique"
            print(f"  uniqueness: {verdict}", file=out)


def cmd_validate(args) -> int:
    try:
        graph, _ = _load(args.file)
    except SystemExit as exc:
        # invalid graphs should still print their violations, handled above
        return exc.code
    violations = graph.validate()
    for violation in violations:
        print(violation)
    if violations:
        return EXIT_STRUCTURE
    print("ok")
    return EXIT_OK


def cmd_discussion(args) -> int:
    graph, _ = _load(args.file)
    try:
        discussion = find_discussion(graph, args.root)
    except UnknownVertex:
        print(f"error: unknown vertex {args.root}", file=sys.stderr)
        return EXIT_USAGE
    if args.dot:
        print(dot.to_dot(discussion.graph), end="")
        return EXIT_OK
    print(f"discussion of {args.root}: {len(discussion.graph.vertices)} vertices, "
          f"{len(discussion.graph.lines)} lines")
    for v in sorted(discussion.graph.vertices.values(), key=lambda v: v.seq):
        print(f"  vertex {v.id} [{v.kind.short}] {v.statement}")
    for key in sorted(discussion.graph.lines):
        print(f"  line {key[0]} -> {key[1]}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    graph, rule_meta = _load(args.file)
    try:
        discussion = find_discussion(graph, args.root)
    except UnknownVertex:
        print(f"error: unknown vertex {args.root}", file=sys.stderr)
        return EXIT_USAGE
    result = evaluate_discussion(discussion, rule_meta,
                                 check_unique=args.check_unique)
    print(f"status: {result.status}")
    if result.status == STABLE:
        for v in sorted(result.labels, key=lambda v: graph.vertices[v].seq):
            print(f"  {v} = {result.labels[v].value}")
    elif result.status == UNSTABLE:
        members = ", ".join(result.unstable_component)
        seq = ", ".join(lbl.value for lbl in result.first_sequence)
        print(f"  unstable component: {{{members}}}")
        print(f"  first: {result.first_vertex} <{seq}>")
        print("  the discussion should continue")
    else:
        print(f"  {result.error}")
    if args.trace:
        _print_trace(result, sys.stdout)
    if result.status == UNSTABLE:
        return EXIT_UNSTABLE
    if result.status == STRUCTURE_ERROR:
        return EXIT_STRUCTURE
    return EXIT_OK


def cmd_accept(args) -> int:
    graph, rule_meta = _load(args.file)
    triple = ArtifactTriple(input_ids=_ids(args.inputs),
                            method_ids=_ids(args.method),
                            output_ids=_ids(args.outputs))
    try:
        verdict = check_acceptability(graph, triple, rule_meta)
    except UnknownVertex as exc:
        print(f"error: unknown vertex {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnstableEvaluation as exc:
        print(f"no verdict: {exc}")
        return EXIT_UNSTABLE
    except AceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    for v in sorted(verdict.per_vertex):
        print(f"  {v} = {verdict.per_vertex[v].value}")
    if verdict.holds:
        print("acceptability holds")
        return EXIT_OK
    print(f"acceptability fails: {', '.join(verdict.failures)}")
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ace", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document's invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("discussion", help="print the discussion of a vertex")
    p.add_argument("file")
    p.add_argument("--root", required=True)
    p.add_argument("--dot", action="store_true",
                   help="emit a graphviz description instead of a listing")
    p.set_defaults(func=cmd_discussion)

    p = sub.add_parser("evaluate", help="label the discussion of a vertex")
    p.add_argument("file")
    p.add_argument("--root", required=True)
    p.add_argument("--check-unique", action="store_true")
    p.add_argument("--trace", action="store_true",
                   help="print per-component label histories")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("accept", help="check the acceptability condition")
    p.add_argument("file")
    p.add_argument("--inputs", required=True)
    p.add_argument("--method", required=True)
    p.add_argument("--outputs", required=True)
    p.set_defaults(func=cmd_accept)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
