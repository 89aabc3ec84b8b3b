"""Discussion-forum backend.

Threads wrap one graph each.  Posts mirror vertices one-to-one and are
append-only; a new information post can only appear as the thread root or
bundled with the rule application that references it, which keeps every post
related to the discussion.  Writes are serialized per thread; reads and
evaluations run on immutable snapshots; consumers follow the thread via a
long-pollable event log.
"""

from __future__ import annotations

import itertools
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field

from . import store
from .errors import (AceError, StructureViolation, UnknownPost, UnknownRule,
                     UnknownVertex)
from .evaluation import STABLE, evaluate_discussion
from .graph import AceGraph, VertexKind
from .retrieval import find_discussion
from .store import RuleInfo

_KINDS = {k.value: k for k in VertexKind}


class NewInformation(BaseModel):
    id: str | None = None
    statement: str


class PostCreate(BaseModel):
    kind: str
    author: str = "anonymous"
    statement: str = ""
    rule_id: str | None = None
    antecedents: list[str] = Field(default_factory=list)
    consequents: list[str] = Field(default_factory=list)
    transitive: bool | None = None
    rule_description: str = ""
    new_information: list[NewInformation] = Field(default_factory=list)
    post_id: str | None = None


class ThreadCreate(BaseModel):
    title: str
    statement: str
    author: str = "anonymous"
    root_id: str | None = None


@dataclass
class PostMeta:
    author: str
    created_at: float


@dataclass
class ThreadState:
    thread_id: str
    title: str
    graph: AceGraph = field(default_factory=AceGraph)
    rule_meta: dict[str, RuleInfo] = field(default_factory=dict)
    post_meta: dict[str, PostMeta] = field(default_factory=dict)
    events: list[dict] = field(default_factory=list)
    queried_roots: set[str] = field(default_factory=set)
    eval_cache: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lock = threading.Lock()
        self.changed = threading.Condition(self.lock)

    @property
    def version(self) -> int:
        return len(self.events)

    def emit(self, event: dict) -> None:
        event["version"] = self.version + 1
        self.events.append(event)
        self.changed.notify_all()


def _post_view(thread: ThreadState, vertex_id: str) -> dict:
    v = thread.graph.vertices[vertex_id]
    meta = thread.post_meta[vertex_id]
    return {
        "post_id": v.id,
        "kind": v.kind.value,
        "statement": v.statement,
        "rule_id": v.rule_id,
        "antecedents": sorted(v.antecedents),
        "consequents": sorted(v.consequents),
        "seq": v.seq,
        "author": meta.author,
        "created_at": meta.created_at,
    }


def _evaluate(thread: ThreadState, root: str, check_unique: bool,
              trace: bool) -> dict:
    """Must be called with the thread lock held (or on a private snapshot)."""
    key = (root, check_unique)
    cached = thread.eval_cache.get(key)
    if cached is not None and cached["snapshot_version"] == thread.version:
        return _strip_trace(cached, trace)
    discussion = find_discussion(thread.graph, root)
    result = evaluate_discussion(discussion, thread.rule_meta,
                                 check_unique=check_unique)
    payload: dict = {
        "root": root,
        "snapshot_version": thread.version,
        "status": result.status,
        "labels": ({v: lbl.value for v, lbl in result.labels.items()}
                   if result.labels is not None else None),
        "components": [
            {
                "members": d.members,
                "cycle_count": d.cycle_count,
                "first": d.first,
                "c_sequences": {v: [l.value for l in seq]
                                for v, seq in d.c_sequences.items()},
                "unique": None if d.uniqueness is None else d.uniqueness.unique,
            }
            for d in result.diagnostics
        ],
        "unstable_component": result.unstable_component,
        "first_vertex": result.first_vertex,
        "first_sequence": ([l.value for l in result.first_sequence]
                           if result.first_sequence else None),
        "error": result.error,
    }
    thread.eval_cache[key] = payload
    return _strip_trace(payload, trace)


def _strip_trace(payload: dict, trace: bool) -> dict:
    if trace:
        return payload
    return {k: v for k, v in payload.items() if k != "components"}


def create_app() -> FastAPI:
    app = FastAPI(title="ace forum")
    threads: dict[str, ThreadState] = {}
    counter = itertools.count(1)
    registry_lock = threading.Lock()

    def get_thread(thread_id: str) -> ThreadState:
        thread = threads.get(thread_id)
        if thread is None:
            raise UnknownPost(f"no such thread: {thread_id}")
        return thread

    @app.exception_handler(AceError)
    async def ace_error_handler(request: Request, exc: AceError):
        status = 404 if isinstance(exc, (UnknownPost, UnknownVertex)) else 422
        return JSONResponse(status_code=status,
                            content={"code": exc.code, "message": str(exc)})

    @app.post("/threads", status_code=201)
    def create_thread(body: ThreadCreate):
        if not body.statement.strip():
            raise StructureViolation("root statement must not be empty")
        with registry_lock:
            thread_id = f"t{next(counter)}"
            thread = ThreadState(thread_id=thread_id, title=body.title)
            threads[thread_id] = thread
        with thread.lock:
            root_id = thread.graph.add_information(body.statement,
                                                   vertex_id=body.root_id)
            thread.post_meta[root_id] = PostMeta(body.author, time.time())
            thread.emit({"type": "post-added", "post_ids": [root_id]})
            return {"thread_id": thread_id, "root_post_id": root_id,
                    "version": thread.version}

    @app.get("/threads/{thread_id}")
    def get_thread_info(thread_id: str):
        thread = get_thread(thread_id)
        with thread.lock:
            return {
                "thread_id": thread.thread_id,
                "title": thread.title,
                "version": thread.version,
                "post_count": len(thread.graph.vertices),
                "rules": [
                    {"rule_id": r.rule_id, "kind": r.kind.value,
                     "transitive": r.transitive,
                     "description": r.description}
                    for r in thread.rule_meta.values()
                ],
            }

    @app.get("/threads/{thread_id}/posts")
    def list_posts(thread_id: str):
        thread = get_thread(thread_id)
        with thread.lock:
            ordered = sorted(thread.graph.vertices,
                             key=lambda v: thread.graph.vertices[v].seq)
            return {"version": thread.version,
                    "posts": [_post_view(thread, v) for v in ordered]}

    @app.post("/threads/{thread_id}/posts", status_code=201)
    def add_post(thread_id: str, body: PostCreate):
        thread = get_thread(thread_id)
        kind = _KINDS.get(body.kind)
        if kind is None:
            raise StructureViolation(f"unknown post kind {body.kind!r}")
        if kind is VertexKind.INFORMATION:
            raise StructureViolation(
                "information posts may only start a thread or accompany a "
                "rule application that references them")
        if body.rule_id is None:
            raise StructureViolation("rule applications need a rule_id")
        with thread.lock:
            # build on a scratch copy so a failed post leaves no trace
            scratch = thread.graph.copy()
            created: list[str] = []
            for info in body.new_information:
                vid = scratch.add_information(info.statement, vertex_id=info.id)
                created.append(vid)
            params = set(body.antecedents) | set(body.consequents)
            unreferenced = [vid for vid in created if vid not in params]
            if unreferenced:
                raise StructureViolation(
                    "bundled information posts must be parameters of the "
                    f"application: {unreferenced}")
            rule = thread.rule_meta.get(body.rule_id)
            if rule is None:
                rule = RuleInfo(rule_id=body.rule_id, kind=kind,
                                transitive=bool(body.transitive),
                                description=body.rule_description)
            else:
                if rule.kind is not kind:
                    raise StructureViolation(
                        f"rule {body.rule_id!r} is a {rule.kind.value} rule")
                if body.transitive is not None and body.transitive != rule.transitive:
                    raise StructureViolation(
                        f"transitivity of rule {body.rule_id!r} was fixed by "
                        "its first application")
            try:
                app_id = scratch.add_rule_application(
                    kind, body.rule_id, body.antecedents, body.consequents,
                    statement=body.statement, vertex_id=body.post_id)
            except UnknownVertex as exc:
                raise UnknownPost(f"no such post: {exc}") from exc
            created.append(app_id)

            now = time.time()
            thread.graph = scratch
            thread.rule_meta[body.rule_id] = rule
            for vid in created:
                thread.post_meta[vid] = PostMeta(body.author, now)
            thread.emit({"type": "post-added", "post_ids": created})
            for root in sorted(thread.queried_roots):
                payload = _evaluate(thread, root, check_unique=False,
                                    trace=True)
                thread.emit({"type": "evaluation-updated", "root": root,
                             "status": payload["status"]})
            return {"version": thread.version,
                    "posts": [_post_view(thread, v) for v in created]}

    @app.get("/threads/{thread_id}/evaluation")
    def get_evaluation(thread_id: str, root: str,
                       check_unique: bool = False, trace: bool = False):
        thread = get_thread(thread_id)
        with thread.lock:
            if root not in thread.graph:
                raise UnknownPost(f"no such post: {root}")
            thread.queried_roots.add(root)
            return _evaluate(thread, root, check_unique, trace)

    @app.get("/threads/{thread_id}/events")
    def get_events(thread_id: str, since: int = 0,
                   timeout: float = Query(0.0, ge=0.0, le=30.0)):
        thread = get_thread(thread_id)
        deadline = time.monotonic() + timeout
        with thread.lock:
            while not thread.events[since:]:
                remaining = deadline - time.monotonic()
                if remaining <= 0:
                    break
                thread.changed.wait(remaining)
            return {"version": thread.version,
                    "events": thread.events[since:]}

    @app.get("/threads/{thread_id}/export")
    def export(thread_id: str):
        thread = get_thread(thread_id)
        with thread.lock:
            data = store.save(thread.graph, thread.rule_meta)
        return Response(content=data, media_type="application/json")

    return app


app = create_app()
