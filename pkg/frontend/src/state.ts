// Single-threaded thread-state model fed by the server event log.
//
// Verdict colors are server-authoritative: the model never guesses a label,
// it only stores EvaluationResult payloads together with the snapshot
// version they were computed against.  Events are applied at most once
// (version dedup), so reconnecting and replaying from an earlier version is
// always safe.

import { Evaluation, ForumApi, PostView, ThreadEvent } from './api';

export interface ThreadModelSnapshot {
  version: number;
  posts: PostView[];
  evaluations: Map<string, Evaluation>;
}

export class ThreadModel {
  private posts = new Map<string, PostView>();
  private evaluations = new Map<string, Evaluation>(); // keyed by root
  private appliedVersion = 0;
  private pendingPostIds: string[] = [];

  constructor(
    private readonly api: ForumApi,
    private readonly threadId: string,
  ) {}

  get version(): number {
    return this.appliedVersion;
  }

  get postList(): PostView[] {
    return [...this.posts.values()].sort((a, b) => a.seq - b.seq);
  }

  post(id: string): PostView | undefined {
    return this.posts.get(id);
  }

  evaluation(root: string): Evaluation | undefined {
    return this.evaluations.get(root);
  }

  /** The verdict for a post under a root's latest evaluation, or undefined
   * when no evaluation covers it yet (rendered gray). */
  verdict(root: string, postId: string): string | undefined {
    const evaluation = this.evaluations.get(root);
    return evaluation?.labels?.[postId];
  }

  snapshot(): ThreadModelSnapshot {
    return {
      version: this.appliedVersion,
      posts: this.postList,
      evaluations: new Map(this.evaluations),
    };
  }

  /** Apply one event; returns false (and changes nothing) when the event
   * was already seen.  Post bodies and evaluations are pulled lazily via
   * sync(). */
  applyEvent(event: ThreadEvent): boolean {
    if (event.version <= this.appliedVersion) {
      return false; // replayed duplicate after a reconnect
    }
    if (event.version !== this.appliedVersion + 1) {
      throw new Error(
        `event gap: have version ${this.appliedVersion}, got ${event.version}`,
      );
    }
    this.appliedVersion = event.version;
    if (event.type === 'post-added') {
      this.pendingPostIds.push(...(event.post_ids ?? []));
    } else if (event.type === 'evaluation-updated' && event.root) {
      // mark stale so sync() refetches; keep the old payload visible until
      // the fresh one arrives (its snapshot_version says what it reflects)
      this.pendingEvaluationRoots.add(event.root);
    }
    return true;
  }

  private pendingEvaluationRoots = new Set<string>();

  /** Fetch whatever the applied events promised: new post bodies and
   * refreshed evaluations. */
  async sync(): Promise<void> {
    if (this.pendingPostIds.length > 0) {
      const { posts } = await this.api.listPosts(this.threadId);
      for (const post of posts) {
        this.posts.set(post.post_id, post);
      }
      this.pendingPostIds = [];
    }
    for (const root of [...this.pendingEvaluationRoots]) {
      const evaluation = await this.api.getEvaluation(this.threadId, root, {
        trace: true,
      });
      this.evaluations.set(root, evaluation);
      this.pendingEvaluationRoots.delete(root);
    }
  }

  /** Explicitly evaluate a root (first query registers it server-side, so
   * later posts emit evaluation-updated events for it). */
  async evaluate(root: string): Promise<Evaluation> {
    const evaluation = await this.api.getEvaluation(this.threadId, root, {
      trace: true,
    });
    this.evaluations.set(root, evaluation);
    return evaluation;
  }

  /** One long-poll step: fetch events past the last applied version, apply
   * them, sync.  Returns the number of fresh events. */
  async pull(timeoutSeconds = 0): Promise<number> {
    const { events } = await this.api.getEvents(
      this.threadId,
      this.appliedVersion,
      timeoutSeconds,
    );
    let fresh = 0;
    for (const event of events) {
      if (this.applyEvent(event)) {
        fresh += 1;
      }
    }
    if (fresh > 0) {
      await this.sync();
    }
    return fresh;
  }
}
