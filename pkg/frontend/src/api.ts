// Typed client for the forum service HTTP API.  This is the only way the
// UI talks to the backend; there is no direct store access.

export type PostKind = 'information' | 'inference' | 'conflict' | 'preference';
export type Verdict = 'A' | 'AD' | 'R';

export interface PostView {
  post_id: string;
  kind: PostKind;
  statement: string;
  rule_id: string | null;
  antecedents: string[];
  consequents: string[];
  seq: number;
  author: string;
  created_at: number;
}

export interface NewInformation {
  id?: string;
  statement: string;
}

export interface PostCreate {
  kind: PostKind;
  author?: string;
  statement?: string;
  rule_id?: string;
  antecedents?: string[];
  consequents?: string[];
  transitive?: boolean;
  rule_description?: string;
  new_information?: NewInformation[];
  post_id?: string;
}

export interface ComponentTrace {
  members: string[];
  cycle_count: number;
  first: string | null;
  c_sequences: Record<string, Verdict[]>;
  unique: boolean | null;
}

export interface Evaluation {
  root: string;
  snapshot_version: number;
  status: 'stable' | 'unstable' | 'structure-error';
  labels: Record<string, Verdict> | null;
  components?: ComponentTrace[];
  unstable_component: string[] | null;
  first_vertex: string | null;
  first_sequence: Verdict[] | null;
  error: string | null;
}

export interface ThreadEvent {
  type: 'post-added' | 'evaluation-updated';
  version: number;
  post_ids?: string[];
  root?: string;
  status?: string;
}

export interface ThreadInfo {
  thread_id: string;
  title: string;
  version: number;
  post_count: number;
  rules: { rule_id: string; kind: PostKind; transitive: boolean; description: string }[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = 'HTTP_ERROR';
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body && typeof body === 'object') {
      code = body.code ?? code;
      message = body.message ?? JSON.stringify(body);
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, code, message);
}

export class ForumApi {
  constructor(private readonly baseUrl: string) {}

  async createThread(title: string, statement: string, rootId?: string) {
    return unwrap<{ thread_id: string; root_post_id: string; version: number }>(
      await fetch(`${this.baseUrl}/threads`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify({ title, statement, root_id: rootId }),
      }),
    );
  }

  async getThread(threadId: string) {
    return unwrap<ThreadInfo>(await fetch(`${this.baseUrl}/threads/${threadId}`));
  }

  async listPosts(threadId: string) {
    return unwrap<{ version: number; posts: PostView[] }>(
      await fetch(`${this.baseUrl}/threads/${threadId}/posts`),
    );
  }

  async addPost(threadId: string, post: PostCreate) {
    return unwrap<{ version: number; posts: PostView[] }>(
      await fetch(`${this.baseUrl}/threads/${threadId}/posts`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(post),
      }),
    );
  }

  async getEvaluation(
    threadId: string,
    root: string,
    options: { checkUnique?: boolean; trace?: boolean } = {},
  ) {
    const params = new URLSearchParams({ root });
    if (options.checkUnique) params.set('check_unique', 'true');
    if (options.trace) params.set('trace', 'true');
    return unwrap<Evaluation>(
      await fetch(`${this.baseUrl}/threads/${threadId}/evaluation?${params}`),
    );
  }

  async getEvents(threadId: string, since: number, timeoutSeconds = 0) {
    const params = new URLSearchParams({
      since: String(since),
      timeout: String(timeoutSeconds),
    });
    return unwrap<{ version: number; events: ThreadEvent[] }>(
      await fetch(`${this.baseUrl}/threads/${threadId}/events?${params}`),
    );
  }

  async exportDocument(threadId: string): Promise<string> {
    const response = await fetch(`${this.baseUrl}/threads/${threadId}/export`);
    if (!response.ok) {
      await unwrap(response); // throws with the decoded error
    }
    return response.text();
  }
}
