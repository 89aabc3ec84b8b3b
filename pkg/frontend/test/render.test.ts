import { describe, expect, it } from 'vitest';

import { Evaluation, ForumApi, PostView } from '../src/api';
import { renderGraphView, renderThreadList, renderTraceDrawer, verdictColor } from '../src/render';
import { ThreadModel } from '../src/state';

class FakeApi {
  posts: PostView[] = [];
  evaluations = new Map<string, Evaluation>();

  async listPosts() {
    return { version: 0, posts: this.posts };
  }

  async getEvaluation(_t: string, root: string) {
    return this.evaluations.get(root)!;
  }

  async getEvents(_t: string, since: number) {
    const events = this.posts.length
      ? [{ type: 'post-added' as const, version: 1, post_ids: this.posts.map((p) => p.post_id) }]
      : [];
    return { version: events.length, events: events.slice(since) };
  }
}

const posts: PostView[] = [
  {
    post_id: 'i1',
    kind: 'information',
    statement: 'claim one',
    rule_id: null,
    antecedents: [],
    consequents: [],
    seq: 0,
    author: 'a',
    created_at: 0,
  },
  {
    post_id: 'C1',
    kind: 'conflict',
    statement: '',
    rule_id: 'objection',
    antecedents: ['i2'],
    consequents: ['i1'],
    seq: 2,
    author: 'b',
    created_at: 2,
  },
];

async function modelWith(evaluation?: Evaluation): Promise<ThreadModel> {
  const api = new FakeApi();
  api.posts = posts;
  if (evaluation) api.evaluations.set(evaluation.root, evaluation);
  const model = new ThreadModel(api as unknown as ForumApi, 't1');
  await model.pull();
  if (evaluation) await model.evaluate(evaluation.root);
  return model;
}

describe('verdictColor', () => {
  it('maps the three labels and the unevaluated case', () => {
    expect(verdictColor('A')).toBe('green');
    expect(verdictColor('AD')).toBe('amber');
    expect(verdictColor('R')).toBe('red');
    expect(verdictColor(undefined)).toBe('gray');
  });
});

describe('renderThreadList', () => {
  it('shows gray before any evaluation', async () => {
    const model = await modelWith();
    const lines = renderThreadList(model, 'i1');
    expect(lines[0]).toContain('<gray>');
    expect(lines[0]).toMatch(/^\[i\] i1/);
  });

  it('colors posts from the server labels', async () => {
    const model = await modelWith({
      root: 'i1',
      snapshot_version: 1,
      status: 'stable',
      labels: { i1: 'R', C1: 'A' },
      unstable_component: null,
      first_vertex: null,
      first_sequence: null,
      error: null,
    });
    const lines = renderThreadList(model, 'i1');
    expect(lines[0]).toContain('<red>');
    expect(lines[1]).toContain('<green>');
    expect(lines[1]).toContain('[objection]');
  });

  it('renders every post exactly once', async () => {
    const model = await modelWith();
    expect(renderThreadList(model, 'i1')).toHaveLength(posts.length);
  });
});

describe('renderGraphView', () => {
  it('draws lines per parameter sets', async () => {
    const model = await modelWith();
    const lines = renderGraphView(model, 'i1');
    expect(lines).toContain('edge i2 -> C1');
    expect(lines).toContain('edge C1 -> i1');
  });

  it('flags an unstable component with a continue prompt', async () => {
    const model = await modelWith({
      root: 'i1',
      snapshot_version: 1,
      status: 'unstable',
      labels: null,
      unstable_component: ['i1', 'C1'],
      first_vertex: 'C1',
      first_sequence: ['A', 'R', 'A', 'R'],
      error: null,
    });
    const lines = renderGraphView(model, 'i1');
    expect(lines.some((l) => l.includes('discussion must continue'))).toBe(true);
    expect(lines.some((l) => l.includes('{i1, C1}'))).toBe(true);
  });
});

describe('renderTraceDrawer', () => {
  it('lists per-vertex label histories', () => {
    const lines = renderTraceDrawer({
      root: 'i1',
      snapshot_version: 1,
      status: 'stable',
      labels: { i1: 'A' },
      components: [
        {
          members: ['i1', 'C1'],
          cycle_count: 1,
          first: 'C1',
          c_sequences: { C1: ['A', 'A'], i1: ['R', 'R'] },
          unique: false,
        },
      ],
      unstable_component: null,
      first_vertex: null,
      first_sequence: null,
      error: null,
    });
    expect(lines[0]).toContain('cycles=1 first=C1');
    expect(lines).toContain('  C1: <A, A>');
    expect(lines).toContain('  unique: no');
  });
});
