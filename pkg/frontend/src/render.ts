// Text renderers for the two views: a threaded list and a graph view.
// Both read the same ThreadModel; verdict colors come exclusively from the
// stored server evaluation (never recomputed client-side).

import { Evaluation, PostView, Verdict } from './api';
import { ThreadModel } from './state';

export type VerdictColor = 'green' | 'amber' | 'red' | 'gray';

const KIND_BADGES: Record<string, string> = {
  information: 'i',
  inference: 'I',
  conflict: 'C',
  preference: 'P',
};

export function verdictColor(verdict: Verdict | string | undefined): VerdictColor {
  switch (verdict) {
    case 'A':
      return 'green';
    case 'AD':
      return 'amber';
    case 'R':
      return 'red';
    default:
      return 'gray';
  }
}

function badge(post: PostView): string {
  return KIND_BADGES[post.kind] ?? '?';
}

export function renderThreadList(model: ThreadModel, root: string): string[] {
  const evaluation = model.evaluation(root);
  return model.postList.map((post) => {
    const color = verdictColor(evaluation?.labels?.[post.post_id]);
    const rule = post.rule_id ? ` [${post.rule_id}]` : '';
    const links =
      post.antecedents.length + post.consequents.length > 0
        ? ` (${post.antecedents.join(',')} -> ${post.consequents.join(',')})`
        : '';
    return `[${badge(post)}] ${post.post_id} <${color}> ${post.statement}${rule}${links}`;
  });
}

export function renderGraphView(model: ThreadModel, root: string): string[] {
  const evaluation = model.evaluation(root);
  const lines: string[] = [];
  for (const post of model.postList) {
    const color = verdictColor(evaluation?.labels?.[post.post_id]);
    lines.push(`node ${post.post_id} kind=${badge(post)} color=${color}`);
  }
  for (const post of model.postList) {
    for (const premise of post.antecedents) {
      lines.push(`edge ${premise} -> ${post.post_id}`);
    }
    for (const target of post.consequents) {
      lines.push(`edge ${post.post_id} -> ${target}`);
    }
  }
  if (evaluation?.status === 'unstable') {
    const members = (evaluation.unstable_component ?? []).join(', ');
    lines.push(`!! unstable component {${members}} — the discussion must continue`);
  }
  if (evaluation?.status === 'structure-error') {
    lines.push(`!! structure error: ${evaluation.error}`);
  }
  return lines;
}

/** The "why?" drawer: per-vertex label histories of every evaluated
 * component, so a rejected participant can see how the verdict formed. */
export function renderTraceDrawer(evaluation: Evaluation): string[] {
  const lines: string[] = [];
  for (const component of evaluation.components ?? []) {
    const header =
      component.members.length > 1
        ? `component {${component.members.join(', ')}} cycles=${component.cycle_count} first=${component.first}`
        : `component {${component.members.join(', ')}}`;
    lines.push(header);
    for (const [vertex, sequence] of Object.entries(component.c_sequences)) {
      lines.push(`  ${vertex}: <${sequence.join(', ')}>`);
    }
    if (component.unique !== null && component.members.length > 1) {
      lines.push(`  unique: ${component.unique ? 'yes' : 'no'}`);
    }
  }
  return lines;
}
