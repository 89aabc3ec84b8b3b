// Client-side pre-validation of a composed post.  Mirrors the server's
// structural rules so obviously-broken posts are blocked before submission;
// the server remains the authority and re-checks everything.

import { PostCreate, PostView } from './api';

export interface ValidationIssue {
  field: 'kind' | 'statement' | 'rule_id' | 'antecedents' | 'consequents' | 'links';
  message: string;
}

const RULE_KINDS = new Set(['inference', 'conflict', 'preference']);

export function validatePost(
  post: PostCreate,
  existingPosts: ReadonlyMap<string, PostView>,
): ValidationIssue[] {
  const issues: ValidationIssue[] = [];

  if (post.kind === 'information') {
    issues.push({
      field: 'kind',
      message:
        'an information post can only start a thread or be bundled with ' +
        'the rule application that uses it',
    });
    return issues;
  }
  if (!RULE_KINDS.has(post.kind)) {
    issues.push({ field: 'kind', message: `unknown post kind '${post.kind}'` });
    return issues;
  }
  if (!post.rule_id || post.rule_id.trim() === '') {
    issues.push({ field: 'rule_id', message: 'pick or name the rule being applied' });
  }

  const antecedents = post.antecedents ?? [];
  const consequents = post.consequents ?? [];
  if (antecedents.length === 0) {
    issues.push({ field: 'antecedents', message: 'select at least one premise' });
  }
  if (consequents.length === 0) {
    issues.push({ field: 'consequents', message: 'select at least one target' });
  }
  const overlap = antecedents.filter((id) => consequents.includes(id));
  if (overlap.length > 0) {
    issues.push({
      field: 'links',
      message: `a post cannot be both premise and target: ${overlap.join(', ')}`,
    });
  }

  const bundled = new Set((post.new_information ?? []).map((info) => info.id));
  for (const id of [...antecedents, ...consequents]) {
    if (!existingPosts.has(id) && !bundled.has(id)) {
      issues.push({ field: 'links', message: `no such post: ${id}` });
    }
  }
  for (const info of post.new_information ?? []) {
    if (info.statement.trim() === '') {
      issues.push({ field: 'statement', message: 'new information needs a statement' });
    }
    if (
      info.id !== undefined &&
      !antecedents.includes(info.id) &&
      !consequents.includes(info.id)
    ) {
      issues.push({
        field: 'links',
        message: `bundled information ${info.id} must be linked by this post`,
      });
    }
  }
  return issues;
}

/** Direct links between two information posts are impossible by
 * construction (every line goes through a rule application); the composer
 * uses this to disable the "link" affordance rather than offer a doomed
 * submission. */
export function canLinkDirectly(a: PostView, b: PostView): boolean {
  return a.kind !== 'information' || b.kind !== 'information';
}
