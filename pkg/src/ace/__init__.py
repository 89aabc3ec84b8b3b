"""Engine for recording and evaluating acceptability discussions.

Discussions are directed labeled graphs of propositions and rule
applications (inference, conflict, preference).  The package retrieves the
discussion relevant to a vertex, closes transitive preference chains,
labels every vertex A / AD / R, and decides whether an artifact triple is
acceptable to its discussants.
"""

from .errors import (AceError, CycleDetected, InvalidGraph, ParseError,
                     SchemaVersionUnsupported, SourceMismatch, StructureError,
                     StructureViolation, UnknownPost, UnknownRule,
                     UnknownVertex, UnstableEvaluation)
from .evaluation import (STABLE, STRUCTURE_ERROR, UNSTABLE,
                         AcceptabilityVerdict, ArtifactTriple, CLabel,
                         ComponentDiagnostics, EvaluationResult,
                         LabelingState, UniquenessResult, check_acceptability,
                         check_uniqueness, compute_label, evaluate_discussion,
                         label_complex_scc, overrule, propagate_label,
                         select_first_vertex)
from .closure import (TransitiveGroups, build_transitive_closure,
                      group_transitive_applications)
from .graph import AceGraph, Line, Vertex, VertexKind, Violation
from .retrieval import Discussion, find_discussion, is_subdiscussion
from .scc import (Condensation, contract_scc, count_simple_cycles,
                  enumerate_scc, enumerate_simple_cycles, expand_scc,
                  topological_sort)
from .store import (FORMAT_VERSION, RuleInfo, load, load_file, save,
                    save_file)

__all__ = [name for name in dir() if not name.startswith("_")]
