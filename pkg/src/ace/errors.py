"""Error taxonomy shared by the engine, the store, the CLI and the service."""


class AceError(Exception):
    """Base class for all errors raised by this package."""

    code = "ACE_ERROR"


class UnknownVertex(AceError, KeyError):
    code = "UNKNOWN_VERTEX"

    def __str__(self):  # KeyError quotes its args, which reads badly
        return ", ".join(str(a) for a in self.args)


class StructureViolation(AceError):
    """A mutation would break a structural invariant of the graph."""

    code = "STRUCTURE_VIOLATION"


class StructureError(AceError):
    """Label propagation met a line configuration with no defined meaning."""

    code = "STRUCTURE_ERROR"

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class SourceMismatch(AceError):
    code = "SOURCE_MISMATCH"


class UnknownRule(AceError, KeyError):
    code = "UNKNOWN_RULE"

    def __str__(self):
        return ", ".join(str(a) for a in self.args)


class CycleDetected(AceError):
    """Defensive: a supposed DAG turned out cyclic."""

    code = "CYCLE_DETECTED"


class UnstableEvaluation(AceError):
    """An evaluation needed by a verdict came back unstable.

    Not a bug: it signals that the recorded discussion should continue.
    """

    code = "UNSTABLE"

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class ParseError(AceError):
    code = "PARSE_ERROR"


class SchemaVersionUnsupported(AceError):
    code = "SCHEMA_VERSION_UNSUPPORTED"


class InvalidGraph(AceError):
    """A document decodes but the graph it describes breaks an invariant."""

    code = "INVALID_GRAPH"

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class UnknownPost(AceError):
    code = "UNKNOWN_POST"
