"""Exception hierarchy shared by all dynamis modules."""


class DynamisError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(DynamisError):
    """Invalid graph mutation."""


class SelfLoopError(GraphError):
    """Edge with identical endpoints."""


class ParallelEdgeError(GraphError):
    """Edge already present."""


class MissingEdgeError(GraphError):
    """Edge not present."""


class UnknownVertexError(GraphError):
    """Vertex id is not live."""


class DuplicateNeighborError(GraphError):
    """Repeated neighbor in a vertex-insertion list."""


class StreamParseError(DynamisError):
    """Malformed update-stream text.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NotIncrementalError(DynamisError):
    """A deletion was fed to an insertion-only algorithm."""


class VertexUpdateUnsupportedError(DynamisError):
    """Vertex event with incident edges fed to the implicit algorithm."""


class NotFreeError(DynamisError):
    """Augmenting search started from a matched vertex."""


class GeneratorParameterError(DynamisError):
    """Generator parameters violate the family's preconditions."""


class IncompatibleStreamError(DynamisError):
    """Stream kind does not match the selected algorithm."""


class VerificationFailedError(DynamisError):
    """Continuous verification failed during a replay.

    Carries the 0-based index of the event that broke the invariants.
    """

    def __init__(self, event_index: int, message: str):
        super().__init__(f"event {event_index}: {message}")
        self.event_index = event_index
