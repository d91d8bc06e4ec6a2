"""Exception types shared across the package."""


class PcgError(ValueError):
    """Base class for every validation or contract error raised here."""


class DuplicateLabel(PcgError):
    """A vertex or node label occurs more than once."""


class UnknownEndpoint(PcgError):
    """An edge references a label that is not a declared vertex/node."""


class UnknownLabel(PcgError):
    """A lookup used a label the structure does not contain."""


class SelfLoop(PcgError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(PcgError):
    """The same unordered vertex pair appears twice in an edge list."""


class TooSmall(PcgError):
    """A generator was asked for fewer vertices than the family allows."""


class OutOfRange(PcgError):
    """A coordinate or dimension lies outside its declared range."""


class SizeLimitExceeded(PcgError):
    """Input exceeds the practical size cap of an exhaustive search."""


class NotATree(PcgError):
    """Edge set is cyclic or disconnected, so it does not form a tree."""


class NegativeWeight(PcgError):
    """Tree edge weights must be non-negative."""


class InvalidInterval(PcgError):
    """Interval bounds must satisfy 0 <= d_min <= d_max."""


class LabelMismatch(PcgError):
    """Two structures that must share a label set do not."""


class InvalidInput(PcgError):
    """Malformed external input (JSON schema, rational literal, CLI args)."""
