"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for all graph construction and query errors."""


class TooManyVertices(GraphError):
    """Vertex count exceeds the 64-vertex bitset cap."""


class IndexOutOfRange(GraphError):
    """A vertex index is negative or >= n."""


class SelfLoop(GraphError):
    """An edge (i, i) was supplied; simple graphs only."""


class Disconnected(GraphError):
    """The operation needs a connected graph (finite metric)."""


class BadParameter(GraphError):
    """A parameterized family constructor got an unsupported parameter."""


class EqualVertices(GraphError):
    """A line needs two distinct vertices."""


class WrongDiameter(GraphError):
    """The closed-form computation only applies at diameter two."""


class TooLarge(GraphError):
    """Input exceeds the supported size for exhaustive computation."""


class FormatError(GraphError):
    """Malformed graph6 or edge-list text."""


class BadStream(FormatError):
    """A graph6 stream contained a line that does not decode."""
