"""Exception hierarchy shared by the library and the CLI."""


class GraphIdealsError(Exception):
    pass


class GraphError(GraphIdealsError, ValueError):
    """A graph value violates its structural invariants."""


class ParseError(GraphError):
    def __init__(self, message, line=None, token=None):
        self.line = line
        self.token = token
        where = f"line {line}: " if line is not None else ""
        what = f" (at {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{what}")


class UnknownVertexError(GraphError):
    def __init__(self, vertex, line=None):
        self.vertex = vertex
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}unknown vertex {vertex!r}")


class DuplicateIdError(GraphError):
    pass


class OwnershipError(GraphIdealsError, ValueError):
    """A vertex set was passed together with a graph it does not belong to."""


class NotSatHerError(GraphIdealsError, ValueError):
    """A vertex set is not saturated and hereditary where one is required."""

    def __init__(self, members, hereditary, saturated):
        self.members = tuple(members)
        self.hereditary = hereditary
        self.saturated = saturated
        missing = [n for n, ok in (("hereditary", hereditary), ("saturated", saturated)) if not ok]
        shown = "{" + ",".join(self.members) + "}"
        super().__init__(f"set {shown} is not {' and '.join(missing)}")


class CapacityError(GraphIdealsError):
    def __init__(self, what, limit, requested):
        self.limit = limit
        self.requested = requested
        super().__init__(f"{what}: limit {limit}, requested {requested}")


class InvariantViolation(GraphIdealsError, RuntimeError):
    """An internal result broke a property the algorithms guarantee. Always a defect."""
