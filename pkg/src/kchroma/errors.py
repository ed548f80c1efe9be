"""Exception types raised by kchroma operations."""


class KchromaError(Exception):
    """Base class for all kchroma errors."""


class SelfLoopError(KchromaError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop on vertex {vertex}")


class DuplicateEdgeError(KchromaError):
    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"duplicate edge ({u}, {v})")


class VertexOutOfRangeError(KchromaError):
    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(f"vertex {vertex} out of range [0, {vertex_count})")


class InvalidSpecError(KchromaError):
    """A generator spec fails its own invariants."""


class MissingHeaderError(KchromaError):
    def __init__(self, message: str = "missing 'p' header line"):
        super().__init__(message)


class CountMismatchError(KchromaError):
    def __init__(self, declared: int, actual: int):
        self.declared = declared
        self.actual = actual
        super().__init__(
            f"header declares {declared} edges but file contains {actual} distinct edges"
        )


class MalformedLineError(KchromaError):
    def __init__(self, line_number: int, content: str):
        self.line_number = line_number
        self.content = content
        super().__init__(f"malformed line {line_number}: {content!r}")


class TooManyLiteralsError(KchromaError):
    def __init__(self, clause_index: int, count: int):
        self.clause_index = clause_index
        self.count = count
        super().__init__(f"clause {clause_index} has {count} literals (at most 3 allowed)")


class VariableOutOfRangeError(KchromaError):
    def __init__(self, literal: int, variable_count: int):
        self.literal = literal
        self.variable_count = variable_count
        super().__init__(f"literal {literal} references a variable outside 1..{variable_count}")


class LengthMismatchError(KchromaError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"coloring has {actual} entries, graph has {expected} vertices")


class NotAPermutationError(KchromaError):
    def __init__(self, message: str = "order is not a permutation of the vertex set"):
        super().__init__(message)


class NotAProperColoringError(KchromaError):
    def __init__(self, message: str = "coloring is not a proper coloring of the graph"):
        super().__init__(message)


class TooLargeError(KchromaError):
    def __init__(self, operation: str, vertex_count: int, limit: int):
        self.operation = operation
        self.vertex_count = vertex_count
        self.limit = limit
        super().__init__(
            f"{operation} is limited to {limit} vertices (graph has {vertex_count}); "
            f"raise max_vertices to override"
        )
