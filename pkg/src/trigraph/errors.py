"""Exception types shared across the package."""


class TrigraphError(Exception):
    """Base class for all trigraph errors."""


class SelfLoopError(TrigraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop on vertex {vertex} is not representable in a simple graph")


class VertexOutOfRangeError(TrigraphError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex id {vertex} out of range for n={n}")


class MatrixTooLargeError(TrigraphError):
    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        super().__init__(
            f"bit-packed matrix refused for n={n} (budget {budget} vertices); "
            f"raise the budget or use a matrix-free algorithm such as chiba_nishizeki"
        )


class MatrixMissingError(TrigraphError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} requires the bit-packed adjacency matrix; call build_matrix first")


class EllOutOfRangeError(TrigraphError):
    def __init__(self, ell):
        self.ell = ell
        super().__init__(f"clique size ell={ell} outside supported range [3, 8]")


class UnknownAlgorithmError(TrigraphError):
    def __init__(self, name, known):
        self.name = name
        super().__init__(f"unknown algorithm {name!r}; expected one of {sorted(known)}")


class InvalidProbabilityError(TrigraphError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"probability {p} outside [0, 1]")


class ParamOutOfRangeError(TrigraphError):
    pass
