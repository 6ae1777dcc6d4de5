"""Exception hierarchy shared by all graphpoly modules."""


class GraphPolyError(Exception):
    pass


class InputError(GraphPolyError, ValueError):
    """Malformed graph, out-of-range id, or bad argument."""


class ResourceError(GraphPolyError):
    """An exhaustive enumeration would exceed its configured cap."""


class DivisibilityError(GraphPolyError, ArithmeticError):
    def __init__(self, message, quotient=None, remainder=None):
        super().__init__(message)
        self.quotient = quotient
        self.remainder = remainder


class EmbeddingError(GraphPolyError, ValueError):
    """Rotation system is inconsistent or does not describe a sphere embedding."""


class ContractViolation(GraphPolyError, ValueError):
    pass
