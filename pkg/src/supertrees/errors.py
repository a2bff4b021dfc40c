"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class HypergraphError(ValueError):
    """Base class for invalid input to any operation in this package."""


class DuplicateEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class EdgeTooSmall(HypergraphError):
    pass


class NotASupertree(HypergraphError):
    pass


class NotATree(HypergraphError):
    pass


class Disconnected(HypergraphError):
    """Raised where a connected hypergraph is required; callers must decompose."""


class NonPositiveVector(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class HGTFormatError(HypergraphError):
    pass


class InvalidAttachment(HypergraphError):
    pass


class TooManyBranches(HypergraphError):
    pass


class BranchTooLong(HypergraphError):
    pass


class EdgeNotFound(HypergraphError):
    pass


class ResultingDuplicateEdge(HypergraphError):
    pass


class BadShiftShape(HypergraphError):
    pass


class BudgetExceeded(HypergraphError):
    pass


class ConfigurationNotFound(HypergraphError):
    pass


class PreconditionError(HypergraphError):
    """A verification was requested outside the parameter range it covers."""


class NoConvergence(RuntimeError):
    def __init__(self, max_iter: int, residual: float):
        super().__init__(f"no convergence after {max_iter} iterations (residual {residual:.3e})")
        self.max_iter = max_iter
        self.residual = residual
