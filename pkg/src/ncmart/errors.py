"""Exception types shared across the package."""


class NcmartError(Exception):
    """Base class for all package errors."""


class NotSelfAdjoint(NcmartError):
    """Operation requires a self-adjoint matrix."""


class EigenFailure(NcmartError):
    """Dense eigensolver or SVD did not converge."""


class BadExponent(NcmartError):
    """Exponent outside the admissible range."""


class DomainError(NcmartError):
    """Scalar function undefined at a point of the spectrum."""


class NotDisjoint(NcmartError):
    """Projection family is not pairwise disjoint."""


class BadParams(NcmartError):
    """Inconsistent construction parameters."""


class NotASubalgebra(NcmartError):
    """Spanning set is not closed under products / adjoints / unit."""


class IndexOutOfRange(NcmartError):
    """Filtration level index outside 0..N."""


class SymbolTooLarge(NcmartError):
    """Transform symbol exceeds the unit ball."""


class SymbolNotCommuting(NcmartError):
    """Element symbol does not commute with the next level."""


class SymbolNotAdapted(NcmartError):
    """Element symbol is not in the previous-level subalgebra."""


class FiltrationMismatch(NcmartError):
    """Martingales live on different filtrations."""


class ReconstructionMismatch(NcmartError):
    """Decomposition pieces do not add back to the target."""


class NotConvex(NcmartError):
    """Candidate Orlicz function fails the convexity grid check."""


class NotQConcave(NcmartError):
    """Candidate Orlicz function fails the concavity-index grid check."""


class UnknownCheck(NcmartError):
    """Check name not present in the registry."""


class GeneratorFailure(NcmartError):
    """A randomized trial failed while generating its inputs."""

    def __init__(self, message, seed=None, trial=None):
        super().__init__(message)
        self.seed = seed
        self.trial = trial
