"""Exception hierarchy.

``LoopfixError`` is the common base. Input/validation problems derive from
``GraphError`` or ``ParameterError``; numerical failures derive from
``NumericalError``. The CLI maps the first two groups to exit code 2 and the
last to exit code 3.
"""


class LoopfixError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# graph construction / validation


class GraphError(LoopfixError):
    """Invalid graph input or failed graph validation."""


class DuplicateEdgeError(GraphError):
    """The same unordered vertex pair appears more than once."""


class SelfEdgeError(GraphError):
    """An edge list contains an i-i entry; self-interaction is set separately."""


class IndexOutOfRangeError(GraphError):
    """Edge endpoint outside 0..n-1."""


class AsymmetricWeightsError(GraphError):
    """Weight matrix is not symmetric."""


class DisconnectedError(GraphError):
    """The positive-weight graph is not connected."""


class TooSmallError(GraphError):
    """Fewer than 3 vertices; the critical ratio is indeterminate."""


class NegativeLandscapeError(GraphError):
    """An explicit self-loop vector contains a negative entry."""


class IsolatedVertexError(GraphError):
    """A vertex has zero strength (no edges and no self-loop)."""


class ParseError(GraphError):
    """Malformed edge-list text."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


# ---------------------------------------------------------------------------
# parameters


class ParameterError(LoopfixError):
    """Invalid parameter for a family formula, generator, or command."""


class InvalidFamilyParamsError(ParameterError):
    """Graph-family parameters violate their constraints."""


class NotDenseRegimeError(ParameterError):
    """Spite-to-cooperation transition requested outside the dense regime N < 2k."""


class UnsupportedNError(ParameterError):
    """Exceptional-case root requested for an unsupported system size."""


class UnsupportedStepError(ParameterError):
    """Return probabilities are only provided for 2 and 3 steps."""


class UndefinedSigmaError(ParameterError):
    """Structure coefficient undefined (threshold is 1 or not finite)."""


class UnknownAxisError(ParameterError):
    """Sweep axis name not recognized."""


class ConnectivityRetriesError(ParameterError):
    """Random generator failed to produce a connected graph within the retry budget."""


# ---------------------------------------------------------------------------
# numerics


class NumericalError(LoopfixError):
    """A numerical procedure failed to meet its tolerance."""


class SolverConvergenceError(NumericalError):
    """Iterative pairwise-coalescence solver did not converge."""


class CrossCheckError(NumericalError):
    """Recurrence-based and definitional coalescence averages disagree."""


class StepLimitError(NumericalError):
    """A simulated trial exceeded the step budget without absorbing."""
