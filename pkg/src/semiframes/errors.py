"""Exception types raised across the package."""


class SemiframeError(Exception):
    """Base class for all package errors."""


class InvalidMatrix(SemiframeError, ValueError):
    """Matrix has non-finite entries or violates a structural precondition."""


class InvalidBasis(SemiframeError, ValueError):
    """Basis matrix does not have orthonormal columns."""


class ShapeError(SemiframeError, ValueError):
    """Operands have incompatible shapes."""


class TruncationOverflow(SemiframeError, ValueError):
    """An index map points outside the truncated space."""


class EmptySpan(SemiframeError, ValueError):
    """The sequence spans only the zero subspace."""


class NotBessel(SemiframeError, ValueError):
    """A sequence required to be Bessel has a diverging upper bound."""


class InconclusiveLadder(SemiframeError, RuntimeError):
    """A ladder trajectory could not be classified; extend the ladder."""


class UnknownProposition(SemiframeError, KeyError):
    """No checker is registered under the requested id."""


class ScenarioError(SemiframeError, ValueError):
    """Scenario text failed to parse or validate.

    ``diagnostics`` holds ``(line, message)`` pairs.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        text = "; ".join(f"line {ln}: {msg}" for ln, msg in self.diagnostics)
        super().__init__(text)
