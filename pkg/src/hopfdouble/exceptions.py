"""Exception hierarchy for the workbench."""


class HopfError(Exception):
    """Base class for all errors raised by hopfdouble."""


class CapacityError(HopfError):
    """A tensor would exceed the configured entry cap."""


class ShapeMismatchError(HopfError, ValueError):
    pass


class NonHermitianError(HopfError, ValueError):
    def __init__(self, residual: float):
        super().__init__(f"matrix is not Hermitian (asymmetry residual {residual:.3e})")
        self.residual = residual


class InvalidGroupError(HopfError, ValueError):
    """Raised when a product table fails a group axiom; ``axiom`` names it."""

    def __init__(self, axiom: str, detail: str = ""):
        msg = f"invalid group table: {axiom} fails"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.axiom = axiom


class NoIntegralError(HopfError):
    pass


class AmbiguousIntegralError(HopfError):
    pass


class NormalizationFailure(HopfError):
    pass


class MissingIntegralError(HopfError):
    pass


class DegeneratePairingError(HopfError):
    pass


class SingularGaloisMapError(HopfError):
    pass


class IndexAlignmentError(HopfError):
    pass


class GramNotPositiveError(HopfError):
    def __init__(self, min_eigenvalue: float):
        super().__init__(f"Gram matrix is not positive definite (min eigenvalue {min_eigenvalue:.3e})")
        self.min_eigenvalue = min_eigenvalue


class SpecFormatError(HopfError, ValueError):
    """Malformed JSON input."""


class PairingVerificationError(HopfError):
    """The pairing handed to the double construction fails its axioms."""

    def __init__(self, failing: list[str]):
        super().__init__("pairing fails verification: " + ", ".join(failing))
        self.failing = failing
