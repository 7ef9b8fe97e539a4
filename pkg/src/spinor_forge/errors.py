"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SpinorForgeError(Exception):
    """Base class for every error raised by this package."""


class ImaginaryResidue(SpinorForgeError):
    """A quantity that must be real came out with a significant imaginary part."""

    def __init__(self, name: str, residue: float, threshold: float):
        super().__init__(f"{name}: imaginary residue {residue:.3e} exceeds {threshold:.3e}")
        self.name = name
        self.residue = residue
        self.threshold = threshold


class ZeroSpinor(SpinorForgeError):
    pass


class InconsistentCovariants(SpinorForgeError):
    """The zero pattern of the covariants matches no Lounesto class."""

    def __init__(self, message: str, zero_flags: dict[str, bool]):
        super().__init__(f"{message}; zero_flags={zero_flags}")
        self.zero_flags = zero_flags


class NotMappable(SpinorForgeError):
    def __init__(self, message: str, residuals: dict | None = None):
        super().__init__(message)
        self.residuals = residuals or {}


class ConjugacyUndetermined(SpinorForgeError):
    pass


class MissingPartner(SpinorForgeError):
    pass


class ImmirziUndefined(SpinorForgeError):
    pass
