"""Spacetime Clifford algebra, spinor classification, ELKO spinors and QSL gravity densities."""

from .clifford import gamma, gamma5, gamma_upper, grade_project, product
from .elko import ElkoSpinor, Momentum, elko, elko_dual, elko_family
from .errors import (
    ConjugacyUndetermined,
    ImaginaryResidue,
    ImmirziUndefined,
    InconsistentCovariants,
    MissingPartner,
    NotMappable,
    SpinorForgeError,
    ZeroSpinor,
)
from .lounesto import LounestoClass, classify, class_of_action
from .spinors import BilinearCovariants, bilinears, charge_conjugate, dirac_dual

__version__ = "0.1.0"
