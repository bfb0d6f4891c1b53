"""Exact counting of permutation inversions and bounded compositions.

Every count is a Python ``int``; polynomials carry ``int`` coefficients.
"""

from mahonia.errors import DomainError, ResourceGuardError
from mahonia.polycore import BiPoly, UniPoly

__all__ = ["BiPoly", "DomainError", "ResourceGuardError", "UniPoly"]
__version__ = "0.1.0"
