"""Explicit Waring decompositions of monomials and forms, with exact verification."""

from .errors import (
    DegenerateInputError,
    DegenerateParameterError,
    DegenerateSimplexError,
    PreconditionError,
    RegularityError,
    UnresolvableRegularityError,
    WaringError,
)
from .forms import F_count, K_count, K_count_enumerated, decompose_form, dehomogenize, homogenize
from .monomial import coeff_C, coeff_Cbar, decompose, scale_D, specialize
from .simplex import Simplex, integrate_poly, integrate_power, oracle_integrate
from .sparse import SparsePoly
from .tpoly import TPoly, TRat
from .verify import naive_decompose, verify_specialized, verify_symbolic

__all__ = [
    "DegenerateInputError",
    "DegenerateParameterError",
    "DegenerateSimplexError",
    "F_count",
    "K_count",
    "K_count_enumerated",
    "PreconditionError",
    "RegularityError",
    "Simplex",
    "SparsePoly",
    "TPoly",
    "TRat",
    "UnresolvableRegularityError",
    "WaringError",
    "coeff_C",
    "coeff_Cbar",
    "decompose",
    "decompose_form",
    "dehomogenize",
    "homogenize",
    "integrate_poly",
    "integrate_power",
    "naive_decompose",
    "oracle_integrate",
    "scale_D",
    "specialize",
    "verify_specialized",
    "verify_symbolic",
]
