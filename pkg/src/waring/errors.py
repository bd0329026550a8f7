"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class WaringError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(WaringError, ValueError):
    """Index data (A, k, s) or another argument violates a documented precondition."""


class DegenerateInputError(WaringError, ValueError):
    """The input monomial or form cannot be decomposed (e.g. degree 0)."""


class DegenerateParameterError(WaringError):
    """The chosen value of the parameter t annihilates a scale factor D_a."""

    def __init__(self, q, monomials=()):
        self.q = q
        self.monomials = tuple(monomials)
        msg = f"degenerate parameter t = {q}: D_a(t) vanishes"
        if self.monomials:
            shown = ", ".join(str(m) for m in self.monomials[:10])
            more = "" if len(self.monomials) <= 10 else f" (+{len(self.monomials) - 10} more)"
            msg += f" for exponent vector(s) {shown}{more}"
        super().__init__(msg)


class RegularityError(WaringError):
    """A linear form is not regular with respect to a simplex."""


class UnresolvableRegularityError(RegularityError):
    """No admissible parameter (or coordinate change) makes every form regular."""


class DegenerateSimplexError(WaringError, ValueError):
    """The simplex vertices are not affinely independent."""
