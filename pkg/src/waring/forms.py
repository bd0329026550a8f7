"""Waring decompositions of arbitrary forms and the two summand counts.

A form is decomposed monomial by monomial; linear forms that coincide after
normalizing the first nonzero coefficient to 1 are merged and their weights
added.  ``K_count`` / ``F_count`` are the closed-form numbers of summands for
the general form of degree ``D`` in ``n + 1`` variables (every monomial
present) using this construction and the classical one respectively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .combinatorics import count_primitive, exponent_vectors
from .errors import DegenerateInputError, DegenerateParameterError
from .monomial import decompose, scale_D, specialize
from .sparse import SparsePoly
from .tpoly import tpoly_eval

FormKey = tuple[Fraction, ...]


@dataclass(frozen=True)
class FormDecomposition:
    """``f = sum(lam * L^degree)`` with canonical (first nonzero entry 1) keys ``L``."""

    degree: int
    nvars: int
    q: Fraction
    terms: dict[FormKey, Fraction] = field(hash=False)
    distinct_forms: int = 0

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def cancelled(self) -> int:
        """Forms that were emitted but whose merged weight summed to zero."""
        return self.distinct_forms - len(self.terms)

    def items(self) -> list[tuple[FormKey, Fraction]]:
        return sorted(self.terms.items())


def canonical_form(coeffs: Sequence[Fraction]) -> tuple[FormKey, Fraction]:
    """Scale so the least-index nonzero entry is 1; returns (key, that entry)."""
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        raise DegenerateInputError("the zero linear form has no canonical key")
    return tuple(Fraction(c) / lead for c in coeffs), Fraction(lead)


def form_degree(f: SparsePoly) -> int:
    if not f:
        raise DegenerateInputError("the zero polynomial has no degree")
    if not f.is_homogeneous():
        raise DegenerateInputError("input is not homogeneous; homogenize() it first")
    return f.total_degree()


def auto_parameter(monomials, start: int = 2) -> Fraction:
    """Smallest integer ``q >= start`` at which no ``D_a`` vanishes."""
    Ds = [scale_D(a) for a in monomials]
    q = start
    while any(tpoly_eval(D, q) == 0 for D in Ds):
        q += 1
    return Fraction(q)


def decompose_form(f: SparsePoly, q=None) -> FormDecomposition:
    """Merged rational Waring decomposition of a homogeneous form."""
    D = form_degree(f)
    if D < 1:
        raise DegenerateInputError("constant forms have no Waring decomposition")
    monos = sorted(f.terms)
    if q is None:
        q = auto_parameter(monos)
    q = Fraction(q)
    bad = [a for a in monos if tpoly_eval(scale_D(a), q) == 0]
    if bad:
        raise DegenerateParameterError(q, bad)
    acc: dict[FormKey, Fraction] = {}
    for a in monos:
        c = Fraction(f.terms[a])
        for term in specialize(decompose(a, True), q).terms:
            key, lead = canonical_form(term.coeffs)
            acc[key] = acc.get(key, 0) + c * term.lam * lead**D
    merged = {k: v for k, v in acc.items() if v}
    return FormDecomposition(D, f.nvars, q, merged, len(acc))


def expand_form_decomposition(fd: FormDecomposition) -> SparsePoly:
    from .verify import expand_power_sum

    return expand_power_sum(fd.nvars, fd.degree, ((lam, key) for key, lam in fd.items()))


def general_form(nvars: int, D: int, coeff=1) -> SparsePoly:
    """Every monomial of degree ``D`` with the same coefficient."""
    return SparsePoly(nvars, {e: Fraction(coeff) for e in exponent_vectors(nvars, D)})


def _binom(m: int, r: int) -> int:
    return comb(m, r) if 0 <= r <= m else 0


def K_count(n: int, D: int) -> int:
    """Closed-form number of merged summands for the general form (``n + 1`` variables)."""
    if n < 0 or D < 1:
        raise ValueError("need n >= 0 and D >= 1")
    total = 0
    for r in range(1, n + 2):
        h = (D - r) // 2
        total += (_binom(h + r, r) - _binom(h, r)) * 2 ** (r - 1) * comb(n + 1, r)
    return total


def K_count_enumerated(n: int, D: int, q=2) -> int:
    """Count the distinct forms emitted for the general form at ``t = q``.

    Forms are counted whether or not their merged weight survives; with all
    coefficients equal some weights do cancel (see ``FormDecomposition.cancelled``).
    """
    return decompose_form(general_form(n + 1, D), q).distinct_forms


def F_count(n: int, D: int) -> int:
    """Number of primitive vectors, i.e. merged summands of the classical decomposition."""
    return count_primitive(n, D)


def homogenize(p: SparsePoly, slot: int = 0, degree: int | None = None) -> SparsePoly:
    """Insert a new variable at index ``slot`` raising every term to ``degree``."""
    if not 0 <= slot <= p.nvars:
        raise ValueError(f"slot {slot} out of range for {p.nvars} variables")
    deg = p.total_degree() if degree is None else degree
    if p and deg < p.total_degree():
        raise ValueError("target degree below the polynomial's degree")
    out = {}
    for e, c in p.terms.items():
        out[e[:slot] + (deg - sum(e),) + e[slot:]] = c
    return SparsePoly(p.nvars + 1, out)


def dehomogenize(f: SparsePoly, slot: int = 0) -> SparsePoly:
    """Set the variable at index ``slot`` to 1."""
    if not 0 <= slot < f.nvars:
        raise ValueError(f"slot {slot} out of range for {f.nvars} variables")
    out: dict = {}
    for e, c in f.terms.items():
        key = e[:slot] + e[slot + 1 :]
        out[key] = out[key] + c if key in out else c
    return SparsePoly(f.nvars - 1, out)
