"""Explicit parametrized Waring decompositions of a single monomial.

For ``a = (a_0, ..., a_n)`` with ``d = |a|`` the identity

    D_a(t) * X^a = sum over (A, k, s) of C(t) * l_{A,k,s}^d

holds in Z[t][X], where ``l_{A,k,s} = sum_{i not in A} (-1)^s_i t^k_i X_i``.
Coefficients are kept undivided (integer polynomials in ``t``); dividing by
``D_a`` happens only in :func:`specialize` or :meth:`SymbolicDecomposition.divided`.

The *reduced* mode uses shift-class representatives (``min k_i == 0``) with
merged coefficients, the *full* mode every ``k`` in the box.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .combinatorics import IndexData, enumerate_A, enumerate_K, enumerate_S, multinomial
from .errors import DegenerateInputError, DegenerateParameterError, PreconditionError
from .sparse import SparsePoly
from .tpoly import TPoly, TRat, tpoly_eval

log = logging.getLogger(__name__)

ONE = TPoly((1,))


def _as_exponents(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if not a:
        raise DegenerateInputError("empty exponent vector")
    if any(x < 0 for x in a):
        raise DegenerateInputError(f"negative exponent in {a}")
    return a


# --------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm:
    """``sum_{i in support} (-1)^s_i t^k_i X_i`` in ``nvars`` variables."""

    nvars: int
    support: tuple[int, ...]
    k: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        if not self.support:
            raise PreconditionError("a linear form needs a nonempty support")
        if not (len(self.support) == len(self.k) == len(self.s)):
            raise PreconditionError("support, k and s must have equal length")

    def coefficients(self) -> tuple[TPoly, ...]:
        """Coefficient of each variable as a polynomial in ``t`` (zero off the support)."""
        out = [TPoly()] * self.nvars
        for i, k, s in zip(self.support, self.k, self.s):
            out[i] = TPoly.monomial(k, -1 if s else 1)
        return tuple(out)

    def at(self, q) -> tuple[Fraction, ...]:
        """Rational coefficient vector for ``t = q``."""
        q = Fraction(q)
        out = [Fraction(0)] * self.nvars
        for i, k, s in zip(self.support, self.k, self.s):
            out[i] = -(q**k) if s else q**k
        return tuple(out)

    def to_sparse(self) -> SparsePoly:
        return SparsePoly.linear(self.coefficients())

    def __str__(self) -> str:
        return format_linear_form(self)


def format_linear_form(form: LinearForm) -> str:
    out = ""
    for j, (i, k, s) in enumerate(zip(form.support, form.k, form.s)):
        sign = "-" if s else ("+" if j else "")
        tp = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        out += f"{sign}{tp}X{i}"
    return out


# --------------------------------------------------------------------------
# the univariate helpers F_i


def f_poly(a: Sequence[int], i: int) -> tuple[TPoly, ...]:
    """``F_i(y) = prod_{j=1}^{m_i} (y - t^(a_i - 2j))`` as coefficients in ``y`` (lowest first)."""
    a = _as_exponents(a)
    if not 0 <= i < len(a):
        raise PreconditionError(f"variable index {i} out of range")
    m = (a[i] - 1) // 2
    poly: list[TPoly] = [ONE]
    for j in range(1, m + 1):
        root = TPoly.monomial(a[i] - 2 * j)
        # multiply by (y - root)
        nxt = [TPoly()] * (len(poly) + 1)
        for e, c in enumerate(poly):
            nxt[e + 1] = nxt[e + 1] + c
            nxt[e] = nxt[e] - c * root
        poly = nxt
    return tuple(poly)


def f_at_one(F: Sequence[TPoly]) -> TPoly:
    return sum(F, TPoly())


def f_at_tpower(F: Sequence[TPoly], b: int) -> TPoly:
    """``F(t^b)``."""
    return sum((c.shift(b * e) for e, c in enumerate(F)), TPoly())


@lru_cache(maxsize=4096)
def _f_cached(a: tuple[int, ...], i: int) -> tuple[TPoly, ...]:
    return f_poly(a, i)


def scale_D(a: Sequence[int]) -> TPoly:
    """``D_a = (-1)^|Z| 2^n multinomial(a) prod_{i not in Z} F_i(t^{a_i})``."""
    a = _as_exponents(a)
    if sum(a) < 1:
        raise DegenerateInputError("the zero exponent vector has no decomposition")
    idx = IndexData.of(a)
    out = TPoly.const((-1) ** len(idx.Z) * 2 ** idx.n * multinomial(a))
    for i in range(len(a)):
        if a[i]:
            out = out * f_at_tpower(_f_cached(a, i), a[i])
    return out


# --------------------------------------------------------------------------
# coefficients


def _validate(idx: IndexData, A: Sequence[int], k: Sequence[int], s: Sequence[int]) -> tuple[int, ...]:
    A = tuple(sorted(set(A)))
    if not set(idx.Z) <= set(A):
        raise PreconditionError(f"A = {A} must contain the zero set {idx.Z}")
    if not set(A) <= set(idx.E):
        raise PreconditionError(f"A = {A} must lie inside the even set {idx.E}")
    comp = idx.complement(A)
    if not comp:
        raise PreconditionError("A must not be the full index set")
    if len(k) != len(comp) or len(s) != len(comp):
        raise PreconditionError(f"k and s must have length {len(comp)}")
    for i, ki in zip(comp, k):
        if not 0 <= ki <= idx.m[i]:
            raise PreconditionError(f"k_{i} = {ki} outside [0, {idx.m[i]}]")
    if any(x not in (0, 1) for x in s):
        raise PreconditionError("signs must be 0 or 1")
    return comp


def coeff_C(a: Sequence[int], A: Sequence[int], k: Sequence[int], s: Sequence[int]) -> TPoly:
    """Coefficient of ``l_{A,k,s}^d`` in the full decomposition."""
    a = _as_exponents(a)
    idx = IndexData.of(a)
    comp = _validate(idx, A, k, s)
    return _coeff_C(a, tuple(sorted(set(A))), comp, tuple(k), tuple(s))


def _coeff_C(a, A, comp, k, s) -> TPoly:
    sign = (-1) ** (len(A) + sum(a[i] * si for i, si in zip(comp, s)))
    out = TPoly.const(sign * 2 ** len(A))
    for i in A:
        out = out * f_at_one(_f_cached(a, i))
    for i, ki in zip(comp, k):
        out = out * _f_cached(a, i)[ki]
    return out


def coeff_Cbar(a: Sequence[int], A: Sequence[int], k: Sequence[int], s: Sequence[int]) -> TPoly:
    """Merged coefficient of a shift-class representative ``k`` (``min k == 0``)."""
    a = _as_exponents(a)
    idx = IndexData.of(a)
    comp = _validate(idx, A, k, s)
    if min(k) != 0:
        raise PreconditionError(f"reduced k must have min 0, got {tuple(k)}")
    return _coeff_Cbar(a, idx, tuple(sorted(set(A))), comp, tuple(k), tuple(s))


def _coeff_Cbar(a, idx, A, comp, k, s) -> TPoly:
    d = sum(a)
    top = min(idx.m[i] - ki for i, ki in zip(comp, k))
    out = TPoly()
    for j in range(top + 1):
        kj = tuple(ki + j for ki in k)
        out = out + _coeff_C(a, A, comp, kj, s).shift(d * j)
    return out


# --------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class DecompTerm:
    A: tuple[int, ...]
    k: tuple[int, ...]
    s: tuple[int, ...]
    form: LinearForm
    coeff: TPoly


@dataclass(frozen=True)
class SymbolicDecomposition:
    """``D * X^a = sum(term.coeff * term.form^d)`` over Z[t]."""

    a: tuple[int, ...]
    reduced: bool
    D: TPoly
    terms: tuple[DecompTerm, ...]
    dropped: int = 0

    @property
    def d(self) -> int:
        return sum(self.a)

    @property
    def nvars(self) -> int:
        return len(self.a)

    def __len__(self) -> int:
        return len(self.terms)

    def divided(self) -> list[TRat]:
        """Per-term coefficients ``C / D`` as reduced rational functions of ``t``."""
        return [TRat(term.coeff, self.D) for term in self.terms]


@dataclass(frozen=True)
class RationalTerm:
    lam: Fraction
    coeffs: tuple[Fraction, ...]
    source: tuple | None = field(default=None, compare=False)


@dataclass(frozen=True)
class RationalDecomposition:
    """``X^a = sum(lam * L^d)`` over Q; ``q`` is the specialized parameter (None if unused)."""

    a: tuple[int, ...]
    q: Fraction | None
    terms: tuple[RationalTerm, ...]

    @property
    def d(self) -> int:
        return sum(self.a)

    def __len__(self) -> int:
        return len(self.terms)


def decompose(a: Sequence[int], reduced: bool = True) -> SymbolicDecomposition:
    """Assemble the symbolic decomposition of ``X^a``."""
    return _decompose(_as_exponents(a), bool(reduced))


@lru_cache(maxsize=8192)
def _decompose(a: tuple[int, ...], reduced: bool) -> SymbolicDecomposition:
    if sum(a) < 1:
        raise DegenerateInputError(f"exponent vector {a} has degree 0")
    idx = IndexData.of(a)
    D = scale_D(a)
    terms = []
    dropped = 0
    for A in enumerate_A(idx):
        comp = idx.complement(A)
        signs = enumerate_S(A, idx.n, reduced=True)
        for k in enumerate_K(A, idx, reduced=reduced):
            for s in signs:
                if reduced:
                    c = _coeff_Cbar(a, idx, A, comp, k, s)
                else:
                    c = _coeff_C(a, A, comp, k, s)
                if not c:
                    dropped += 1
                    log.warning("dropping zero coefficient for a=%s A=%s k=%s s=%s", a, A, k, s)
                    continue
                form = LinearForm(len(a), comp, k, s)
                terms.append(DecompTerm(A, k, s, form, c))
    return SymbolicDecomposition(a, reduced, D, tuple(terms), dropped)


decompose.cache_clear = _decompose.cache_clear  # type: ignore[attr-defined]


def summand_count_closed(a: Sequence[int], reduced: bool = True) -> int:
    """Closed-form number of summands of :func:`decompose`."""
    a = _as_exponents(a)
    if sum(a) < 1:
        raise DegenerateInputError(f"exponent vector {a} has degree 0")
    nz = [x for x in a if x]
    plus = prod(x + 1 for x in nz)
    if reduced:
        return (plus - prod(x - 1 for x in nz)) // 2
    if all(x % 2 == 0 for x in nz):
        return (plus - 1) // 2
    return plus // 2


def specialize(dec: SymbolicDecomposition, q) -> RationalDecomposition:
    """Substitute ``t = q`` and divide by ``D_a(q)``."""
    q = Fraction(q)
    Dq = tpoly_eval(dec.D, q)
    if Dq == 0:
        raise DegenerateParameterError(q, [dec.a])
    out = []
    for term in dec.terms:
        lam = Fraction(tpoly_eval(term.coeff, q)) / Dq
        if lam == 0:
            continue
        out.append(RationalTerm(lam, term.form.at(q), (term.A, term.k, term.s)))
    return RationalDecomposition(dec.a, q, tuple(out))


def default_parameter(a: Sequence[int]) -> Fraction:
    """Smallest integer ``q >= 2`` with ``D_a(q) != 0``."""
    D = scale_D(a)
    q = 2
    while tpoly_eval(D, q) == 0:
        q += 1
    return Fraction(q)
