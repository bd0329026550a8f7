"""Exact integration of polynomials over full-dimensional rational simplices.

Each homogeneous component is written as a sum of powers of rational linear
forms (see :mod:`waring.forms`) and every power is integrated in closed form
by Brion's vertex formula, which needs the form to take pairwise distinct
values on the vertices.  Some emitted forms, like ``X0 + X1``, tie on the
standard simplex for every parameter value, so when no
parameter works the polynomial is first pulled back through a unimodular
shear ``x = T u`` and the sheared simplex ``T^-1 Delta`` is used instead.

:func:`oracle_integrate` is an unrelated route (affine pullback to the
standard simplex plus the Dirichlet monomial formula) used for checking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .errors import DegenerateParameterError, DegenerateSimplexError, RegularityError, UnresolvableRegularityError
from .forms import FormDecomposition, decompose_form
from .monomial import LinearForm, decompose, scale_D
from .sparse import SparsePoly
from .tpoly import tpoly_eval

Matrix = list[list[Fraction]]

MAX_ATTEMPTS = 50


# --------------------------------------------------------------------------
# exact linear algebra


def det(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            result = -result
        result *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                for j in range(c, n):
                    A[r][j] -= f * A[c][j]
    return result


def inverse(M: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def matvec(M: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M)


# --------------------------------------------------------------------------
# simplices


@dataclass(frozen=True)
class Simplex:
    """Convex hull of ``n + 1`` affinely independent rational points of ``Q^n``."""

    vertices: tuple[tuple[Fraction, ...], ...]

    def __init__(self, vertices: Sequence[Sequence]):
        vs = tuple(tuple(Fraction(x) for x in v) for v in vertices)
        if not vs:
            raise DegenerateSimplexError("a simplex needs vertices")
        n = len(vs[0])
        if n < 1:
            raise DegenerateSimplexError("only simplices of dimension >= 1 are supported")
        if any(len(v) != n for v in vs):
            raise DegenerateSimplexError("vertices have inconsistent dimensions")
        if len(vs) != n + 1:
            raise DegenerateSimplexError(f"need {n + 1} vertices in Q^{n}, got {len(vs)} (full-dimensional only)")
        object.__setattr__(self, "vertices", vs)
        if self.edge_det() == 0:
            raise DegenerateSimplexError("vertices are affinely dependent")

    @classmethod
    def standard(cls, n: int) -> "Simplex":
        return cls([[0] * n] + [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def edge_matrix(self) -> Matrix:
        """Columns ``v_i - v_0``, as a row-major matrix."""
        v0 = self.vertices[0]
        return [[self.vertices[j + 1][i] - v0[i] for j in range(self.dim)] for i in range(self.dim)]

    def edge_det(self) -> Fraction:
        return det(self.edge_matrix())

    def transformed(self, M: Sequence[Sequence[Fraction]]) -> "Simplex":
        return Simplex([matvec(M, v) for v in self.vertices])


def volume(simplex: Simplex) -> Fraction:
    """``|det(v_1 - v_0, ..., v_n - v_0)| / n!``."""
    return abs(simplex.edge_det()) / factorial(simplex.dim)


def _pairing(form: Sequence[Fraction], point: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(form, point)), Fraction(0))


def is_regular(form: Sequence, simplex: Simplex) -> bool:
    """True iff the form takes pairwise distinct values at the vertices."""
    vals = [_pairing(form, v) for v in simplex.vertices]
    return len(set(vals)) == len(vals)


def integrate_power(form: Sequence, D: int, simplex: Simplex) -> Fraction:
    """``integral over simplex of form(x)^D dx`` by Brion's vertex formula."""
    if D < 0:
        raise ValueError("negative power")
    if len(form) != simplex.dim:
        raise ValueError("form and simplex dimensions differ")
    n = simplex.dim
    vals = [_pairing(form, v) for v in simplex.vertices]
    if len(set(vals)) != len(vals):
        raise RegularityError(f"form {tuple(str(c) for c in form)} is not regular on the simplex")
    total = Fraction(0)
    for i, vi in enumerate(vals):
        den = prod((vi - vj for j, vj in enumerate(vals) if j != i), start=Fraction(1))
        total += vi ** (D + n) / den
    return abs(simplex.edge_det()) * Fraction(factorial(D), factorial(D + n)) * total


# --------------------------------------------------------------------------
# integrating polynomials


@dataclass(frozen=True)
class IntegrationResult:
    value: Fraction
    q: Fraction | None
    decompositions: dict[int, FormDecomposition] = field(hash=False, default_factory=dict)
    transform: Matrix | None = field(hash=False, default=None)


def _primes():
    yield 2
    p = 3
    while True:
        if all(p % r for r in range(3, int(p**0.5) + 1, 2)):
            yield p
        p += 2


def shear(n: int, seed: int) -> Matrix:
    """Deterministic unimodular matrix ``L @ U`` with small random off-diagonal entries."""
    rng = random.Random(seed)
    L = [[Fraction(1 if i == j else (rng.randint(-3, 3) if j < i else 0)) for j in range(n)] for i in range(n)]
    U = [[Fraction(1 if i == j else (rng.randint(-3, 3) if j > i else 0)) for j in range(n)] for i in range(n)]
    return [[sum((L[i][k] * U[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def _identically_irregular(form: LinearForm, simplex: Simplex) -> bool:
    """Whether some vertex pair ties for every value of the parameter."""
    verts = simplex.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            by_power: dict[int, Fraction] = {}
            for var, k, s in zip(form.support, form.k, form.s):
                diff = verts[i][var] - verts[j][var]
                by_power[k] = by_power.get(k, 0) + (-diff if s else diff)
            if not any(by_power.values()):
                return True
    return False


def _pullback(p: SparsePoly, T: Matrix | None) -> SparsePoly:
    return p if T is None else p.compose_linear(T)


def integrate_poly(p: SparsePoly, simplex: Simplex, max_attempts: int = MAX_ATTEMPTS) -> IntegrationResult:
    """Exact integral of ``p`` over ``simplex`` through Waring decompositions and Brion's formula."""
    n = simplex.dim
    if p.nvars != n:
        raise ValueError(f"polynomial has {p.nvars} variables, simplex lives in Q^{n}")
    comps = p.homogeneous_components()
    vol = volume(simplex)
    const = comps.pop(0, None)
    base = Fraction(const.coeff((0,) * n)) * vol if const is not None else Fraction(0)
    if not comps:
        return IntegrationResult(base, None, {}, None)

    attempts = 0
    diagnostics = []
    every_transform_irregular = True
    seed = 0
    while attempts < max_attempts:
        T = None if seed == 0 else shear(n, seed)
        seed += 1
        local = simplex if T is None else simplex.transformed(inverse(T))
        pulled = {D: _pullback(c, T) for D, c in comps.items()}
        pulled = {D: c for D, c in pulled.items() if c}
        monos = sorted({a for c in pulled.values() for a in c.terms})
        stuck = [
            t.form
            for a in monos
            for t in decompose(a, True).terms
            if _identically_irregular(t.form, local)
        ]
        if stuck:
            attempts += 1
            diagnostics.append(f"transform #{seed - 1}: {len(stuck)} form(s) tie for every t, e.g. {stuck[0]}")
            continue
        every_transform_irregular = False
        Ds = [scale_D(a) for a in monos]
        for q in _primes():
            if attempts >= max_attempts:
                break
            # a few parameter values per transform before trying the next shear
            if q > 29:
                break
            attempts += 1
            if any(tpoly_eval(D, q) == 0 for D in Ds):
                diagnostics.append(f"transform #{seed - 1}, t={q}: some D_a vanishes")
                continue
            decs = {D: decompose_form(c, q) for D, c in pulled.items()}
            irregular = [key for fd in decs.values() for key in fd.terms if not is_regular(key, local)]
            if irregular:
                diagnostics.append(f"transform #{seed - 1}, t={q}: {len(irregular)} irregular form(s)")
                continue
            value = base
            for D, fd in decs.items():
                for key, lam in fd.items():
                    value += lam * integrate_power(key, D, local)
            return IntegrationResult(value, Fraction(q), decs, T)
    if every_transform_irregular:
        raise UnresolvableRegularityError("no transform admits regular forms: " + "; ".join(diagnostics[:5]))
    raise RegularityError(f"retry budget of {max_attempts} exhausted: " + "; ".join(diagnostics[-5:]))


def oracle_integrate(p: SparsePoly, simplex: Simplex) -> Fraction:
    """Integral via ``x = E u + v_0`` and ``int_{std} u^a du = prod(a_i!) / (|a| + n)!``."""
    n = simplex.dim
    if p.nvars != n:
        raise ValueError(f"polynomial has {p.nvars} variables, simplex lives in Q^{n}")
    E = simplex.edge_matrix()
    jac = abs(det(E))
    if jac == 0:
        raise DegenerateSimplexError("vertices are affinely dependent")
    g = p.compose_linear(E, list(simplex.vertices[0]))
    total = Fraction(0)
    for a, c in g.terms.items():
        total += Fraction(c) * Fraction(prod(factorial(x) for x in a), factorial(sum(a) + n))
    return jac * total
