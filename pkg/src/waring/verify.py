"""Expansion-based checking of decomposition identities.

Every check expands the right-hand side completely and compares it with the
left-hand side term for term; nothing is sampled.  Two engines exist:

``dense``
    multinomial expansion of each power ``l^d`` written straight into a
    numpy table indexed by (exponent vector, power of t).  int64 is used only
    when an a-priori bound on every accumulated value fits; otherwise the
    table holds Python integers.
``sparse``
    ``SparsePoly`` arithmetic with binary exponentiation.  Slower, kept as an
    independent second route.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, lcm, prod
from typing import Iterable, Iterator, Sequence

import numpy as np

from .combinatorics import exponent_vectors, multinomial
from .monomial import (
    RationalDecomposition,
    RationalTerm,
    SymbolicDecomposition,
    decompose,
    specialize,
)
from .sparse import Exponent, SparsePoly, first_difference, spoly_pow
from .tpoly import TPoly, tpoly_eval

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    lhs: SparsePoly
    rhs: SparsePoly
    mismatch: Exponent | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "OK"
        e = self.mismatch
        return f"MISMATCH at {e}: lhs={self.lhs.coeff(e)} rhs={self.rhs.coeff(e)}"


def _report(lhs: SparsePoly, rhs: SparsePoly) -> VerifyReport:
    diff = first_difference(lhs, rhs)
    return VerifyReport(diff is None, lhs, rhs, diff)


# --------------------------------------------------------------------------
# dense engine


@lru_cache(maxsize=256)
def _support_table(nvars: int, d: int, support: tuple[int, ...]):
    """Exponent block for forms supported on ``support``: (B, multinomials, full rows)."""
    full = exponent_vectors(nvars, d)
    row_of = {e: r for r, e in enumerate(full)}
    sub = exponent_vectors(len(support), d)
    B = np.array(sub, dtype=np.int64).reshape(len(sub), len(support))
    mults = [multinomial(b) for b in sub]
    rows = np.empty(len(sub), dtype=np.int64)
    for j, b in enumerate(sub):
        e = [0] * nvars
        for i, x in zip(support, b):
            e[i] = x
        rows[j] = row_of[tuple(e)]
    return full, B, mults, rows


def expand_symbolic(dec: SymbolicDecomposition) -> SparsePoly:
    """``sum(coeff * form^d)`` as a ``SparsePoly`` over ``TPoly`` (dense engine)."""
    nvars, d = dec.nvars, dec.d
    if not dec.terms:
        return SparsePoly(nvars)
    tables = {}
    width = 1
    bound = 0
    for term in dec.terms:
        sup = term.form.support
        if sup not in tables:
            tables[sup] = _support_table(nvars, d, sup)
        width = max(width, d * max(term.k) + len(term.coeff))
        bound += max(tables[sup][2]) * sum(abs(c) for c in term.coeff.coeffs)
    full = next(iter(tables.values()))[0]
    use_int = bound < _INT64_SAFE
    dtype = np.int64 if use_int else object
    R = np.zeros((len(full), width), dtype=dtype)
    if not use_int:
        R[...] = 0
    mult_arrays = {sup: np.array(t[2], dtype=dtype) for sup, t in tables.items()}
    for term in dec.terms:
        _, B, _, rows = tables[term.form.support]
        k = np.array(term.k, dtype=np.int64)
        s = np.array(term.s, dtype=np.int64)
        shift = B @ k
        parity = (B @ s) & 1
        signed = np.where(parity == 1, -mult_arrays[term.form.support], mult_arrays[term.form.support])
        c = np.array(term.coeff.coeffs, dtype=dtype)
        cols = shift[:, None] + np.arange(len(c))[None, :]
        R[rows[:, None], cols] += signed[:, None] * c[None, :]
    nz = np.nonzero((R != 0).any(axis=1))[0]
    return SparsePoly(nvars, {full[r]: TPoly(int(x) for x in R[r]) for r in nz})


def expand_symbolic_sparse(dec: SymbolicDecomposition) -> SparsePoly:
    """Same sum, by ``SparsePoly`` binary exponentiation."""
    total = SparsePoly(dec.nvars)
    for term in dec.terms:
        total = total + spoly_pow(term.form.to_sparse(), dec.d).scale(term.coeff)
    return total


def verify_symbolic(dec: SymbolicDecomposition, engine: str = "dense") -> VerifyReport:
    """Check ``D * X^a == sum(coeff * form^d)`` exactly in Z[t][X]."""
    if engine == "dense":
        rhs = expand_symbolic(dec)
    elif engine == "sparse":
        rhs = expand_symbolic_sparse(dec)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    lhs = SparsePoly.monomial(dec.a, dec.D)
    return _report(lhs, rhs)


# --------------------------------------------------------------------------
# rational decompositions


def expand_power_sum(nvars: int, d: int, terms: Iterable[tuple[Fraction, Sequence[Fraction]]]) -> SparsePoly:
    """``sum(lam * L^d)`` over Q by the multinomial theorem.

    Each form is scaled to integers first so the inner loop is integer-only.
    """
    acc: dict[Exponent, Fraction] = {}
    full = exponent_vectors(nvars, d)
    mults = [multinomial(e) for e in full]
    for lam, coeffs in terms:
        coeffs = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        powers = [[x**j for j in range(d + 1)] for x in ints]
        scale = Fraction(lam) / Fraction(den) ** d
        for e, m in zip(full, mults):
            v = m
            for i, b in enumerate(e):
                if b:
                    v *= powers[i][b]
                    if not v:
                        break
            if v:
                acc[e] = acc.get(e, 0) + scale * v
    return SparsePoly(nvars, acc)


def expand_rational(rdec: RationalDecomposition, engine: str = "multinomial") -> SparsePoly:
    """``sum(lam * L^d)`` for a rational decomposition of a monomial."""
    nvars, d = len(rdec.a), rdec.d
    if engine == "sparse":
        total = SparsePoly(nvars)
        for term in rdec.terms:
            total = total + spoly_pow(SparsePoly.linear(term.coeffs), d).scale(term.lam)
        return total
    if engine != "multinomial":
        raise ValueError(f"unknown engine {engine!r}")
    return expand_power_sum(nvars, d, ((t.lam, t.coeffs) for t in rdec.terms))


def verify_specialized(rdec: RationalDecomposition, engine: str = "multinomial") -> VerifyReport:
    """Check ``X^a == sum(lam * L^d)`` exactly over Q."""
    rhs = expand_rational(rdec, engine)
    lhs = SparsePoly.monomial(rdec.a, Fraction(1))
    return _report(lhs, rhs)


def naive_decompose(a: Sequence[int]) -> RationalDecomposition:
    """Classical inclusion-exclusion identity with forms ``sum p_i X_i``, ``0 <= p_i <= a_i``.

    The all-zero ``p`` is skipped: its form vanishes identically.
    """
    a = tuple(int(x) for x in a)
    D = sum(a)
    if D < 1:
        raise ValueError("naive decomposition needs degree >= 1")
    fact = factorial(D)
    terms = []
    for p in product(*(range(x + 1) for x in a)):
        if not any(p):
            continue
        lam = Fraction((-1) ** (D - sum(p)) * prod(comb(x, y) for x, y in zip(a, p)), fact)
        terms.append(RationalTerm(lam, tuple(Fraction(x) for x in p), p))
    return RationalDecomposition(a, None, tuple(terms))


# --------------------------------------------------------------------------
# sweeps


def sweep_vectors(max_vars: int, amax: int, amin: int = 0) -> Iterator[tuple[int, ...]]:
    """Exponent vectors with 1..max_vars entries in ``[amin, amax]``, degree >= 1."""
    for nv in range(1, max_vars + 1):
        for a in product(range(amin, amax + 1), repeat=nv):
            if sum(a) >= 1:
                yield a


def _check_one(args) -> tuple[tuple[int, ...], bool, bool, int]:
    a, reduced = args
    dec = decompose(a, reduced)
    return a, reduced, verify_symbolic(dec).ok, len(dec.terms)


def sweep(
    vectors: Iterable[Sequence[int]],
    modes: Sequence[bool] = (True, False),
    parallel: bool = False,
    max_workers: int | None = None,
) -> list[tuple[tuple[int, ...], bool, bool, int]]:
    """Verify every vector in every mode; returns ``(a, reduced, ok, n_terms)`` rows in input order."""
    jobs = [(tuple(a), bool(m)) for a in vectors for m in modes]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(_check_one, jobs, chunksize=8))
    return [_check_one(j) for j in jobs]


def specialized_ok(a: Sequence[int], q, reduced: bool = True) -> bool:
    """``specialize`` followed by ``verify_specialized``; False when ``D_a(q) == 0``."""
    dec = decompose(a, reduced)
    if tpoly_eval(dec.D, Fraction(q)) == 0:
        return False
    return verify_specialized(specialize(dec, q)).ok
