"""Index-set machinery, multinomials, Moebius function and primitive vectors.

All enumerations return materialized lists in a fixed lexicographic order so
that everything built on top of them is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from math import comb, factorial, gcd, prod
from typing import Sequence

from .errors import PreconditionError


def multinomial(a: Sequence[int]) -> int:
    """``|a|! / prod(a_i!)``."""
    if any(x < 0 for x in a):
        raise ValueError("multinomial of negative entries")
    out, acc = 1, 0
    for x in a:
        acc += x
        out *= comb(acc, x)
    return out


@dataclass(frozen=True)
class IndexData:
    """Zero set ``Z``, even set ``E`` and bounds ``m_i = floor((a_i - 1) / 2)``."""

    a: tuple[int, ...]
    Z: tuple[int, ...]
    E: tuple[int, ...]
    m: tuple[int, ...]

    @classmethod
    def of(cls, a: Sequence[int]) -> "IndexData":
        a = tuple(int(x) for x in a)
        if not a:
            raise ValueError("exponent vector must have at least one entry")
        if any(x < 0 for x in a):
            raise ValueError(f"negative exponent in {a}")
        Z = tuple(i for i, x in enumerate(a) if x == 0)
        E = tuple(i for i, x in enumerate(a) if x % 2 == 0)
        m = tuple((x - 1) // 2 for x in a)
        return cls(a, Z, E, m)

    @property
    def n(self) -> int:
        """Index of the last variable (there are ``n + 1`` variables)."""
        return len(self.a) - 1

    @property
    def d(self) -> int:
        return sum(self.a)

    def complement(self, A: Sequence[int]) -> tuple[int, ...]:
        As = set(A)
        return tuple(i for i in range(len(self.a)) if i not in As)


def enumerate_A(idx: IndexData) -> list[tuple[int, ...]]:
    """All ``A`` with ``Z <= A <= E``, the full index set excluded.

    Ordered by size, then lexicographically.
    """
    free = [i for i in idx.E if i not in set(idx.Z)]
    full = len(idx.a)
    out = []
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            A = tuple(sorted(idx.Z + extra))
            if len(A) == full:
                continue
            out.append(A)
    return out


def _check_A(A: Sequence[int], idx: IndexData) -> tuple[int, ...]:
    comp = idx.complement(A)
    if not comp:
        raise PreconditionError("A must not be the full index set")
    return comp


def enumerate_K(A: Sequence[int], idx: IndexData, reduced: bool) -> list[tuple[int, ...]]:
    """Tuples ``(k_i)`` for ``i`` outside ``A`` with ``0 <= k_i <= m_i``.

    With ``reduced`` only tuples with ``min k_i == 0`` are kept.
    """
    comp = _check_A(A, idx)
    ranges = [range(max(idx.m[i], 0) + 1) for i in comp]
    ks = list(product(*ranges))
    if reduced:
        ks = [k for k in ks if min(k) == 0]
    return ks


def enumerate_S(A: Sequence[int], n: int, reduced: bool) -> list[tuple[int, ...]]:
    """Sign tuples ``(s_i)`` for ``i`` outside ``A`` (``n + 1`` variables in total).

    With ``reduced`` the sign of the least index outside ``A`` is fixed to 0.
    """
    size = n + 1 - len(set(A))
    if size <= 0:
        raise PreconditionError("A must not be the full index set")
    if reduced:
        return [(0,) + s for s in product((0, 1), repeat=size - 1)]
    return list(product((0, 1), repeat=size))


def sign_sum(J: Sequence[int]) -> int:
    """``sum over I in {0,1}^k of (-1)^(J . I)``, via the product ``prod(1 + (-1)^J_i)``."""
    return prod(1 + (-1) ** (j % 2) for j in J)


def mobius(d: int) -> int:
    """Moebius function by trial division."""
    if d < 1:
        raise ValueError("mobius is defined for positive integers only")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if d > 1:
        result = -result
    return result


def count_primitive(n: int, D: int) -> int:
    """Primitive vectors in ``Z_{>=0}^{n+1}`` with coordinate sum in ``[1, D]`` (Moebius form)."""
    if n < 0 or D < 1:
        raise ValueError("need n >= 0 and D >= 1")
    return sum(mobius(d) * (comb(n + 1 + D // d, n + 1) - 1) for d in range(1, D + 1))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_primitive(n: int, D: int) -> int:
    """Same count as :func:`count_primitive`, by listing vectors and filtering on gcd."""
    if n < 0 or D < 1:
        raise ValueError("need n >= 0 and D >= 1")
    count = 0
    for s in range(1, D + 1):
        for v in _compositions(s, n + 1):
            if reduce(gcd, v) == 1:
                count += 1
    return count


def exponent_vectors(nvars: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree ``d``, lexicographically descending."""
    return sorted(_compositions(d, nvars), reverse=True) if nvars else ([()] if d == 0 else [])


def factorial_ratio(D: int, k: int) -> int:
    """``(D + k)! / D!``."""
    return factorial(D + k) // factorial(D)
