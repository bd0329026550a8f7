"""Sparse multivariate polynomials over an exact scalar ring.

A ``SparsePoly`` maps exponent tuples (fixed arity) to nonzero scalars.
Scalars may be ``int``, ``Fraction``, ``TPoly`` or ``TRat``; the class only
uses ``+``, ``*``, ``==`` and truthiness, so it runs in Z[t] without any
division and in Q after specialization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


def _format_monomial(exp: Exponent, names: list[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(exp):
        if e == 0:
            continue
        name = names[i] if names else f"X{i}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class SparsePoly:
    """Immutable sparse polynomial ``{exponent tuple: scalar}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Any] | Iterable[tuple[Exponent, Any]] = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Any] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has arity {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if exp in clean:
                c = clean[exp] + c
            clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "SparsePoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c=1) -> "SparsePoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def linear(cls, coeffs: Iterable[Any]) -> "SparsePoly":
        """Linear form ``sum(c_i * X_i)``."""
        coeffs = list(coeffs)
        n = len(coeffs)
        return cls(n, ((tuple(int(j == i) for j in range(n)), c) for i, c in enumerate(coeffs)))

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Any]]:
        return iter(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, exp: Iterable[int], default=0):
        return self.terms.get(tuple(exp), default)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- degree data --------------------------------------------------------
    def total_degree(self) -> int:
        """Largest total degree of a stored term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, "SparsePoly"]:
        comps: dict[int, dict] = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: SparsePoly(self.nvars, t) for d, t in sorted(comps.items())}

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePoly":
        if not c:
            return SparsePoly(self.nvars)
        return SparsePoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return SparsePoly(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, d: int) -> "SparsePoly":
        return spoly_pow(self, d)

    # -- maps ---------------------------------------------------------------
    def map_coeffs(self, f: Callable[[Any], Any]) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def evaluate(self, point: Iterable[Any]):
        """Evaluate at a point (scalars of any compatible ring)."""
        point = list(point)
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total: Any = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def compose_linear(self, rows: list[list[Any]], shift: list[Any] | None = None) -> "SparsePoly":
        """Substitute ``X_i -> sum_j rows[i][j] * U_j + shift[i]`` (affine pullback)."""
        m = len(rows[0]) if rows else 0
        images = []
        for i, row in enumerate(rows):
            img = SparsePoly.linear(row) if m else SparsePoly(0)
            if shift is not None and shift[i]:
                img = img + SparsePoly.const(m, shift[i])
            images.append(img)
        total = SparsePoly(m)
        cache: dict[tuple[int, int], SparsePoly] = {}
        for e, c in self.terms.items():
            v = SparsePoly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = spoly_pow(images[i], k)
                    v = v * cache[key]
            total = total + v
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{_format_monomial(e)}" for e, c in self)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {dict(sorted(self.terms.items()))!r})"


def spoly_mul(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return a * b


def spoly_pow(p: SparsePoly, d: int) -> SparsePoly:
    """``p**d`` by binary exponentiation with term-map merging."""
    if d < 0:
        raise ValueError("negative exponent")
    result = SparsePoly.const(p.nvars, 1)
    base = p
    while d:
        if d & 1:
            result = result * base
        d >>= 1
        if d:
            base = base * base
    return result


def first_difference(lhs: SparsePoly, rhs: SparsePoly) -> Exponent | None:
    """Lexicographically first exponent where the two polynomials differ."""
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    for k in keys:
        if lhs.terms.get(k, 0) != rhs.terms.get(k, 0):
            return k
    return None


def to_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
