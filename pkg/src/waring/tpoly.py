"""Dense univariate polynomials in the parameter ``t`` and their quotients.

``TPoly`` holds integer coefficients indexed by the power of ``t`` (lowest
first) with trailing zeros trimmed.  ``TRat`` is a reduced quotient of two
``TPoly`` values: polynomial gcd and integer content removed, denominator
with positive leading coefficient, so equality is a field-by-field check.

Both types are immutable and interoperate with ``int`` and ``Fraction``
through the usual operators, which lets them serve as scalars of
``SparsePoly``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class TPoly:
    """Polynomial in ``t`` with integer coefficients, stored densely."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"TPoly coefficients must be int, got {type(x).__name__}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: int = 1) -> "TPoly":
        """``c * t**power``."""
        if power < 0:
            raise ValueError("negative power of t")
        return cls([0] * power + [c])

    @classmethod
    def t(cls) -> "TPoly":
        return cls((0, 1))

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def coeff(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            if not self.coeffs:
                h = hash(0)
            elif len(self.coeffs) == 1:
                h = hash(self.coeffs[0])
            else:
                h = hash(("TPoly", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (other,)
        if isinstance(other, TRat):
            return other == self
        return NotImplemented

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "TPoly | None":
        if isinstance(other, TPoly):
            return other
        if isinstance(other, int):
            return TPoly((other,))
        if isinstance(other, Fraction) and other.denominator == 1:
            return TPoly((other.numerator,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-x for x in self.coeffs)

    def __pos__(self) -> "TPoly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly(x * other for x in self.coeffs) if other else TPoly()
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return TPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = TPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (TPoly, int)):
            return TRat(self, other)
        if isinstance(other, TRat):
            return TRat(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return TRat(TPoly((other,)), self)
        return NotImplemented

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs or k == 0:
            return self
        return TPoly((0,) * k + self.coeffs)

    # -- evaluation / composition -------------------------------------------
    def __call__(self, q):
        return tpoly_eval(self, q)

    def compose_power(self, k: int) -> "TPoly":
        """Substitute ``t -> t**k``."""
        if k == 0:
            return TPoly((sum(self.coeffs),))
        out = [0] * (k * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return TPoly(out)

    # -- division -----------------------------------------------------------
    def divmod_rational(self, other: "TPoly") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over Q (lists of Fractions, lowest power first)."""
        return _qdivmod([Fraction(c) for c in self.coeffs], [Fraction(c) for c in other.coeffs])

    def exquo(self, other: "TPoly") -> "TPoly":
        """Exact quotient in Z[t]; raises if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = self.divmod_rational(other)
        if any(r) or any(x.denominator != 1 for x in q):
            raise ArithmeticError(f"{other} does not divide {self} in Z[t]")
        return TPoly(int(x) for x in q)

    def primitive(self) -> "TPoly":
        """Divide by content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return TPoly(x // c for x in self.coeffs)

    # -- printing -----------------------------------------------------------
    def __str__(self) -> str:
        return format_tpoly(self)

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)!r})"


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    while b and b[-1] == 0:
        b = b[:-1]
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    r = a[: len(b) - 1]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def format_tpoly(p: TPoly, var: str = "t") -> str:
    """Canonical text: descending powers, no spaces, e.g. ``5040t^7-10080t^5+5040t^3``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_tpoly(text: str, var: str = "t") -> TPoly:
    """Inverse of :func:`format_tpoly` (accepts the canonical text form)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return TPoly()
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        tok = s[i + 1 : j]
        if not tok:
            raise ValueError(f"malformed polynomial {text!r}")
        if var in tok:
            head, _, tail = tok.partition(var)
            c = int(head) if head else 1
            if tail == "":
                e = 1
            elif tail.startswith("^"):
                e = int(tail[1:])
            else:
                raise ValueError(f"malformed term {tok!r}")
        else:
            c, e = int(tok), 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        i = j
    top = max(coeffs)
    return TPoly(coeffs.get(e, 0) for e in range(top + 1))


def tpoly_eval(p: TPoly, q: Rational) -> Rational:
    """Horner evaluation at an exact rational."""
    acc: Rational = 0
    for c in reversed(p.coeffs):
        acc = acc * q + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return acc.numerator
    return acc


def tpoly_add(a: TPoly, b: TPoly) -> TPoly:
    return a + b


def tpoly_mul(a: TPoly, b: TPoly) -> TPoly:
    return a * b


def tpoly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Greatest common divisor in Z[t], primitive with positive leading coefficient.

    Euclid over Q on the primitive parts, then the integer gcd of contents.
    ``gcd(0, 0)`` is the zero polynomial.
    """
    if not a or not b:
        nz = a or b
        return nz.primitive() * nz.content() if nz else TPoly()
    x = [Fraction(c) for c in a.primitive().coeffs]
    y = [Fraction(c) for c in b.primitive().coeffs]
    while y:
        _, r = _qdivmod(x, y)
        x, y = y, r
    den = 1
    for c in x:
        den = den * c.denominator // gcd(den, c.denominator)
    g = TPoly(int(c * den) for c in x).primitive()
    return g * gcd(a.content(), b.content())


def trat_reduce(n: TPoly, d: TPoly) -> "TRat":
    return TRat(n, d)


class TRat:
    """Reduced quotient ``num / den`` of two ``TPoly`` values."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = TPoly((num,))
        if den is None:
            den = TPoly((1,))
        elif isinstance(den, int):
            den = TPoly((den,))
        if not den:
            raise ZeroDivisionError("TRat with zero denominator")
        if not num:
            object.__setattr__(self, "num", TPoly())
            object.__setattr__(self, "den", TPoly((1,)))
            return
        g = tpoly_gcd(num, den).primitive()
        if g.degree > 0:
            num, den = num.exquo(g), den.exquo(g)
        c = gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        if c != 1:
            num = TPoly(x // c for x in num.coeffs)
            den = TPoly(x // c for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("TRat is immutable")

    @staticmethod
    def _coerce(other) -> "TRat | None":
        if isinstance(other, TRat):
            return other
        if isinstance(other, (int, TPoly)):
            return TRat(other)
        if isinstance(other, Fraction):
            return TRat(TPoly((other.numerator,)), TPoly((other.denominator,)))
        return None

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den == 1:
            return hash(self.num)
        return hash(("TRat", self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "TRat":
        return TRat(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero TRat")
        return TRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __call__(self, q: Rational) -> Fraction:
        d = tpoly_eval(self.den, q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {q}")
        return Fraction(tpoly_eval(self.num, q)) / d

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"TRat({self.num!r}, {self.den!r})"


def as_tpoly(x: Union[int, TPoly, Sequence[int]]) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly((x,))
    return TPoly(x)
