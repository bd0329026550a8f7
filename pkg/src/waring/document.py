"""Serialized form of a decomposition, plus its plain-text rendering.

Every number is written as a decimal string so arbitrarily large integers
survive any JSON reader.  ``parse(emit(doc)) == doc`` for every document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .monomial import (
    DecompTerm,
    LinearForm,
    RationalDecomposition,
    SymbolicDecomposition,
)
from .tpoly import TPoly, format_tpoly

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """Malformed decomposition document."""


@dataclass(frozen=True)
class DocTerm:
    A: tuple[str, ...]
    k: tuple[str, ...]
    s: tuple[str, ...]
    coefficient: tuple[str, ...] | str
    linear_form: tuple[str, ...]


@dataclass(frozen=True)
class DecompositionDocument:
    schema_version: str
    exponents: tuple[str, ...]
    mode: str
    parameter: str
    D: tuple[str, ...]
    terms: tuple[DocTerm, ...]

    @property
    def symbolic(self) -> bool:
        return self.parameter == "t"


def _strs(xs) -> tuple[str, ...]:
    return tuple(str(x) for x in xs)


def from_symbolic(dec: SymbolicDecomposition) -> DecompositionDocument:
    terms = tuple(
        DocTerm(
            _strs(t.A),
            _strs(t.k),
            _strs(t.s),
            _strs(t.coeff.coeffs),
            tuple(format_tpoly(c) for c in t.form.coefficients()),
        )
        for t in dec.terms
    )
    return DecompositionDocument(
        SCHEMA_VERSION,
        _strs(dec.a),
        "reduced" if dec.reduced else "full",
        "t",
        _strs(dec.D.coeffs),
        terms,
    )


def from_rational(rdec: RationalDecomposition, dec: SymbolicDecomposition) -> DecompositionDocument:
    terms = []
    for t in rdec.terms:
        A, k, s = t.source if t.source is not None else ((), (), ())
        terms.append(DocTerm(_strs(A), _strs(k), _strs(s), str(t.lam), _strs(t.coeffs)))
    return DecompositionDocument(
        SCHEMA_VERSION,
        _strs(rdec.a),
        "reduced" if dec.reduced else "full",
        str(rdec.q),
        _strs(dec.D.coeffs),
        tuple(terms),
    )


def to_dict(doc: DecompositionDocument) -> dict[str, Any]:
    return {
        "schema_version": doc.schema_version,
        "exponents": list(doc.exponents),
        "mode": doc.mode,
        "parameter": doc.parameter,
        "D": list(doc.D),
        "terms": [
            {
                "A": list(t.A),
                "k": list(t.k),
                "s": list(t.s),
                "coefficient": t.coefficient if isinstance(t.coefficient, str) else list(t.coefficient),
                "linear_form": list(t.linear_form),
            }
            for t in doc.terms
        ],
    }


def emit(doc: DecompositionDocument) -> str:
    return json.dumps(to_dict(doc), indent=2) + "\n"


def _str_list(obj, name: str) -> tuple[str, ...]:
    if not isinstance(obj, list) or not all(isinstance(x, str) for x in obj):
        raise DocumentError(f"field {name!r} must be a list of strings")
    return tuple(obj)


def parse(text: str) -> DecompositionDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    try:
        terms = []
        for t in raw["terms"]:
            coeff = t["coefficient"]
            coeff = coeff if isinstance(coeff, str) else _str_list(coeff, "coefficient")
            terms.append(
                DocTerm(
                    _str_list(t["A"], "A"),
                    _str_list(t["k"], "k"),
                    _str_list(t["s"], "s"),
                    coeff,
                    _str_list(t["linear_form"], "linear_form"),
                )
            )
        doc = DecompositionDocument(
            str(raw["schema_version"]),
            _str_list(raw["exponents"], "exponents"),
            str(raw["mode"]),
            str(raw["parameter"]),
            _str_list(raw["D"], "D"),
            tuple(terms),
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"missing or malformed field: {exc}") from exc
    if doc.schema_version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema version {doc.schema_version}")
    if doc.mode not in ("reduced", "full"):
        raise DocumentError(f"unknown mode {doc.mode!r}")
    return doc


def to_symbolic(doc: DecompositionDocument) -> SymbolicDecomposition:
    """Rebuild the library object from a symbolic document."""
    if not doc.symbolic:
        raise DocumentError("document is specialized; no symbolic decomposition")
    a = tuple(int(x) for x in doc.exponents)
    terms = []
    for t in doc.terms:
        A = tuple(int(x) for x in t.A)
        k = tuple(int(x) for x in t.k)
        s = tuple(int(x) for x in t.s)
        support = tuple(i for i in range(len(a)) if i not in A)
        form = LinearForm(len(a), support, k, s)
        if tuple(format_tpoly(c) for c in form.coefficients()) != t.linear_form:
            raise DocumentError(f"linear form {t.linear_form} disagrees with (A, k, s)")
        terms.append(DecompTerm(A, k, s, form, TPoly(int(c) for c in t.coefficient)))
    return SymbolicDecomposition(a, doc.mode == "reduced", TPoly(int(c) for c in doc.D), tuple(terms))


def rational_terms(doc: DecompositionDocument) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    if doc.symbolic:
        raise DocumentError("document is symbolic")
    return [(Fraction(t.coefficient), tuple(Fraction(c) for c in t.linear_form)) for t in doc.terms]


# --------------------------------------------------------------------------
# text


def monomial_text(a) -> str:
    parts = [f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in enumerate(a) if e]
    return "*".join(parts) if parts else "1"


def _rational_form_text(coeffs) -> str:
    out = ""
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = abs(c)
        if mag == 1:
            body = ""
        elif mag.denominator == 1:
            body = str(mag)
        else:
            body = f"({mag})"
        out += f"{sign}{body}X{i}"
    return out or "0"


def render_text(doc: DecompositionDocument) -> str:
    a = tuple(int(x) for x in doc.exponents)
    d = sum(a)
    D = format_tpoly(TPoly(int(c) for c in doc.D))
    lines = [
        f"monomial: {monomial_text(a)}",
        f"mode: {doc.mode}",
        f"parameter: {doc.parameter}",
        f"terms: {len(doc.terms)}",
        f"D = {D}",
    ]
    if doc.symbolic:
        lines.append(f"D * {monomial_text(a)} =")
        for t in doc.terms:
            c = format_tpoly(TPoly(int(x) for x in t.coefficient))
            form = _symbolic_form_text(t.linear_form)
            lines.append(f"  + ({c})*({form})^{d}")
    else:
        lines.append(f"{monomial_text(a)} =")
        for t in doc.terms:
            lines.append(f"  + ({t.coefficient})*({_rational_form_text(t.linear_form)})^{d}")
    return "\n".join(lines) + "\n"


def _symbolic_form_text(coeffs: tuple[str, ...]) -> str:
    out = ""
    for i, c in enumerate(coeffs):
        if c == "0":
            continue
        neg = c.startswith("-")
        mag = c[1:] if neg else c
        body = "" if mag == "1" else mag
        sign = "-" if neg else ("+" if out else "")
        out += f"{sign}{body}X{i}"
    return out
