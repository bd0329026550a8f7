"""Command line interface.

Exit codes: 0 ok, 1 malformed input, 2 degenerate parameter or regularity
failure, 3 verification mismatch, 4 degenerate geometry.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import document
from .errors import DegenerateInputError, DegenerateParameterError, DegenerateSimplexError, PreconditionError, RegularityError
from .forms import F_count, K_count
from .monomial import decompose, specialize
from .simplex import Simplex, integrate_poly
from .sparse import SparsePoly
from .verify import sweep, sweep_vectors, verify_specialized, verify_symbolic

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DEGENERATE = 2
EXIT_MISMATCH = 3
EXIT_GEOMETRY = 4

TABLE_PAIRS = ((2, 10), (2, 50), (2, 100), (3, 10), (3, 50), (3, 100), (5, 30), (5, 50), (5, 100))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _monomial(text: str) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if any(x < 0 for x in a):
        raise argparse.ArgumentTypeError("exponents must be nonnegative")
    return a


def _parameter(text: str):
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"parameter must be 'symbolic' or a rational number, got {text!r}")


def _sweep_spec(text: str) -> dict[str, int]:
    out = {"n": 2, "amax": 3, "amin": 0}
    try:
        for part in text.split(","):
            key, _, val = part.partition("=")
            if key not in out:
                raise ValueError(key)
            out[key] = int(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"sweep spec must look like n=3,amax=4[,amin=0], got {text!r}")
    return out


def _pairs(text: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(x) for x in p.split(":")) for p in text.split(",")]  # type: ignore[misc]
    except ValueError:
        raise argparse.ArgumentTypeError(f"pairs must look like 2:10,3:50, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="waring", description="Explicit Waring decompositions of monomials and forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", help="decompose a monomial")
    d.add_argument("--monomial", type=_monomial, required=True, help="exponents a0,...,an")
    d.add_argument("--mode", choices=("reduced", "full"), default="reduced")
    d.add_argument("--t", dest="t", type=_parameter, default=None, help="'symbolic' (default) or a rational value")
    d.add_argument("--format", choices=("json", "text"), default="text")

    v = sub.add_parser("verify", help="verify decompositions by full expansion")
    target = v.add_mutually_exclusive_group(required=True)
    target.add_argument("--monomial", type=_monomial)
    target.add_argument("--sweep", type=_sweep_spec, help="n=N,amax=M[,amin=K]: all vectors with up to N+1 entries")
    v.add_argument("--mode", choices=("reduced", "full", "both"), default="reduced")
    v.add_argument("--t", dest="t", type=_parameter, default=None)
    v.add_argument("--parallel", action="store_true", help="spread a sweep over worker processes")

    c = sub.add_parser("count", help="summand counts F(n,D) and K(n,D)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--D", type=int, required=True)
    c.add_argument("--format", choices=("text", "csv", "json"), default="text")

    t = sub.add_parser("table", help="F and K for several (n, D) pairs")
    t.add_argument("--pairs", type=_pairs, default=list(TABLE_PAIRS))
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")

    i = sub.add_parser("integrate", help="integrate a polynomial over a simplex")
    i.add_argument("--poly", required=True, help="JSON file: list of {coeff, exponents}")
    i.add_argument("--simplex", required=True, help="JSON file: list of vertex coordinate lists")
    i.add_argument("--format", choices=("json", "text"), default="text")
    return p


def _modes(mode: str) -> tuple[bool, ...]:
    return {"reduced": (True,), "full": (False,), "both": (True, False)}[mode]


def cmd_decompose(args, out) -> int:
    dec = decompose(args.monomial, args.mode == "reduced")
    if args.t is None:
        doc = document.from_symbolic(dec)
    else:
        doc = document.from_rational(specialize(dec, args.t), dec)
    out.write(document.emit(doc) if args.format == "json" else document.render_text(doc))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.sweep is not None:
        spec = args.sweep
        vecs = list(sweep_vectors(spec["n"] + 1, spec["amax"], spec["amin"]))
        rows = sweep(vecs, _modes(args.mode), parallel=args.parallel)
        bad = [r for r in rows if not r[2]]
        if bad:
            for a, reduced, _, _ in bad:
                out.write(f"MISMATCH a={a} mode={'reduced' if reduced else 'full'}\n")
            return EXIT_MISMATCH
        out.write(f"OK: {len(rows)} identities checked\n")
        return EXIT_OK
    status = EXIT_OK
    for reduced in _modes(args.mode):
        dec = decompose(args.monomial, reduced)
        label = "reduced" if reduced else "full"
        if args.t is None:
            rep = verify_symbolic(dec)
        else:
            rep = verify_specialized(specialize(dec, args.t))
        if rep.ok:
            out.write(f"OK a={args.monomial} mode={label} terms={len(dec)}\n")
        else:
            out.write(f"{rep.describe()} a={args.monomial} mode={label}\n")
            status = EXIT_MISMATCH
    return status


def _count_rows(pairs) -> list[tuple[int, int, int, int]]:
    rows = []
    for n, D in pairs:
        if n < 0 or D < 1:
            raise UsageError(f"need n >= 0 and D >= 1, got n={n}, D={D}")
        rows.append((n, D, F_count(n, D), K_count(n, D)))
    return rows


def _write_counts(rows, fmt: str, out, single: bool) -> None:
    if fmt == "csv":
        out.write("n,D,F,K\n")
        for r in rows:
            out.write(",".join(str(x) for x in r) + "\n")
    elif fmt == "json":
        data = [{"n": str(n), "D": str(D), "F": str(F), "K": str(K)} for n, D, F, K in rows]
        out.write(json.dumps(data[0] if single else data, indent=2) + "\n")
    elif single:
        n, D, F, K = rows[0]
        out.write(f"F={F} K={K}\n")
    else:
        out.write(f"{'(n,D)':>10} {'F(n,D)':>14} {'K(n,D)':>14}\n")
        for n, D, F, K in rows:
            out.write(f"{f'({n},{D})':>10} {F:>14} {K:>14}\n")


def cmd_count(args, out) -> int:
    _write_counts(_count_rows([(args.n, args.D)]), args.format, out, single=True)
    return EXIT_OK


def cmd_table(args, out) -> int:
    _write_counts(_count_rows(args.pairs), args.format, out, single=False)
    return EXIT_OK


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def load_poly(raw) -> SparsePoly:
    if not isinstance(raw, list) or not raw:
        raise UsageError("polynomial file must be a nonempty list of {coeff, exponents}")
    try:
        terms = [(tuple(int(e) for e in t["exponents"]), Fraction(str(t["coeff"]))) for t in raw]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed polynomial term: {exc}")
    nvars = len(terms[0][0])
    if any(len(e) != nvars for e, _ in terms):
        raise UsageError("exponent lists have different lengths")
    if any(x < 0 for e, _ in terms for x in e):
        raise UsageError("negative exponent")
    return SparsePoly(nvars, terms)


def load_simplex_vertices(raw) -> list[list[Fraction]]:
    if not isinstance(raw, list) or not all(isinstance(v, list) for v in raw):
        raise UsageError("simplex file must be a list of vertex coordinate lists")
    try:
        return [[Fraction(str(x)) for x in v] for v in raw]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed vertex coordinate: {exc}")


def cmd_integrate(args, out) -> int:
    p = load_poly(_load_json(args.poly))
    verts = load_simplex_vertices(_load_json(args.simplex))
    simplex = Simplex(verts)
    if p.nvars != simplex.dim:
        raise UsageError(f"polynomial has {p.nvars} variables but the simplex lives in dimension {simplex.dim}")
    res = integrate_poly(p, simplex)
    q = None if res.q is None else str(res.q)
    if args.format == "json":
        data = {
            "value": str(res.value),
            "parameter": q,
            "transform": None if res.transform is None else [[str(x) for x in row] for row in res.transform],
        }
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(f"{res.value}\n")
        out.write(f"t = {q if q is not None else 'unused'}\n")
        if res.transform is not None:
            out.write("shear = " + "; ".join(" ".join(str(x) for x in row) for row in res.transform) + "\n")
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "count": cmd_count,
    "table": cmd_table,
    "integrate": cmd_integrate,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except DegenerateParameterError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DEGENERATE
    except RegularityError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DEGENERATE
    except DegenerateSimplexError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GEOMETRY
    except (UsageError, DegenerateInputError, PreconditionError, document.DocumentError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
