"""Command-line front end.

Exit codes: 0 when everything passed, 1 when a check failed, 2 on usage,
parse or singular-weight errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .contact import lagrange_bracket, sl_generators, sp_generators
from .decomposition import SingularWeightError, decompose, projector_p, singular_set
from .exactpoly import DimensionError, DomainError
from .suites import DEFAULT_DELTAS, SUITES, SuiteConfig, run_suite
from .symbolfile import SymbolParseError, parse_rational, parse_symbols, serialize_symbols
from .symbols import R_GRADING, GradingError, Symbol, to_R_grading

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except SymbolParseError as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("n must be >= 1")
    return values


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_R(u: Symbol) -> Symbol:
    return u if u.grading == R_GRADING else to_R_grading(u)


# -- subcommands -------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        n_list=args.n or (1, 2),
        k_max=args.k if args.k is not None else 4,
        deltas=tuple(args.delta) if args.delta else DEFAULT_DELTAS,
        base_deg=args.base_deg,
        trials=args.trials,
        seed=args.seed,
        suites=tuple(args.suite or ()),
        jobs=args.jobs,
    )
    report = run_suite(cfg)
    if not args.quiet:
        for c in report.checks:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            print(f"{c.status.upper():4} {c.id} [{params}] {c.detail}")
            if c.counterexample:
                print("     counterexample:\n" + "".join(
                    f"       {line}\n" for line in c.counterexample.splitlines()), end="")
    s = report.summary()
    print(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
    if args.out:
        _emit(report.to_json(timing=not args.no_timing) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    chunks = []
    for j, (label, u) in enumerate(parse_symbols(_read(args.file), with_labels=True)):
        u = _as_R(u)
        d = decompose(u)
        name = label or f"input{j}"
        chunks += [(f"{name}.u{l}", comp) for l, comp in d.components]
    _emit(serialize_symbols(chunks), args.out)
    return EXIT_OK


def cmd_projector(args) -> int:
    chunks = []
    for j, (label, u) in enumerate(parse_symbols(_read(args.file), with_labels=True)):
        u = _as_R(u)
        k = args.k if args.k is not None else max(u.degree(), 0)
        chunks.append((f"p{k}({label or f'input{j}'})", projector_p(k, u.n, u.weight)(u)))
    _emit(serialize_symbols(chunks), args.out)
    return EXIT_OK


def cmd_generators(args) -> int:
    chunks = []
    for n in args.n or (1,):
        basis = sp_generators(n) if args.algebra == "sp" else sl_generators(n)
        chunks += [(label, Z.to_symbol()) for Z, label in zip(basis, basis.labels)]
    _emit(serialize_symbols(chunks), args.out)
    return EXIT_OK


def cmd_bracket(args) -> int:
    (f,) = parse_symbols(_read(args.f))
    (g,) = parse_symbols(_read(args.g))
    for u in (f, g):
        if u.grading != "S" or u.degree() > 0:
            raise UsageError("bracket expects S-graded densities (fiber degree 0)")
    out, weight = lagrange_bracket(f.poly, f.weight, g.poly, g.weight)
    _emit(serialize_symbols([("bracket", Symbol(out, weight, "S"))]), args.out)
    return EXIT_OK


def cmd_singular(args) -> int:
    lines = []
    for n in args.n or (1,):
        for k in ([args.k] if args.k is not None else range(1, 5)):
            if k < 1:
                raise UsageError("singular sets are indexed by k >= 1")
            values = ", ".join(str(d) for d in sorted(singular_set(k, n)))
            lines.append(f"n={n} k={k} I_k = {{{values}}}\n")
    _emit("".join(lines), args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="contactsym",
                                 description="Exact contact-geometry symbol calculus")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *, n=True, k=True, out=True):
        if n:
            p.add_argument("--n", type=_int_list, help="comma-separated dimensions n")
        if k:
            p.add_argument("--k", type=int, help="fiber degree (max degree for verify)")
        if out:
            p.add_argument("--out", help="write output here instead of stdout")

    v = sub.add_parser("verify", help="run the verification suites")
    common(v)
    v.add_argument("--delta", type=_rational, action="append", help="panel weight (repeatable)")
    v.add_argument("--base-deg", type=int, default=3)
    v.add_argument("--trials", type=int, default=25)
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--suite", action="append", choices=SUITES, help="restrict to a suite (repeatable)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--no-timing", action="store_true", help="omit timings from the JSON report")
    v.add_argument("--quiet", action="store_true", help="only print the summary line")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="decompose the symbols in a file")
    d.add_argument("file", help="symbol file ('-' for stdin)")
    common(d, n=False, k=False)
    d.set_defaults(func=cmd_decompose)

    p = sub.add_parser("projector", help="apply p_k to the symbols in a file")
    p.add_argument("file", help="symbol file ('-' for stdin)")
    common(p, n=False)
    p.set_defaults(func=cmd_projector)

    g = sub.add_parser("generators", help="emit sp or sl generators as vector-field symbols")
    common(g, k=False)
    g.add_argument("--algebra", choices=("sp", "sl"), default="sp")
    g.set_defaults(func=cmd_generators)

    b = sub.add_parser("bracket", help="Lagrange bracket of two density files")
    b.add_argument("f")
    b.add_argument("g")
    common(b, n=False, k=False)
    b.set_defaults(func=cmd_bracket)

    s = sub.add_parser("singular", help="print the singular weight sets I_k")
    common(s)
    s.set_defaults(func=cmd_singular)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if getattr(args, "base_deg", 0) < 0 or getattr(args, "trials", 1) < 0 \
                or (args.command == "verify" and args.k is not None and args.k < 0):
            raise UsageError("--k, --base-deg and --trials must be non-negative")
        return args.func(args)
    except (UsageError, SymbolParseError, SingularWeightError, GradingError,
            DimensionError, DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
