"""Plain-text symbol files.

Grammar (one item per line, ``#`` starts a comment, blank lines ignored)::

    document  := symbol ( "---" symbol )*
    symbol    := header* "terms:" term*
    header    := key "=" value          key in {n, grading, delta, label}
    term      := rational ":" int{2(2n+1)}
    rational  := ["-"] digits [ "/" digits ]

``n`` is required and must precede ``terms:``; ``grading`` is ``S`` or
``R`` (default ``S``); ``delta`` is the density weight (default 0).
Exponents are listed in the order q^1..q^n, p^1..p^n, t, xi_q^1..xi_q^n,
xi_p^1..xi_p^n, xi_t.  Terms are written in graded-lex order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactpoly import Poly, num_vars
from .symbols import Symbol

__all__ = [
    "SymbolParseError",
    "parse_rational",
    "parse_symbol",
    "parse_symbols",
    "serialize_symbol",
    "serialize_symbols",
]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class SymbolParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def parse_rational(text: str, line: int = 0, column: int = 0) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise SymbolParseError(f"malformed rational {text!r}", line, column)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise SymbolParseError("zero denominator", line, column)
    return Fraction(text)


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_symbol(u: Symbol, label: str | None = None) -> str:
    lines = [f"n = {u.n}", f"grading = {u.grading}", f"delta = {_format_rational(u.weight)}"]
    if label:
        lines.append(f"label = {label}")
    lines.append("terms:")
    for exps, c in u.poly.items():
        lines.append(f"  {_format_rational(c)} : {' '.join(str(e) for e in exps)}")
    return "\n".join(lines) + "\n"


def serialize_symbols(items) -> str:
    """``items`` is a sequence of symbols or ``(label, symbol)`` pairs."""
    chunks = []
    for it in items:
        if isinstance(it, Symbol):
            chunks.append(serialize_symbol(it))
        else:
            label, u = it
            chunks.append(serialize_symbol(u, label))
    return "---\n".join(chunks)


def _parse_one(lines: list[tuple[int, str]]) -> tuple[Symbol, str | None]:
    header: dict[str, tuple[str, int, int]] = {}
    terms: dict[tuple[int, ...], Fraction] = {}
    in_terms = False
    n = None
    last_line = 0
    for lineno, raw in lines:
        last_line = lineno
        text = raw.split("#", 1)[0].rstrip()
        if not text.strip():
            continue
        indent = len(text) - len(text.lstrip())
        stripped = text.strip()
        if not in_terms:
            if stripped == "terms:":
                if "n" not in header:
                    raise SymbolParseError("'n' must be given before 'terms:'", lineno, indent + 1)
                value, vl, vc = header["n"]
                if not re.fullmatch(r"\d+", value) or int(value) < 1:
                    raise SymbolParseError(f"n must be a positive integer, got {value!r}", vl, vc)
                n = int(value)
                in_terms = True
                continue
            if "=" not in stripped:
                raise SymbolParseError(f"expected 'key = value', got {stripped!r}", lineno, indent + 1)
            key, value = stripped.split("=", 1)
            key = key.strip()
            if key not in ("n", "grading", "delta", "label"):
                raise SymbolParseError(f"unknown key {key!r}", lineno, indent + 1)
            if key in header:
                raise SymbolParseError(f"duplicate key {key!r}", lineno, indent + 1)
            vcol = text.index("=") + 2 + (len(value) - len(value.lstrip()))
            header[key] = (value.strip(), lineno, vcol)
            continue
        if ":" not in stripped:
            raise SymbolParseError("expected 'coefficient : exponents'", lineno, indent + 1)
        coeff_txt, exps_txt = stripped.split(":", 1)
        coeff = parse_rational(coeff_txt, lineno, indent + 1)
        colon = text.index(":")
        ecol = colon + 2 + (len(exps_txt) - len(exps_txt.lstrip()))
        fields = exps_txt.split()
        if len(fields) != num_vars(n):
            raise SymbolParseError(
                f"exponent vector has length {len(fields)}, expected {num_vars(n)}", lineno, ecol)
        exps = []
        for f in fields:
            if not f.isdigit():
                raise SymbolParseError(f"bad exponent {f!r}", lineno, text.index(f, colon) + 1)
            exps.append(int(f))
        key = tuple(exps)
        v = terms.get(key, 0) + coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    if not in_terms:
        raise SymbolParseError("missing 'terms:' section", last_line + 1, 1)
    grading = "S"
    if "grading" in header:
        grading, gl, gc = header["grading"]
        if grading not in ("S", "R"):
            raise SymbolParseError(f"unknown grading tag {grading!r}", gl, gc)
    delta = Fraction(0)
    if "delta" in header:
        dv, dl, dc = header["delta"]
        delta = parse_rational(dv, dl, dc)
    label = header["label"][0] if "label" in header else None
    return Symbol(Poly(n, terms), delta, grading), label


def _split_documents(text: str) -> list[list[tuple[int, str]]]:
    docs: list[list[tuple[int, str]]] = [[]]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() == "---":
            docs.append([])
        else:
            docs[-1].append((lineno, line))
    return docs


def parse_symbols(text: str, *, with_labels: bool = False) -> list:
    out = []
    for doc in _split_documents(text):
        u, label = _parse_one(doc)
        out.append((label, u) if with_labels else u)
    return out


def parse_symbol(text: str) -> Symbol:
    docs = _split_documents(text)
    if len(docs) != 1:
        raise SymbolParseError(f"expected a single symbol, found {len(docs)}", 1, 1)
    return _parse_one(docs[0])[0]
