"""
KBlowup Poly - Parsing and Canonical Formatting

Grammar: integers, rationals, variables, + - * ^ and parentheses.
`format_polynomial` writes the same grammar back, so output re-parses.
"""
import re
from typing import Sequence

from sympy import QQ, Integer, Rational, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.rings import PolyElement, PolyRing

from kblowup.core.exceptions import ParseError
from kblowup.poly.ring import Ideal, polynomial_ring, variable_names

_ALLOWED = re.compile(r"^[0-9A-Za-z_+\-*/^()\s]*$")
_TRANSFORMS = standard_transformations + (convert_xor,)
# The only names parsed text can reach; no builtins.
_GLOBALS = {"Integer": Integer, "Rational": Rational, "Symbol": Symbol}


def parse_variables(text: str) -> tuple[str, ...]:
    """Parse a comma-separated variable list such as "x,y,z"."""
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    if not names:
        raise ParseError(f"empty variable list: {text!r}")
    for name in names:
        if not re.match(r"^[A-Za-z][A-Za-z0-9_]*$", name):
            raise ParseError(f"invalid variable name {name!r}")
    return names


def parse_polynomial(text: str, ring: PolyRing) -> PolyElement:
    """
    Parse polynomial text into an element of `ring`.

    Raises:
        ParseError: on characters outside the grammar, unknown variables,
            negative powers, division by non-constants or empty input
    """
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    if not _ALLOWED.match(text):
        raise ParseError(f"unexpected character in {text!r}")
    names = variable_names(ring)
    local = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            global_dict={**_GLOBALS, "__builtins__": {}},
            transformations=_TRANSFORMS,
            evaluate=True,
        )
    except Exception as exc:
        raise ParseError(f"cannot parse {text!r}: {exc}") from exc

    unknown = {str(s) for s in getattr(expr, "free_symbols", set())} - set(names)
    if unknown:
        raise ParseError(f"unknown variables {sorted(unknown)} in {text!r}")
    try:
        return ring.from_expr(expr)
    except Exception as exc:
        raise ParseError(f"{text!r} is not a polynomial over QQ in {names}") from exc


def parse_ideal(texts: Sequence[str], names: Sequence[str]) -> Ideal:
    ring = polynomial_ring(names)
    return Ideal(ring, tuple(parse_polynomial(t, ring) for t in texts))


def split_generators(text: str) -> list[str]:
    """Split "f1, f2" at top-level commas."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def _format_coefficient(c) -> str:
    num, den = QQ.numer(c), QQ.denom(c)
    return f"{num}" if den == 1 else f"{num}/{den}"


def format_monomial(monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, monomial):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(f: PolyElement) -> str:
    """Canonical text: terms in ring-order descending, `^` for powers."""
    if not f:
        return "0"
    names = variable_names(f.ring)
    pieces = []
    for monom, coeff in f.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono = format_monomial(monom, names)
        if not mono:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{_format_coefficient(magnitude)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
