"""
Exact sparse polynomials over the rationals.

Polynomials are sympy ``PolyElement`` objects living in rings built here with
domain QQ and graded-lexicographic order. Rings are cached by variable names so
that every module shares the same ring objects. The helpers below add the
checks and the textual formats (``x0^2*x1``, ``y_110``) used across the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from decabracket.config import PLANE_DIMENSION, SECTION_DEGREE
from decabracket.polynomials.multidegree import MultiIndex, delta_set

Polynomial = PolyElement
RationalLike = Union[int, Fraction, str]

_MONOMIAL_FACTOR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")
_TRIPLE = re.compile(r"^\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)?$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_POLYNOMIAL_CHARACTERS = re.compile(r"[0-9A-Za-z_ \t+\-*/^().]*")
_IDENTIFIER = re.compile(r"[A-Za-z_][0-9A-Za-z_]*")


class RingMismatchError(ValueError):
    """Raised when polynomial operands live in different rings."""


@lru_cache(maxsize=None)
def variable_ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(list(names), QQ, grlex)


def x_ring(n: int = PLANE_DIMENSION) -> PolyRing:
    """Ring QQ[x0, ..., xn] of the projective space P^n."""
    return variable_ring(tuple(f"x{i}" for i in range(n + 1)))


def coordinate_labels() -> List[MultiIndex]:
    """Delta(2) in the fixed coordinate order of P^5."""
    return delta_set(SECTION_DEGREE)


def coordinate_names(prefix: str = "y") -> Tuple[str, ...]:
    return tuple(f"{prefix}_{label.label}" for label in coordinate_labels())


def coordinate_ring() -> PolyRing:
    """Ring QQ[y_200, ..., y_002] of the six ambient coordinates."""
    return variable_ring(coordinate_names())


def chart_ring(chart: int) -> PolyRing:
    """Ring of the affine chart {y_chart != 0}: the five ratios u_i = y_i / y_chart."""
    names = coordinate_names("u")
    if not 0 <= chart < len(names):
        raise ValueError(f"chart index must be in 0..{len(names) - 1}, got {chart}")
    return variable_ring(tuple(name for i, name in enumerate(names) if i != chart))


def to_rational(value: RationalLike):
    """Convert an int, Fraction, string like '3/2' or QQ element to QQ."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            fraction = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational number: {value!r}") from e
        return QQ(fraction.numerator, fraction.denominator)
    try:
        return QQ.convert(value)
    except Exception as e:
        raise ValueError(f"not a rational number: {value!r}") from e


def as_fraction(value) -> Fraction:
    value = to_rational(value)
    return Fraction(int(value.numerator), int(value.denominator))


def format_rational(value) -> str:
    fraction = as_fraction(value)
    if fraction.denominator == 1:
        return str(fraction.numerator)
    return f"{fraction.numerator}/{fraction.denominator}"


def monomial(ring: PolyRing, exponent: Union[MultiIndex, Sequence[int]], coeff: RationalLike = 1) -> Polynomial:
    exponent = tuple(exponent)
    if len(exponent) != ring.ngens:
        raise RingMismatchError(
            f"exponent {exponent} has {len(exponent)} entries, ring has {ring.ngens} variables"
        )
    if any(value < 0 for value in exponent):
        raise ValueError(f"polynomial exponents must be nonnegative, got {exponent}")
    return ring.from_dict({exponent: to_rational(coeff)})


def _check_same_ring(p: Polynomial, q: Polynomial) -> None:
    if p.ring != q.ring:
        raise RingMismatchError(
            f"polynomials live in different rings: {p.ring.ngens} vs {q.ring.ngens} variables "
            f"({', '.join(map(str, p.ring.symbols))} / {', '.join(map(str, q.ring.symbols))})"
        )


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p - q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p * q


def poly_scale(p: Polynomial, s: RationalLike) -> Polynomial:
    return p * to_rational(s)


def poly_sum(ring: PolyRing, polys: Iterable[Polynomial]) -> Polynomial:
    total = ring.zero
    for p in polys:
        total = poly_add(total, p)
    return total


def total_degrees(p: Polynomial) -> set:
    return {sum(monom) for monom in p.keys()}


def is_homogeneous(p: Polynomial, degree: Optional[int] = None) -> bool:
    """True for the zero polynomial and for polynomials with a single total degree."""
    degrees = total_degrees(p)
    if not degrees:
        return True
    if len(degrees) > 1:
        return False
    return degree is None or degrees == {degree}


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def render(p: Polynomial) -> str:
    """Render as e.g. '-2*y_110*y_002 + 3/2*y_101^2'; terms in graded-lex order."""
    names = [str(symbol) for symbol in p.ring.symbols]
    pieces = []
    for monom, coeff in p.terms():
        factors = [_power(names[i], e) for i, e in enumerate(monom) if e]
        body = "*".join(factors)
        fraction = as_fraction(coeff)
        if not body:
            piece = format_rational(fraction)
        elif fraction == 1:
            piece = body
        elif fraction == -1:
            piece = "-" + body
        else:
            piece = f"{format_rational(fraction)}*{body}"
        pieces.append(piece)
    if not pieces:
        return "0"
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def _latex_name(name: str) -> str:
    if "_" in name:
        base, sub = name.split("_", 1)
        return f"{base}_{{{sub}}}"
    match = re.match(r"^([A-Za-z]+)(\d+)$", name)
    if match:
        return f"{match.group(1)}_{{{match.group(2)}}}"
    return name


def render_latex(p: Polynomial) -> str:
    names = [_latex_name(str(symbol)) for symbol in p.ring.symbols]
    pieces = []
    for monom, coeff in p.terms():
        body = " ".join(
            name if e == 1 else f"{name}^{{{e}}}" for name, e in zip(names, monom) if e
        )
        fraction = as_fraction(coeff)
        sign = "-" if fraction < 0 else "+"
        magnitude = abs(fraction)
        if magnitude.denominator != 1:
            scalar = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
        elif magnitude != 1 or not body:
            scalar = str(magnitude.numerator)
        else:
            scalar = ""
        pieces.append((sign, " ".join(part for part in (scalar, body) if part)))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """
    Parse a polynomial such as 'x0^3 + x1^3 + x2^3' or '1/2*x0*x1*x2'.

    Raises:
        ValueError: if the text is malformed or uses names outside the ring
    """
    local_names = {str(symbol): symbol for symbol in ring.symbols}
    # only ring variables, numbers and arithmetic reach parse_expr, which evaluates its input
    if not _POLYNOMIAL_CHARACTERS.fullmatch(text):
        raise ValueError(f"polynomial {text!r} contains characters other than digits, variables and + - * / ^ ( )")
    unknown = set(_IDENTIFIER.findall(text)) - set(local_names)
    if unknown:
        raise ValueError(
            f"polynomial {text!r} uses unknown variables {sorted(unknown)}; expected {sorted(local_names)}"
        )
    try:
        expr = parse_expr(text, local_dict=local_names, transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise ValueError(f"cannot parse polynomial {text!r}: {e}") from e
    stray = {str(symbol) for symbol in getattr(expr, "free_symbols", set())} - set(local_names)
    if stray:
        raise ValueError(
            f"polynomial {text!r} uses unknown variables {sorted(stray)}; expected {sorted(local_names)}"
        )
    try:
        return ring.from_expr(expr)
    except ValueError as e:
        raise ValueError(f"{text!r} is not a polynomial in {', '.join(local_names)}") from e


def parse_multi_index(text: str, length: int = PLANE_DIMENSION + 1) -> MultiIndex:
    """
    Parse an exponent vector given as '2,0,0', '(2,0,0)' or a monomial 'x0^2*x1'.

    Negative exponents are allowed in both forms ('-2,-2,-1', 'x0^-2*x1^-2*x2^-1').
    """
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty exponent vector")
    if cleaned == "1" and length > 1:
        return MultiIndex.zero(length)
    triple = _TRIPLE.match(cleaned)
    if triple:
        values = [int(part) for part in triple.group(1).split(",")]
        if len(values) != length:
            raise ValueError(f"{text!r} has {len(values)} entries, expected {length}")
        return MultiIndex(tuple(values))
    entries = [0] * length
    for factor in cleaned.replace(" ", "").split("*"):
        match = _MONOMIAL_FACTOR.match(factor)
        if not match:
            raise ValueError(f"malformed monomial {text!r}: cannot read factor {factor!r}")
        position = int(match.group(1))
        if position >= length:
            raise ValueError(f"malformed monomial {text!r}: x{position} is not one of x0..x{length - 1}")
        entries[position] += int(match.group(2)) if match.group(2) is not None else 1
    return MultiIndex(tuple(entries))


def format_monomial(exponent: MultiIndex, prefix: str = "x") -> str:
    factors = [_power(f"{prefix}{i}", e) for i, e in enumerate(exponent) if e]
    return "*".join(factors) if factors else "1"


__all__ = [
    "Polynomial",
    "RingMismatchError",
    "as_fraction",
    "chart_ring",
    "coordinate_labels",
    "coordinate_names",
    "coordinate_ring",
    "format_monomial",
    "format_rational",
    "is_homogeneous",
    "monomial",
    "parse_multi_index",
    "parse_polynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_sub",
    "poly_sum",
    "render",
    "render_latex",
    "to_rational",
    "total_degrees",
    "variable_ring",
    "x_ring",
]
