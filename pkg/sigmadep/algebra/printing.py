"""
Canonical text form of scalars, polynomials, rational functions and operators.

The output is always accepted by the expression parser of ``sigmadep.cli``:
``^`` for powers, ``p/q`` for rationals, monomials in descending degree, negative
coefficients pulled out as subtraction.
"""
from typing import Sequence

import sympy
from sympy import Poly, QQ, Rational, ilcm

from sigmadep.algebra.fields import BaseField
from sigmadep.algebra.polys import coeffs


def format_rational(value) -> str:
    value = Rational(value)
    return str(value.p) if value.q == 1 else f"{value.p}/{value.q}"


def _is_atom(text: str) -> bool:
    return " " not in text


def _term(coef: str, mono: str) -> tuple[bool, str]:
    """Splits a coefficient text times a monomial into (negative, body)."""
    negative = coef.startswith("-") and _is_atom(coef)
    bare = coef[1:] if negative else coef
    if not mono:
        return negative, bare if _is_atom(bare) else f"({bare})"
    if bare == "1":
        return negative, mono
    if _is_atom(bare):
        return negative, f"{bare}*{mono}"
    return False, f"({coef})*{mono}"


def _join(terms: Sequence[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    negative, body = terms[0]
    parts = [f"-{body}" if negative else body]
    for negative, body in terms[1:]:
        parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _fraction(num: str, den: str) -> str:
    if den == "1":
        return num
    if not _is_atom(num):
        num = f"({num})"
    if not _is_atom(den) or "*" in den or "/" in den:
        den = f"({den})"
    return f"{num}/{den}"


def format_dense(values: Sequence, var: str, text=format_rational) -> str:
    """Formats coefficients (highest degree first) as a polynomial in ``var``."""
    degree = len(values) - 1
    terms = [_term(text(c), _power(var, degree - i)) for i, c in enumerate(values) if c]
    return _join(terms)


def format_scalar(element, field: BaseField) -> str:
    """Formats an element of the coefficient domain (Q, Q(q), Q(t) or Q(s))."""
    if field.domain == QQ:
        return format_rational(field.to_sympy(element))
    sym = field.symbol
    num, den = sympy.fraction(sympy.together(field.to_sympy(element)))
    num, den = Poly(num, sym, domain=QQ), Poly(den, sym, domain=QQ)
    lc = den.LC()
    num, den = num.quo_ground(lc), den.monic()
    name = str(sym)
    return _fraction(format_dense(num.all_coeffs(), name), format_dense(den.all_coeffs(), name))


def format_poly(p: Poly, field: BaseField) -> str:
    """Formats a polynomial in x with coefficients in the field's domain."""
    name = str(p.gen)
    if field.domain == QQ:
        return format_dense([QQ.to_sympy(c) for c in coeffs(p)], name)
    return format_dense(coeffs(p), name, text=lambda c: format_scalar(c, field))


def format_ratfunc(f) -> str:
    """
    num/den with the denominators of a rational numerator moved below the bar,
    e.g. -1/(2*x^2) rather than -1/2/x^2. Polynomials keep their rational coefficients.
    """
    num, den = f.num, f.den
    den_text = format_poly(den, f.field)
    if f.field.domain != QQ or den_text == "1":
        return _fraction(format_poly(num, f.field), den_text)
    k = ilcm(1, *(QQ.to_sympy(c).q for c in coeffs(num)))
    if k == 1:
        return _fraction(format_poly(num, f.field), den_text)
    if not _is_atom(den_text):
        den_text = f"({den_text})"
    return _fraction(format_poly(num.mul_ground(k), f.field), f"{k}*{den_text}")


def format_operator(coefficients: Sequence[str], letter: str) -> str:
    """
    Formats sum_i c_i * letter^i from coefficient texts c_0..c_n, highest power first.

    Zero coefficients ("0") are skipped.
    """
    terms = [
        _term(coef, _power(letter, i))
        for i, coef in reversed(list(enumerate(coefficients)))
        if coef != "0"
    ]
    return _join(terms)
