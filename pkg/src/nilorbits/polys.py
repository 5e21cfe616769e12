"""Sparse multivariate polynomials with integer coefficients.

Just enough arithmetic for fraction-free elimination over Q(T_1, ..., T_m):
addition, multiplication and exact division.  A polynomial is a dict mapping
exponent tuples to nonzero ints; monomials are compared lexicographically.
"""

from __future__ import annotations

from typing import Dict, Tuple

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, int]


class PolynomialBudgetExceeded(ArithmeticError):
    """Raised when an intermediate polynomial grows past the term budget."""


def const(c: int, nvars: int) -> Poly:
    return {(0,) * nvars: c} if c else {}


def add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def sub(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def mul(a: Poly, b: Poly, budget: int | None = None) -> Poly:
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                del out[m]
        if budget is not None and len(out) > budget:
            raise PolynomialBudgetExceeded(f"product exceeds {budget} terms")
    return out


def exact_div(a: Poly, b: Poly, budget: int | None = None) -> Poly:
    """Return q with a == q*b; raise ArithmeticError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lm_b = max(b)
    lc_b = b[lm_b]
    rem = dict(a)
    q: Poly = {}
    while rem:
        lm = max(rem)
        lc = rem[lm]
        e = tuple(x - y for x, y in zip(lm, lm_b))
        if min(e) < 0 or lc % lc_b:
            raise ArithmeticError("division is not exact")
        c = lc // lc_b
        q[e] = c
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(e, mb))
            s = rem.get(m, 0) - c * cb
            if s:
                rem[m] = s
            else:
                del rem[m]
        if budget is not None and len(q) > budget:
            raise PolynomialBudgetExceeded(f"quotient exceeds {budget} terms")
    return q


def evaluate(a: Poly, point) -> object:
    total = 0
    for m, c in a.items():
        t = c
        for x, e in zip(point, m):
            if e:
                t = t * x**e
        total += t
    return total
