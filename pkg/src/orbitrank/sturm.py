"""Exact real-root counting for univariate rational polynomials.

Sturm's theorem on the canonical signed remainder sequence: for p with
p(a) != 0 and p(b) != 0 the number of distinct real roots in (a, b] is
V(a) - V(b), where V counts sign variations along the chain. The chain is
kept primitive (positive content divided out at every step) to control
coefficient growth without disturbing signs.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import UPoly, _frac, exact_div, poly_gcd, primitive_part, squarefree_part


def sturm_chain(p: UPoly) -> list[UPoly]:
    chain = [primitive_part(p)]
    d = p.derivative()
    if not d.is_zero():
        chain.append(primitive_part(d))
        while True:
            _, r = chain[-2].divmod(chain[-1])
            if r.is_zero():
                break
            chain.append(primitive_part(-r))
    return chain


def sign_variations(chain: list[UPoly], x) -> int:
    signs = []
    for q in chain:
        v = q.evaluate(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _strip_root(p: UPoly, r: Fraction) -> UPoly:
    """Divide out (x - r) while r is a root."""
    factor = UPoly((-r, 1))
    while not p.is_zero() and not p.evaluate(r):
        p = exact_div(p, factor)
    return p


def sturm_root_count(p: UPoly, a, b) -> int:
    """Number of distinct real roots of p strictly inside (a, b).

    Multiple roots count once. Roots at the endpoints are excluded. The zero
    polynomial is rejected (infinitely many roots).
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    a, b = _frac(a), _frac(b)
    if a >= b:
        return 0
    q = squarefree_part(p)
    q = _strip_root(q, a)
    q = _strip_root(q, b)
    if q.degree() <= 0:
        return 0
    chain = sturm_chain(q)
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_root_bound(p: UPoly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lead = abs(p.leading())
    rest = [abs(c) for c in p.coeffs[:-1]]
    return 2 + (max(rest) / lead if rest else Fraction(0))


def count_real_roots(p: UPoly) -> int:
    """Number of distinct real roots of p over all of R."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree() == 0:
        return 0
    bound = cauchy_root_bound(p)
    return sturm_root_count(p, -bound, bound)


__all__ = [
    "sturm_chain",
    "sign_variations",
    "sturm_root_count",
    "cauchy_root_bound",
    "count_real_roots",
    "poly_gcd",
    "squarefree_part",
]
