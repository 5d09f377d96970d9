"""Independent oracles and random generators shared by the tests.

The oracles here deliberately avoid the library's own code paths: the rank
oracle enumerates square minors with its own determinant, and the root-count
oracle bisects on sign changes. Where a library value is checked against an
oracle, the oracle stays the authority.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import lcm


def rand_fraction(rng: random.Random, num=9, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> list[list[Fraction]]:
    return [[rand_fraction(rng) for _ in range(cols)] for _ in range(rows)]


def rand_skew(rng: random.Random, n: int) -> list[list[Fraction]]:
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rand_fraction(rng)
            a[i][j] = v
            a[j][i] = -v
    return a


def det_by_permutations(rows) -> Fraction:
    """Leibniz-formula determinant; fine up to 6x6."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += sign * term
    return total


def minor_rank_oracle(rows) -> int:
    """Rank as the largest k with some nonvanishing k x k minor."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    for k in range(min(nr, nc), 0, -1):
        for rsel in itertools.combinations(range(nr), k):
            for csel in itertools.combinations(range(nc), k):
                minor = [[rows[i][j] for j in csel] for i in rsel]
                if det_by_permutations(minor) != 0:
                    return k
    return 0


# ---------------------------------------------------------------------------
# bisection root-count oracle (independent of the Sturm implementation)

def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _deriv(cs):
    return _trim([k * c for k, c in enumerate(cs)][1:])


def _divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    if len(rem) < len(b):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(b) - 1] / b[-1]
        quot[k] = c
        for i, bc in enumerate(b):
            rem[k + i] -= c * bc
    return _trim(quot), _trim(rem)


def _gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return a


def _eval(cs, x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(cs):
        total = total * x + c
    return total


def _strip_root(cs, r: Fraction):
    factor = [-r, Fraction(1)]
    while cs and _eval(cs, r) == 0:
        cs, rem = _divmod(cs, factor)
        assert not rem
    return cs


def bisection_root_count(coeffs, a, b, grid=4096, tol=Fraction(1, 2**20)) -> int:
    """Distinct real roots of the polynomial strictly inside (a, b).

    Squarefree reduction, then a sign scan over a uniform grid with
    bisection refinement near sign changes down to width ``tol``. Exact
    rational arithmetic throughout; exact zeros at probe points count as
    roots and the scan restarts just past them.
    """
    cs = _trim([Fraction(c) for c in coeffs])
    assert cs, "zero polynomial"
    a, b = Fraction(a), Fraction(b)
    g = _gcd(cs, _deriv(cs))
    if len(g) > 1:
        cs, rem = _divmod(cs, g)
        assert not rem
    cs = _strip_root(cs, a)
    cs = _strip_root(cs, b)
    if len(cs) <= 1:
        return 0

    # integer-scaled sign evaluation: sign p(n/d) = sign sum c_k n^k d^(deg-k)
    scale = lcm(*[c.denominator for c in cs])
    ics = [int(c * scale) for c in cs]
    deg = len(ics) - 1

    def scaled(x: Fraction) -> int:
        n, d = x.numerator, x.denominator
        total = 0
        dp = 1
        for c in reversed(ics):
            total = total * n + c * dp
            dp *= d
        return total

    def probe_pair(x: Fraction, delta: Fraction):
        """Nonzero values just left and right of x."""
        fl, fr = scaled(x - delta), scaled(x + delta)
        while fl == 0 or fr == 0:
            delta /= 2
            fl, fr = scaled(x - delta), scaled(x + delta)
        return x - delta, fl, x + delta, fr

    def refine(lo, hi, flo, fhi):
        # flo, fhi nonzero with opposite signs: at least one root inside
        if hi - lo < tol:
            return 1
        mid = (lo + hi) / 2
        fm = scaled(mid)
        if fm == 0:
            xl, fl, xr, fr = probe_pair(mid, (hi - lo) / 8)
            count = 1
            if (flo > 0) != (fl > 0):
                count += refine(lo, xl, flo, fl)
            if (fr > 0) != (fhi > 0):
                count += refine(xr, hi, fr, fhi)
            return count
        if (flo > 0) != (fm > 0):
            return refine(lo, mid, flo, fm)
        return refine(mid, hi, fm, fhi)

    count = 0
    step = (b - a) / grid
    prev_x, prev_f = a, scaled(a)
    assert prev_f != 0
    for i in range(1, grid + 1):
        x = a + i * step
        f = scaled(x)
        if f == 0:
            if i < grid:  # roots at the open-interval endpoints are excluded
                count += 1
            xl, fl, xr, fr = probe_pair(x, step / 8)
            if (prev_f > 0) != (fl > 0):
                count += refine(prev_x, xl, prev_f, fl)
            prev_x, prev_f = xr, fr
            continue
        if (prev_f > 0) != (f > 0):
            count += refine(prev_x, x, prev_f, f)
        prev_x, prev_f = x, f
    return count
