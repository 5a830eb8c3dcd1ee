"""Exact real-root tools for integer polynomials.

Polynomials are tuples of Python ints in ascending power order.  All
sign decisions are exact: evaluation at a rational num/den reduces to an
integer sign, and root counting uses Sturm chains.  Floats appear only
in final refinements, so comparisons of largest roots (spectral radii of
integer matrices) never hinge on rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "normalize",
    "derivative",
    "sign_at",
    "cauchy_bound",
    "sturm_chain",
    "count_roots_in",
    "square_free_part",
    "poly_gcd",
    "isolate_largest_root",
    "largest_real_root",
    "compare_largest_roots",
]


def normalize(p):
    """Drop trailing zero coefficients; the zero polynomial becomes ()."""
    p = tuple(p)
    d = len(p)
    while d and p[d - 1] == 0:
        d -= 1
    return p[:d]


def derivative(p):
    return tuple(i * c for i, c in enumerate(p) if i)


def _primitive(p):
    """Divide by the content, keeping the leading sign."""
    p = normalize(p)
    if not p:
        return p
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return tuple(c // g for c in p)


def sign_at(p, x):
    """Exact sign of p at a rational point (Fraction or int)."""
    p = normalize(p)
    if not p:
        return 0
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    # Horner on den^deg * p(num/den); stays in the integers
    acc = p[-1]
    dpow = 1
    for c in reversed(p[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def _sign_at_inf(p, positive):
    p = normalize(p)
    if not p:
        return 0
    lead = p[-1]
    if positive or (len(p) - 1) % 2 == 0:
        return (lead > 0) - (lead < 0)
    return (lead < 0) - (lead > 0)


def cauchy_bound(p):
    """Integer B with every real root of p in (-B, B)."""
    p = normalize(p)
    if len(p) < 2:
        return 1
    lead = abs(p[-1])
    top = max(abs(c) for c in p[:-1])
    return 1 + (top + lead - 1) // lead


def _frac_rem(a, b):
    """Remainder of a / b over the rationals (ascending Fraction tuples)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / lb
        shift = da - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _clear_denominators(fracs):
    """Scale a Fraction poly by a positive constant into a primitive int poly."""
    if not fracs:
        return ()
    den = 1
    for c in fracs:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive(int(c * den) for c in fracs)


def poly_gcd(p, q):
    """Greatest common divisor as a primitive integer polynomial."""
    a = [Fraction(c) for c in normalize(p)]
    b = [Fraction(c) for c in normalize(q)]
    while b:
        a, b = b, _frac_rem(a, b)
    return _clear_denominators(a)


def square_free_part(p):
    """p with repeated factors collapsed: p / gcd(p, p')."""
    p = normalize(p)
    if len(p) <= 2:
        return _primitive(p)
    g = poly_gcd(p, derivative(p))
    if len(g) <= 1:
        return _primitive(p)
    # exact division p // g over the rationals
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in g]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for sh in range(len(out) - 1, -1, -1):
        q = a[sh + len(b) - 1] / b[-1]
        out[sh] = q
        for i in range(len(b)):
            a[sh + i] -= q * b[i]
    return _clear_denominators(out)


def sturm_chain(p):
    """Sturm chain of a square-free integer polynomial."""
    chain = [tuple(normalize(p))]
    d = derivative(chain[0])
    if d:
        chain.append(tuple(d))
        while True:
            rem = _frac_rem(chain[-2], chain[-1])
            if not rem:
                break
            chain.append(tuple(-c for c in _clear_denominators(rem)))
    return chain


def _variations(signs):
    prev = 0
    var = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            var += 1
        prev = s
    return var


def _var_at(chain, x):
    return _variations([sign_at(f, x) for f in chain])


def _var_at_inf(chain, positive):
    return _variations([_sign_at_inf(f, positive) for f in chain])


def count_roots_in(chain, lo, hi):
    """Distinct real roots of the chain's polynomial in (lo, hi].

    Endpoints may be rationals or the strings '-inf' / '+inf'.  The
    chain's polynomial must be square-free.
    """
    vlo = _var_at_inf(chain, False) if lo == "-inf" else _var_at(chain, lo)
    vhi = _var_at_inf(chain, True) if hi == "+inf" else _var_at(chain, hi)
    return vlo - vhi


def isolate_largest_root(p, width=Fraction(1, 1 << 30)):
    """Isolating interval for the largest real root of p.

    Returns ('exact', r) when the largest root is found to be rational,
    else ('interval', lo, hi, chain) with lo < root <= hi containing
    exactly one root of the square-free part and no roots above hi.
    Raises ValueError when p has no real root.
    """
    sf = square_free_part(p)
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    lo, hi = Fraction(-bound), Fraction(bound)
    total = count_roots_in(chain, lo, hi)
    if total < 1:
        raise ValueError("polynomial has no real root")
    # invariant: largest root in (lo, hi], no roots in (hi, +inf)
    while count_roots_in(chain, lo, hi) > 1 or hi - lo > width:
        mid = (lo + hi) / 2
        if sign_at(sf, mid) == 0:
            # rational root hit exactly; largest iff nothing above it
            if count_roots_in(chain, mid, hi) == 0:
                return ("exact", mid)
            lo = mid
            continue
        if count_roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return ("interval", lo, hi, chain)


def largest_real_root(p, abs_tol=1e-12):
    """Largest real root of p as a float, within abs_tol."""
    loc = isolate_largest_root(p)
    if loc[0] == "exact":
        return float(loc[1])
    _, lo, hi, chain = loc
    sf = square_free_part(p)
    target = Fraction(abs_tol).limit_denominator(1 << 62) / 4
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = sign_at(sf, mid)
        if s == 0:
            return float(mid)
        # square-free and isolated: sign flips exactly at the root
        if s * sign_at(sf, hi) <= 0:
            lo = mid
        else:
            hi = mid
    x = float((lo + hi) / 2)
    # light Newton polish, clamped to the certified interval
    flo, fhi = float(lo), float(hi)
    dp = derivative(p)
    for _ in range(3):
        fx = _horner(p, x)
        dx = _horner(dp, x)
        if dx == 0:
            break
        x = min(max(x - fx / dx, flo), fhi)
    return x


def _horner(p, x):
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _cmp_value_vs_largest(a, sf, chain):
    """Compare rational a against the largest root of square-free sf."""
    if count_roots_in(chain, a, "+inf") >= 1:
        return -1  # a root lies above a
    return 0 if sign_at(sf, a) == 0 else 1


def compare_largest_roots(p, q):
    """Compare the largest real roots of p and q exactly: -1, 0, or +1."""
    sfp, sfq = square_free_part(p), square_free_part(q)
    locp = isolate_largest_root(p)
    locq = isolate_largest_root(q)

    def chain_of(loc, sf):
        return loc[3] if loc[0] == "interval" else sturm_chain(sf)

    def shrink(loc, sf):
        _, lo, hi, ch = loc
        mid = (lo + hi) / 2
        if sign_at(sf, mid) == 0:
            return ("exact", mid)
        if count_roots_in(ch, mid, hi) >= 1:
            return ("interval", mid, hi, ch)
        return ("interval", lo, mid, ch)

    shared = None  # gcd, computed lazily on first overlap
    for _ in range(512):
        if locp[0] == "exact" and locq[0] == "exact":
            a, b = locp[1], locq[1]
            return (a > b) - (a < b)
        if locp[0] == "exact":
            return _cmp_value_vs_largest(locp[1], sfq, chain_of(locq, sfq))
        if locq[0] == "exact":
            return -_cmp_value_vs_largest(locq[1], sfp, chain_of(locp, sfp))
        alo, ahi = locp[1], locp[2]
        blo, bhi = locq[1], locq[2]
        if ahi <= blo:
            return -1  # alpha <= ahi <= blo < beta
        if bhi <= alo:
            return 1
        # overlapping isolating intervals: equal iff the gcd has a root there
        if shared is None:
            shared = poly_gcd(sfp, sfq)
        if len(shared) > 1:
            ilo, ihi = max(alo, blo), min(ahi, bhi)
            gch = sturm_chain(square_free_part(shared))
            if count_roots_in(gch, ilo, ihi) >= 1:
                return 0
        locp = shrink(locp, sfp)
        locq = shrink(locq, sfq)
    raise RuntimeError("compare_largest_roots failed to separate after 512 rounds")
