"""Exact root machinery: signs, Sturm counts, isolation, comparison.

Oracle values come from hand factorizations; counts are cross-checked
against numpy roots on random integer polynomials.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from specrad.exactroots import (
    cauchy_bound,
    compare_largest_roots,
    count_roots_in,
    derivative,
    isolate_largest_root,
    largest_real_root,
    normalize,
    poly_gcd,
    sign_at,
    square_free_part,
    sturm_chain,
)


def test_sign_at_basics():
    p = (-2, 0, 1)  # x^2 - 2
    assert sign_at(p, 1) == -1
    assert sign_at(p, 2) == 1
    assert sign_at(p, Fraction(3, 2)) == 1
    assert sign_at((0, 1), 0) == 0


def test_derivative_and_normalize():
    assert derivative((5, 3, 2)) == (3, 4)
    assert normalize((1, 0, 0)) == (1,)
    assert normalize((0, 0)) == ()


def test_cauchy_bound_contains_roots():
    rng = random.Random(3)
    for _ in range(100):
        deg = rng.randint(1, 6)
        p = tuple(rng.randint(-9, 9) for _ in range(deg)) + (rng.randint(1, 9),)
        b = cauchy_bound(p)
        roots = np.roots(list(reversed(p)))
        assert all(abs(r) < b for r in roots)


def test_sturm_counts_known_cubic():
    # x(x-1)(x-2) = x^3 - 3x^2 + 2x
    p = (0, 2, -3, 1)
    ch = sturm_chain(p)
    assert count_roots_in(ch, -1, 3) == 3
    assert count_roots_in(ch, 0, 2) == 2          # (0, 2] excludes the root at 0
    assert count_roots_in(ch, -1, 0) == 1         # (-1, 0] includes it
    assert count_roots_in(ch, Fraction(1, 2), "+inf") == 2
    assert count_roots_in(ch, "-inf", "+inf") == 3


def test_sturm_counts_random_vs_numpy():
    # a double real root perturbs into a conjugate pair with imag ~ sqrt(eps),
    # so the oracle needs a generous imaginary cutoff and clustering radius
    rng = random.Random(5)
    for _ in range(120):
        deg = rng.randint(2, 6)
        p = tuple(rng.randint(-6, 6) for _ in range(deg)) + (rng.randint(1, 5),)
        sf = square_free_part(p)
        ch = sturm_chain(sf)
        got = count_roots_in(ch, "-inf", "+inf")
        roots = np.roots(list(reversed(p)))
        real = sorted(r.real for r in roots if abs(r.imag) < 1e-4)
        distinct = 0
        last = None
        for r in real:
            if last is None or r - last > 1e-4:
                distinct += 1
            last = r
        assert got == distinct


def test_square_free_part_collapses_multiplicity():
    # (x-1)^2 (x+2) = x^3 - 3x + 2
    p = (2, -3, 0, 1)
    sf = square_free_part(p)
    # must vanish at 1 and -2 and have degree 2
    assert sign_at(sf, 1) == 0 and sign_at(sf, -2) == 0
    assert len(sf) == 3


def test_poly_gcd():
    # gcd((x-2)(x+1), (x-2)(x-5)) ~ (x-2)
    p = (-2, -1, 1)
    q = (10, -7, 1)
    g = poly_gcd(p, q)
    assert len(g) == 2 and sign_at(g, 2) == 0


def test_isolate_exact_integer_root():
    # (x-3)(x+1) largest root 3; bisection midpoints are dyadic so the
    # exact hit is plausible but not guaranteed -- accept either form
    p = (-3, -2, 1)
    loc = isolate_largest_root(p)
    if loc[0] == "exact":
        assert loc[1] == 3
    else:
        _, lo, hi, _ = loc
        assert lo < 3 <= hi


def test_largest_real_root_values():
    assert largest_real_root((-4, 0, 1)) == pytest.approx(2.0, abs=1e-12)
    # x^3 - x^2 - 3x + 1: largest root 2.170086486626034 (bisected by hand)
    assert largest_real_root((1, -3, -1, 1)) == pytest.approx(2.170086486626034, abs=1e-11)
    # golden ratio: x^2 - x - 1
    assert largest_real_root((-1, -1, 1)) == pytest.approx((1 + 5**0.5) / 2, abs=1e-12)


def test_largest_real_root_double_root_on_top():
    # (x-1)^2 (x+2): largest root 1 with multiplicity 2
    assert largest_real_root((2, -3, 0, 1)) == pytest.approx(1.0, abs=1e-10)


def test_no_real_root_raises():
    with pytest.raises(ValueError):
        isolate_largest_root((1, 0, 1))  # x^2 + 1


class TestCompare:
    def test_separated(self):
        p = (-4, 0, 1)   # roots +-2
        q = (-3, 0, 1)   # roots +-sqrt(3)
        assert compare_largest_roots(p, q) == 1
        assert compare_largest_roots(q, p) == -1

    def test_equal_by_shared_factor(self):
        # C_4: x^4-4x^2 = x^2(x-2)(x+2); C_5: (x-2)(x^2+x-1)^2 -- equal largest roots
        c4 = (0, 0, -4, 0, 1)
        c5 = (-2, 5, 0, -5, 0, 1)
        assert compare_largest_roots(c4, c5) == 0

    def test_identical(self):
        p = (1, -3, -1, 1)
        assert compare_largest_roots(p, p) == 0

    def test_close_but_distinct(self):
        # largest roots sqrt(2) vs 181/128 = 1.4140625 (gap ~ 7e-5)
        assert compare_largest_roots((-2, 0, 1), (-181, 128)) == 1

    def test_rational_vs_irrational_tie_region(self):
        # root 2 exactly vs root sqrt(4.000001...): x^2 - 4000001/1000000
        p = (-2, 1)
        q = (-4000001, 0, 1000000)
        assert compare_largest_roots(p, q) == -1
        assert compare_largest_roots(q, p) == 1

    def test_random_vs_numpy(self):
        rng = random.Random(9)
        for _ in range(60):
            deg1 = rng.randint(1, 5)
            deg2 = rng.randint(1, 5)
            p = tuple(rng.randint(-5, 5) for _ in range(deg1)) + (1,)
            q = tuple(rng.randint(-5, 5) for _ in range(deg2)) + (1,)
            try:
                isolate_largest_root(p)
                isolate_largest_root(q)
            except ValueError:
                continue  # no real root
            rp = max(r.real for r in np.roots(list(reversed(p))) if abs(r.imag) < 1e-9)
            rq = max(r.real for r in np.roots(list(reversed(q))) if abs(r.imag) < 1e-9)
            got = compare_largest_roots(p, q)
            if abs(rp - rq) > 1e-6:
                assert got == (1 if rp > rq else -1)
