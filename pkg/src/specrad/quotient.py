"""Equitable partitions, quotient matrices, interlacing, and the cubic.

A partition's quotient matrix has q[i][j] = e_ij / n_i for i != j and
q[i][i] = 2 e_i / n_i, where e_ij counts edges between blocks i and j
and e_i counts edges inside block i.  Its eigenvalues interlace those of
the adjacency matrix, with equality of the largest pair when the
partition is equitable -- which is what reduces the spectral radius of
the clique-join family to the largest root of a cubic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactroots
from .graphs import ExtremalParams
from .spectral import Spectrum, full_spectrum

__all__ = [
    "Partition",
    "QuotientMatrix",
    "CubicCoeffs",
    "canonical_three_blocks",
    "is_equitable",
    "quotient_matrix",
    "three_part_quotient",
    "two_clique_quotient",
    "cubic_coefficients",
    "largest_cubic_root",
    "quotient_spectrum",
    "quotient_perron",
    "lift_block_vector",
    "check_interlacing",
]


@dataclass(frozen=True)
class Partition:
    """Ordered vertex blocks: disjoint, nonempty, covering 0..n-1."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))

    @property
    def sizes(self):
        return tuple(len(b) for b in self.blocks)

    def block_of(self):
        """Vertex -> block index lookup table."""
        n = sum(self.sizes)
        idx = [None] * n
        for bi, block in enumerate(self.blocks):
            for v in block:
                idx[v] = bi
        return idx

    def validate(self, n):
        seen = set()
        for b in self.blocks:
            if not b:
                raise ValueError("partition block is empty")
            for v in b:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise ValueError("partition does not cover the vertex set")
        return self


def canonical_three_blocks(p: ExtremalParams):
    """The positional (S, A, B) partition of the canonical clique-join layout."""
    k, a, b = p.block_sizes
    return Partition((tuple(range(k)),
                      tuple(range(k, k + a)),
                      tuple(range(k + a, k + a + b))))


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-averaged edge-count matrix of a partition.

    ``matrix`` holds the real entries; ``edge_counts[i][j]`` keeps the
    exact integer e_ij (e_i on the diagonal), so edge-count symmetry
    n_i q_ij = n_j q_ji can be checked exactly.
    """

    matrix: np.ndarray
    sizes: tuple
    edge_counts: tuple

    @property
    def m(self):
        return len(self.sizes)


def is_equitable(g, p):
    """True iff every vertex of block i has the same neighbour count in block j."""
    p.validate(g.n)
    masks = [sum(1 << v for v in b) for b in p.blocks]
    for block in p.blocks:
        for mj in masks:
            counts = {(g.rows[v] & mj).bit_count() for v in block}
            if len(counts) > 1:
                return False
    return True


def quotient_matrix(g, p):
    """Quotient matrix of a partition; entries are averages, counts exact."""
    p.validate(g.n)
    m = len(p.blocks)
    masks = [sum(1 << v for v in b) for b in p.blocks]
    counts = [[0] * m for _ in range(m)]
    for i, block in enumerate(p.blocks):
        for j in range(m):
            tot = sum((g.rows[v] & masks[j]).bit_count() for v in block)
            counts[i][j] = tot // 2 if i == j else tot  # within-block edges counted twice
    q = np.zeros((m, m))
    for i in range(m):
        ni = len(p.blocks[i])
        for j in range(m):
            q[i, j] = (2 * counts[i][i] if i == j else counts[i][j]) / ni
    return QuotientMatrix(q, tuple(len(b) for b in p.blocks),
                          tuple(tuple(row) for row in counts))


def three_part_quotient(p: ExtremalParams):
    """Closed-form quotient of the canonical (S, A, B) partition.

    [[k-1, a, b], [k, a-1, 0], [k, 0, b-1]] with a = delta-k+1 and
    b = n-delta-1; equals quotient_matrix(extremal_graph(p), canonical)
    entrywise because the partition is equitable.
    """
    p.validate()
    k, a, b = p.block_sizes
    q = np.array([[k - 1, a, b],
                  [k, a - 1, 0],
                  [k, 0, b - 1]], dtype=float)
    counts = ((k * (k - 1) // 2, k * a, k * b),
              (k * a, a * (a - 1) // 2, 0),
              (k * b, 0, b * (b - 1) // 2))
    return QuotientMatrix(q, (k, a, b), counts)


def two_clique_quotient(k, n1, n2):
    """Quotient of a k-clique joined to two disjoint cliques K_n1, K_n2.

    The general two-clique form [[k-1, n1, n2], [k, n1-1, 0],
    [k, 0, n2-1]]; three_part_quotient is the case n1 = delta-k+1.
    """
    if k < 1 or n1 < 1 or n2 < 1:
        raise ValueError("two_clique_quotient needs k, n1, n2 >= 1")
    q = np.array([[k - 1, n1, n2],
                  [k, n1 - 1, 0],
                  [k, 0, n2 - 1]], dtype=float)
    counts = ((k * (k - 1) // 2, k * n1, k * n2),
              (k * n1, n1 * (n1 - 1) // 2, 0),
              (k * n2, 0, n2 * (n2 - 1) // 2))
    return QuotientMatrix(q, (k, n1, n2), counts)


@dataclass(frozen=True)
class CubicCoeffs:
    """Exact integers (c2, c1, c0) of the monic cubic x^3 + c2 x^2 + c1 x + c0."""

    c2: int
    c1: int
    c0: int

    def as_poly(self):
        return (self.c0, self.c1, self.c2, 1)

    def evaluate(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0


def cubic_coefficients(p: ExtremalParams):
    """The closed-form cubic whose largest root is rho of the clique-join graph.

    c2 = 3-n,
    c1 = n*delta - delta^2 - n - k*n + k + k*delta + 2 - 2*delta,
    c0 = k*n*delta + k^2 + n*delta + k^2*delta - k*delta - k^2*n
         - k*delta^2 - 2*delta - delta^2.

    Tested against, not assumed equal to, det(xI - Q) of the three-block
    quotient; a mismatch there would be a finding, not a rounding issue.
    """
    p.validate()
    n, k, d = p.n, p.k, p.delta
    c2 = 3 - n
    c1 = n * d - d * d - n - k * n + k + k * d + 2 - 2 * d
    c0 = (k * n * d + k * k + n * d + k * k * d - k * d
          - k * k * n - k * d * d - 2 * d - d * d)
    return CubicCoeffs(c2, c1, c0)


def _float_largest_of_three(c2, c1, c0):
    """Largest root when the discriminant is positive (three real roots)."""
    pp = c1 - c2 * c2 / 3.0
    q = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    m = 2.0 * math.sqrt(max(0.0, -pp / 3.0))
    if m == 0.0:
        return -c2 / 3.0
    arg = min(1.0, max(-1.0, 3.0 * q / (pp * m)))
    return m * math.cos(math.acos(arg) / 3.0) - c2 / 3.0


def largest_cubic_root(c: CubicCoeffs, abs_tol=1e-12):
    """Largest real root of the cubic, within abs_tol; deterministic.

    Strategy: split on the exact integer discriminant.  With a repeated
    root everything is rational and solved exactly.  With one real root,
    exact sign bisection over the Cauchy interval applies directly.
    With three distinct roots a float estimate seeds an exactly
    certified bracket around the largest root (polynomial negative on
    the left end, positive on the right, derivative conditions pinning
    both ends at or beyond the larger critical point), bisected exactly
    and polished by Newton; if certification fails the Sturm-based
    fallback takes over.
    """
    c2, c1, c0 = c.c2, c.c1, c.c0
    p = c.as_poly()
    disc = (18 * c2 * c1 * c0 - 4 * c2**3 * c0 + c2 * c2 * c1 * c1
            - 4 * c1**3 - 27 * c0 * c0)
    if disc == 0:
        return _repeated_root_case(c2, c1, c0)
    if disc < 0:
        return _bisect_single_root(p, abs_tol)
    xhat = _float_largest_of_three(c2, c1, c0)
    root = _certified_bracket_root(p, c2, c1, xhat, abs_tol)
    if root is not None:
        return root
    return exactroots.largest_real_root(p, abs_tol)


def _repeated_root_case(c2, c1, c0):
    # discriminant 0: all roots rational
    p = (c0, c1, c2, 1)
    g = exactroots.poly_gcd(p, exactroots.derivative(p))
    if len(g) == 3:  # triple root
        return float(Fraction(-c2, 3))
    assert len(g) == 2, "zero discriminant must give a repeated root"
    double = Fraction(-g[0], g[1])
    simple = Fraction(-c2) - 2 * double
    return float(max(double, simple))


def _bisect_single_root(p, abs_tol):
    bound = exactroots.cauchy_bound(p)
    lo, hi = Fraction(-bound), Fraction(bound)
    target = Fraction(abs_tol) / 4
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = exactroots.sign_at(p, mid)
        if s == 0:
            return float(mid)
        if s < 0:
            lo = mid
        else:
            hi = mid
    return _newton_polish(p, float(lo), float(hi))


def _certified_bracket_root(p, c2, c1, xhat, abs_tol):
    dp = (c1, 2 * c2, 3)
    scale = 40
    base = math.floor(xhat * (1 << scale))
    for h in (1, 4, 64, 1 << 12, 1 << 20):
        lo = Fraction(base - h, 1 << scale)
        hi = Fraction(base + h, 1 << scale)
        if (exactroots.sign_at(p, lo) <= 0 < exactroots.sign_at(p, hi)
                and exactroots.sign_at(dp, lo) >= 0
                and exactroots.sign_at((2 * c2, 6), lo) >= 0
                and exactroots.sign_at(dp, hi) >= 0):
            # p increases through the bracket, so only the largest root is inside
            target = Fraction(abs_tol) / 4
            while hi - lo > target:
                mid = (lo + hi) / 2
                s = exactroots.sign_at(p, mid)
                if s == 0:
                    return float(mid)
                if s < 0:
                    lo = mid
                else:
                    hi = mid
            return _newton_polish(p, float(lo), float(hi))
    return None


def _newton_polish(p, flo, fhi):
    x = (flo + fhi) / 2
    dp = exactroots.derivative(p)
    for _ in range(3):
        fx = _horner(p, x)
        dx = _horner(dp, x)
        if dx == 0:
            break
        x = min(max(x - fx / dx, flo), fhi)
    return x


def _horner(p, x):
    acc = 0.0
    for cc in reversed(p):
        acc = acc * x + cc
    return acc


def quotient_spectrum(qm: QuotientMatrix):
    """All eigenvalues of a quotient matrix.

    Q is not symmetric, but edge-count symmetry n_i q_ij = n_j q_ji makes
    D^{1/2} Q D^{-1/2} symmetric for D = diag(n_i), so the Jacobi solver
    applies after that similarity transform.
    """
    d = np.sqrt(np.array(qm.sizes, dtype=float))
    sym = qm.matrix * (d[:, None] / d[None, :])
    return full_spectrum(sym)


def quotient_perron(qm: QuotientMatrix, tol=1e-14, max_iter=200_000):
    """Dominant eigenpair (rho, x) of a nonnegative irreducible quotient."""
    q = qm.matrix
    m = q.shape[0]
    x = np.full(m, 1.0 / math.sqrt(m))
    rho_prev = math.inf
    for _ in range(max_iter):
        z = q @ x + x
        nrm = np.linalg.norm(z)
        x = z / nrm
        rho = float(x @ (q @ x))
        if abs(rho - rho_prev) <= tol * max(1.0, abs(rho)):
            return rho, x
        rho_prev = rho
    raise RuntimeError("quotient power iteration did not converge")


def lift_block_vector(p: Partition, x):
    """Extend a per-block vector to a per-vertex vector, constant on blocks."""
    n = sum(p.sizes)
    y = np.empty(n)
    for bi, block in enumerate(p.blocks):
        for v in block:
            y[v] = x[bi]
    return y


def check_interlacing(sub: Spectrum, full: Spectrum, slack=1e-9):
    """lambda_i(A) >= lambda_i(Q) >= lambda_{i+n-m}(A) for all i, descending."""
    m, n = len(sub), len(full)
    if m > n:
        raise ValueError(f"quotient spectrum larger than full spectrum ({m} > {n})")
    qs = sorted(sub.eigs, reverse=True)
    fs = sorted(full.eigs, reverse=True)
    for i in range(m):
        if not (fs[i] + slack >= qs[i] >= fs[i + n - m] - slack):
            return False
    return True
