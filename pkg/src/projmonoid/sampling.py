"""Seeded random generators for property suites and the CLI verifier.

Entries are small Gaussian integers so exact arithmetic stays cheap; ranks are
deliberately deficient so that multi-term sequences are common.
"""

from __future__ import annotations

import random

from .errors import CommonKernelError, NotConvergentError
from .hinge import in_MH
from .limits import EpsFamily, limit
from .linalg import Matrix, Subspace
from .monoid import MSeq, PMSeq, RawSeq, pi, projectivize, raw_new, running_kernels
from .action import ProjPoint
from .scalars import GaussianRational


def scalar(rng: random.Random, bound: int = 2, complex_prob: float = 0.3) -> GaussianRational:
    re = rng.randint(-bound, bound)
    im = rng.randint(-1, 1) if rng.random() < complex_prob else 0
    return GaussianRational(re, im)


def nonzero_scalar(rng: random.Random, bound: int = 2) -> GaussianRational:
    while True:
        c = scalar(rng, bound)
        if not c.is_zero():
            return c


def matrix(rng: random.Random, rows: int, cols: int, bound: int = 2) -> Matrix:
    return Matrix(rows, cols, [scalar(rng, bound) for _ in range(rows * cols)])


def matrix_of_rank(rng: random.Random, n: int, r: int) -> Matrix:
    """Product of random n x r and r x n factors (rank r with high probability)."""
    if r == 0:
        return Matrix.zeros(n, n)
    return matrix(rng, n, r, 1) @ matrix(rng, r, n, 1)


def invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        g = matrix(rng, n, n)
        if not g.det().is_zero():
            return g


def rawseq(rng: random.Random, n: int, max_terms: int | None = None) -> RawSeq:
    """Random element of M-tilde-prime with rank-deficient terms."""
    max_terms = max_terms or n + 1
    while True:
        count = rng.randint(1, max_terms)
        terms = [matrix_of_rank(rng, n, rng.randint(0 if count > 1 else n, n - 1 if count > 1 else n))
                 for _ in range(count)]
        a = RawSeq(n, tuple(terms))
        if running_kernels(a)[-1].is_zero():
            return a
        # close the common kernel with one more term
        terms.append(matrix_of_rank(rng, n, rng.randint(1, n)))
        try:
            return raw_new(terms)
        except CommonKernelError:
            continue


def mseq(rng: random.Random, n: int) -> MSeq:
    return pi(rawseq(rng, n))


def pmseq(rng: random.Random, n: int) -> PMSeq:
    return projectivize(mseq(rng, n))


def multi_term_pmseq(rng: random.Random, n: int) -> PMSeq:
    while True:
        a = pmseq(rng, n)
        if len(a.maps) > 1:
            return a


def mh_element(rng: random.Random, n: int) -> MSeq:
    """Random element of M_H: images of the terms form a direct sum equal to V."""
    while True:
        parts = []
        left = n
        while left:
            p = rng.randint(1, left)
            parts.append(p)
            left -= p
        g = invertible(rng, n)
        h_inv = invertible(rng, n)
        terms = []
        start = 0
        for p in parts:
            e = matrix(rng, n, n)
            # columns of later blocks vanish so that the kernel chain is the block flag
            e = Matrix.from_rows([[e[i, j] if j < start + p else 0 for j in range(n)]
                                  for i in range(n)])
            terms.append(g @ e @ h_inv)
            start += p
        try:
            a = pi(raw_new(terms))
        except CommonKernelError:
            continue
        if in_MH(a):
            return a


def point(rng: random.Random, n: int, within: Subspace | None = None, avoid: Subspace | None = None) -> ProjPoint:
    """Random point of ``within`` (default V) that is not in ``avoid``."""
    within = within or Subspace.full(n)
    while True:
        coeffs = [scalar(rng, 3) for _ in range(within.dim)]
        v = [GaussianRational(0)] * n
        for c, b in zip(coeffs, within.vectors()):
            v = [x + c * y for x, y in zip(v, b)]
        if all(x.is_zero() for x in v):
            continue
        if avoid is not None and avoid.contains_vector(v):
            continue
        return ProjPoint(v)


def family(rng: random.Random, n: int, max_degree: int = 3) -> EpsFamily:
    """Random polynomial family whose limit exists in the projective monoid."""
    while True:
        d = rng.randint(1, max_degree)
        coeffs = [matrix_of_rank(rng, n, rng.randint(1, n - 1) if n > 1 else 1)]
        coeffs += [matrix_of_rank(rng, n, rng.randint(0, n)) for _ in range(d)]
        if all(c.is_zero() for c in coeffs):
            continue
        f = EpsFamily(n, tuple(coeffs))
        try:
            limit(f)
        except NotConvergentError:
            continue
        return f
