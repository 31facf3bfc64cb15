"""Limits of polynomial matrix families ``A(eps) = sum_k C_k eps^k`` as eps -> 0.

The limit in the projective monoid is read off order by order: on the current
subspace W (initially V) take the lowest power of eps whose coefficient does
not vanish on W; its restriction to W is the next term, and W shrinks to that
term's kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatchError, NotConvergentError
from .linalg import Matrix, Subspace, restrict
from .monoid import MSeq, PMSeq, embed_kernel, projectivize
from .scalars import ZERO, GaussianRational


@dataclass(frozen=True)
class EpsFamily:
    n: int
    coeffs: tuple[Matrix, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DimensionMismatchError("a family needs at least one coefficient")
        for c in self.coeffs:
            if c.shape != (self.n, self.n):
                raise DimensionMismatchError(f"coefficient of shape {c.shape}, expected n={self.n}")
        if all(c.is_zero() for c in self.coeffs):
            raise NotConvergentError("family is identically zero")

    @classmethod
    def of(cls, coeffs: Sequence[Matrix]) -> "EpsFamily":
        coeffs = tuple(coeffs)
        return cls(coeffs[0].rows, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __matmul__(self, other: "EpsFamily") -> "EpsFamily":
        """Product of families as matrix polynomials."""
        out = [Matrix.zeros(self.n, self.n)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a @ b
        return EpsFamily(self.n, tuple(out))

    def scale(self, c) -> "EpsFamily":
        return EpsFamily(self.n, tuple(m.scale(c) for m in self.coeffs))

    def shift(self, k: int) -> "EpsFamily":
        """Multiply by eps^k."""
        return EpsFamily(self.n, (Matrix.zeros(self.n, self.n),) * k + self.coeffs)


def eval_family(f: EpsFamily, t) -> Matrix:
    """Exact value of the family at eps = t (Horner)."""
    t = GaussianRational.coerce(t)
    acc = f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = acc.scale(t) + c
    return acc


def eval_family_naive(f: EpsFamily, t) -> Matrix:
    t = GaussianRational.coerce(t)
    acc = Matrix.zeros(f.n, f.n)
    for k, c in enumerate(f.coeffs):
        acc = acc + c.scale(t ** k)
    return acc


def limit_with_orders(f: EpsFamily) -> tuple[MSeq, list[int]]:
    """The (non-projectivized) limit together with the eps-order chosen at each step."""
    w = Subspace.full(f.n)
    chain = [w]
    maps = []
    orders = []
    while not w.is_zero():
        for k, c in enumerate(f.coeffs):
            r = restrict(c, w)
            if not r.is_zero():
                break
        else:
            raise NotConvergentError(
                f"every coefficient vanishes on {w}; the family has no limit in the monoid")
        maps.append(r)
        orders.append(k)
        w = embed_kernel(r, w)
        chain.append(w)
    return MSeq(f.n, tuple(chain), tuple(maps)), orders


def limit(f: EpsFamily) -> PMSeq:
    return projectivize(limit_with_orders(f)[0])


# -- lossy numerical oracle -------------------------------------------------

def to_complex_vector(v: Sequence) -> list[complex]:
    return [complex(x) for x in v]


def projective_distance(u: Sequence[complex], v: Sequence[complex]) -> float:
    """min over phases t of ||u/|u| - e^{it} v/|v|||, for nonzero u, v.

    Works on flattened matrices as well as vectors.
    """
    u = [complex(x) for x in u]
    v = [complex(x) for x in v]
    nu = math.sqrt(sum(abs(x) ** 2 for x in u))
    nv = math.sqrt(sum(abs(x) ** 2 for x in v))
    if nu == 0 or nv == 0:
        raise ValueError("projective distance of a zero vector")
    u = [a / nu for a in u]
    v = [b / nv for b in v]
    inner = sum(a * b.conjugate() for a, b in zip(u, v))
    phase = inner / abs(inner) if inner != 0 else 1.0
    # computed directly rather than as sqrt(2 - 2|<u,v>|) to avoid cancellation
    return math.sqrt(sum(abs(a - phase * b) ** 2 for a, b in zip(u, v)))


def family_point_distance(limit_point: Sequence, f: EpsFamily, x: Sequence, eps) -> float:
    """Distance between a limit image and A(eps) x, both taken in P(V).

    A(eps) x is computed exactly at the rational eps, then converted to floats.
    """
    y = eval_family(f, eps).apply(x)
    if all(c == ZERO for c in y):
        return math.inf
    return projective_distance(to_complex_vector(limit_point), to_complex_vector(y))


__all__ = [
    "EpsFamily", "eval_family", "eval_family_naive", "limit", "limit_with_orders",
    "projective_distance", "family_point_distance", "to_complex_vector",
]
