"""Kernel-chain sequences and the monoid product.

Three representations of the same objects:

``RawSeq``
    a finite list of square matrices whose kernels intersect to zero;
    multiplied with :func:`mul_raw`.
``MSeq``
    maps ``A_i`` defined on a strictly decreasing chain ``V_0 = V > V_1 > ... > 0``
    with ``V_{i+1} = Ker(A_i)``; ``maps[i]`` is the ``n x dim V_i`` matrix of
    ``A_i`` in the RREF basis of ``V_i``.
``PMSeq``
    an ``MSeq`` whose maps are scaled so their first nonzero entry is 1,
    i.e. a canonical representative of the projective class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import CommonKernelError, DimensionMismatchError, InvalidSequenceError
from .linalg import (
    Matrix,
    Subspace,
    extend_by_zero,
    intersect,
    kernel,
    restrict,
)
from .scalars import ONE

__all__ = [
    "RawSeq", "MSeq", "PMSeq", "raw_new", "running_kernels", "psi", "pi",
    "mul_raw", "projectivize", "lift", "mul", "mul_mseq", "is_invertible",
    "embed_kernel", "singleton", "pmseq_from_matrices",
]


@dataclass(frozen=True)
class RawSeq:
    n: int
    terms: tuple[Matrix, ...]

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class MSeq:
    n: int
    chain: tuple[Subspace, ...]
    maps: tuple[Matrix, ...]

    @property
    def m(self) -> int:
        """Index of the last term (the sequence has ``m + 1`` maps)."""
        return len(self.maps) - 1

    def __len__(self):
        return len(self.maps)

    def lifted(self) -> tuple[Matrix, ...]:
        """Each map extended by zero on the Hermitian complement of its domain."""
        return tuple(extend_by_zero(a, v) for a, v in zip(self.maps, self.chain))

    def check(self) -> None:
        """Raise InvalidSequenceError unless every structural invariant holds."""
        n = self.n
        if not self.maps:
            raise InvalidSequenceError("empty sequence")
        if len(self.chain) != len(self.maps) + 1:
            raise InvalidSequenceError("chain length must be number of maps + 1")
        if self.chain[0] != Subspace.full(n) or not self.chain[-1].is_zero():
            raise InvalidSequenceError("chain must start at V and end at 0")
        if len(self.maps) > n:
            raise InvalidSequenceError("too many terms for the dimension")
        for i, (a, v) in enumerate(zip(self.maps, self.chain)):
            if v.ambient_dim != n or a.shape != (n, v.dim):
                raise InvalidSequenceError(f"term {i} has shape {a.shape}, expected {(n, v.dim)}")
            if a.is_zero():
                raise InvalidSequenceError(f"term {i} is zero")
            if embed_kernel(a, v) != self.chain[i + 1]:
                raise InvalidSequenceError(f"kernel of term {i} is not V_{i + 1}")
            if not self.chain[i + 1].dim < v.dim:
                raise InvalidSequenceError("chain is not strictly decreasing")


@dataclass(frozen=True)
class PMSeq(MSeq):
    """Canonical representative of a projective class of MSeq."""

    def check(self) -> None:
        super().check()
        for a in self.maps:
            if a.first_nonzero() != ONE:
                raise InvalidSequenceError("map is not in canonical projective form")


def embed_kernel(a: Matrix, w: Subspace) -> Subspace:
    """Kernel of a map given on ``w`` (in w's basis), as a subspace of the ambient space."""
    k = kernel(a)
    vecs = []
    for c in k.vectors():
        v = [0] * w.ambient_dim
        for coef, b in zip(c, w.vectors()):
            if not coef.is_zero():
                v = [x + coef * y for x, y in zip(v, b)]
        vecs.append(v)
    return Subspace.span(vecs, w.ambient_dim)


def raw_new(terms: Sequence[Matrix]) -> RawSeq:
    """Validated element of M-tilde-prime: square terms with zero common kernel."""
    terms = tuple(terms)
    if not terms:
        raise DimensionMismatchError("a sequence needs at least one term")
    n = terms[0].rows
    for t in terms:
        if t.shape != (n, n):
            raise DimensionMismatchError(f"term of shape {t.shape}, expected {(n, n)}")
    common = running_kernels(RawSeq(n, terms))[-1]
    if not common.is_zero():
        raise CommonKernelError(f"common kernel {common} is nonzero")
    return RawSeq(n, terms)


def running_kernels(a: RawSeq) -> list[Subspace]:
    """K_i = Ker(A_0) ∩ ... ∩ Ker(A_i) for every i."""
    out = []
    k = Subspace.full(a.n)
    for t in a.terms:
        k = intersect(k, kernel(t))
        out.append(k)
    return out


def psi(a: RawSeq) -> RawSeq:
    """Keep exactly the terms at which the running kernel intersection strictly drops."""
    kept = []
    k = Subspace.full(a.n)
    for t in a.terms:
        if k.is_zero():
            break
        nk = intersect(k, kernel(t))
        if nk.dim < k.dim:
            kept.append(t)
            k = nk
    return RawSeq(a.n, tuple(kept))


def pi(a: RawSeq) -> MSeq:
    """Normalize with psi, then restrict each term to the preceding running kernel."""
    chain = [Subspace.full(a.n)]
    maps = []
    for t in psi(a).terms:
        w = chain[-1]
        r = restrict(t, w)
        maps.append(r)
        chain.append(embed_kernel(r, w))
    if not chain[-1].is_zero():
        raise CommonKernelError("sequence has a nonzero common kernel")
    return MSeq(a.n, tuple(chain), tuple(maps))


def mul_raw(a: RawSeq, b: RawSeq) -> RawSeq:
    """Term ``l*j + i`` of the product is ``A_i B_j`` where ``l = len(a)``."""
    if a.n != b.n:
        raise DimensionMismatchError(f"dimensions differ: {a.n} vs {b.n}")
    return RawSeq(a.n, tuple(ai @ bj for bj in b.terms for ai in a.terms))


def projectivize(a: MSeq) -> PMSeq:
    maps = []
    for m in a.maps:
        lead = m.first_nonzero()
        if lead is None:
            raise InvalidSequenceError("cannot projectivize a zero map")
        maps.append(m if lead == ONE else m.scale(lead.inverse()))
    return PMSeq(a.n, a.chain, tuple(maps))


def lift(a: MSeq, extension: Callable[[Matrix, Subspace], Matrix] = extend_by_zero) -> RawSeq:
    """A RawSeq whose pi-image is ``a``; by default maps are extended by zero."""
    return RawSeq(a.n, tuple(extension(m, v) for m, v in zip(a.maps, a.chain)))


def mul_mseq(a: MSeq, b: MSeq) -> MSeq:
    """Product in M (not projectivized)."""
    return pi(mul_raw(lift(a), lift(b)))


def mul(a: PMSeq, b: PMSeq) -> PMSeq:
    """Product in the projective monoid."""
    return projectivize(mul_mseq(a, b))


def is_invertible(a: MSeq) -> bool:
    return len(a.maps) == 1 and a.maps[0].rank() == a.n


def singleton(g: Matrix) -> PMSeq:
    """The projective class of an invertible matrix."""
    return projectivize(pi(raw_new([g])))


def pmseq_from_matrices(terms: Sequence[Matrix]) -> PMSeq:
    """Shorthand for ``projectivize(pi(raw_new(terms)))``."""
    return projectivize(pi(raw_new(terms)))
