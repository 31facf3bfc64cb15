"""Linear relations, hinges, and the map from M_H onto hinges.

A linear relation on V = Q(i)^n is a subspace of V + V; coordinates
``0..n-1`` are the source copy and ``n..2n-1`` the target copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatchError, InvalidHingeError, NotInMHError
from .linalg import (
    Matrix,
    Subspace,
    image,
    intersect,
    orthocomplement_in,
    solve,
    sum_,
)
from .monoid import MSeq
from .scalars import ZERO, GaussianRational


@dataclass(frozen=True)
class LinearRelation:
    sub: Subspace

    def __post_init__(self):
        if self.sub.ambient_dim % 2:
            raise DimensionMismatchError("a relation lives in an even-dimensional ambient space")

    @property
    def n(self) -> int:
        return self.sub.ambient_dim // 2

    @property
    def dim(self) -> int:
        return self.sub.dim

    @classmethod
    def span(cls, pairs: Sequence[tuple[Sequence, Sequence]], n: int) -> "LinearRelation":
        return cls(Subspace.span([list(x) + list(y) for x, y in pairs], 2 * n))

    @classmethod
    def graph(cls, g: Matrix) -> "LinearRelation":
        """{(x, g x)} for a square matrix g."""
        n = g.rows
        basis = Subspace.full(n).vectors()
        return cls.span([(e, g.apply(e)) for e in basis], n)

    def pairs(self) -> list[tuple[tuple, tuple]]:
        n = self.n
        return [(v[:n], v[n:]) for v in self.sub.vectors()]

    def scaled(self, c) -> "LinearRelation":
        """c.P = {(x, c y) : (x, y) in P}."""
        c = GaussianRational.coerce(c)
        return LinearRelation.span([(x, [c * t for t in y]) for x, y in self.pairs()], self.n)

    def __repr__(self):
        return f"LinearRelation({self.sub!r})"


@dataclass(frozen=True)
class Hinge:
    n: int
    relations: tuple[LinearRelation, ...]

    def __len__(self):
        return len(self.relations)


def _source_block(n: int) -> Subspace:
    return Subspace.coordinate(2 * n, range(n))


def _target_block(n: int) -> Subspace:
    return Subspace.coordinate(2 * n, range(n, 2 * n))


def dom(p: LinearRelation) -> Subspace:
    return Subspace.span([x for x, _ in p.pairs()], p.n)


def im(p: LinearRelation) -> Subspace:
    return Subspace.span([y for _, y in p.pairs()], p.n)


def ker_rel(p: LinearRelation) -> Subspace:
    n = p.n
    s = intersect(p.sub, _source_block(n))
    return Subspace.span([v[:n] for v in s.vectors()], n)


def indef(p: LinearRelation) -> Subspace:
    n = p.n
    s = intersect(p.sub, _target_block(n))
    return Subspace.span([v[n:] for v in s.vectors()], n)


def _split_relation(p: LinearRelation) -> LinearRelation:
    """Ker(P) + Indef(P) as a relation."""
    n = p.n
    zero = [ZERO] * n
    pairs = [(k, zero) for k in ker_rel(p).vectors()] + [(zero, t) for t in indef(p).vectors()]
    return LinearRelation.span(pairs, n)


def hinge_violations(rels: Sequence[LinearRelation]) -> list[str]:
    """Human-readable list of failed hinge axioms (empty for a hinge)."""
    rels = list(rels)
    if not rels:
        return ["empty sequence"]
    n = rels[0].n
    out = []
    for j, p in enumerate(rels):
        if p.n != n:
            out.append(f"relation {j} lives in dimension {p.n}, expected {n}")
            return out
        if p.dim != n:
            out.append(f"relation {j} has dimension {p.dim}, expected {n}")
        if p == _split_relation(p):
            out.append(f"relation {j} equals Ker + Indef")
    full = Subspace.full(n)
    if dom(rels[0]) != full:
        out.append("Dom of the first relation is not V")
    if im(rels[-1]) != full:
        out.append("Im of the last relation is not V")
    for j in range(len(rels) - 1):
        if ker_rel(rels[j]) != dom(rels[j + 1]):
            out.append(f"Ker(P_{j}) != Dom(P_{j + 1})")
        if im(rels[j]) != indef(rels[j + 1]):
            out.append(f"Im(P_{j}) != Indef(P_{j + 1})")
    return out


def is_hinge(rels: Sequence[LinearRelation]) -> bool:
    return not hinge_violations(rels)


def make_hinge(rels: Sequence[LinearRelation]) -> Hinge:
    rels = tuple(rels)
    bad = hinge_violations(rels)
    if bad:
        raise InvalidHingeError("; ".join(bad))
    return Hinge(rels[0].n, rels)


def image_sum(a: MSeq) -> Subspace:
    """Sum of the images of the restricted maps."""
    s = Subspace.zero(a.n)
    for m in a.maps:
        s = sum_(s, image(m))
    return s


def in_MH(a: MSeq) -> bool:
    return image_sum(a).dim == a.n


def varphi(a: MSeq) -> Hinge:
    """P_i = graph of A_i on V_i plus (0 + sum of earlier images)."""
    if not in_MH(a):
        raise NotInMHError("the images of the terms do not sum to V")
    n = a.n
    zero = [ZERO] * n
    earlier = Subspace.zero(n)
    rels = []
    for m, v in zip(a.maps, a.chain):
        pairs = [(b, m.col(j)) for j, b in enumerate(v.vectors())]
        pairs += [(zero, t) for t in earlier.vectors()]
        rels.append(LinearRelation.span(pairs, n))
        earlier = sum_(earlier, image(m))
    return Hinge(n, tuple(rels))


def hinge_to_MH(h: Hinge | Sequence[LinearRelation]) -> MSeq:
    """A preimage under varphi, choosing each R_i as an orthogonal complement."""
    rels = tuple(h.relations if isinstance(h, Hinge) else h)
    bad = hinge_violations(rels)
    if bad:
        raise InvalidHingeError("; ".join(bad))
    n = rels[0].n
    prev_im = Subspace.zero(n)
    chain = []
    maps = []
    for p in rels:
        v = dom(p)
        cur_im = im(p)
        r = orthocomplement_in(prev_im, cur_im)
        pairs = p.pairs()
        sources = Matrix.from_columns([x for x, _ in pairs], n)
        split = Matrix.from_columns(r.vectors() + prev_im.vectors(), n)
        cols = []
        for b in v.vectors():
            c = solve(sources, b)
            y = [ZERO] * n
            for coef, (_, t) in zip(c, pairs):
                if not coef.is_zero():
                    y = [s + coef * u for s, u in zip(y, t)]
            z = solve(split, y)
            col = [ZERO] * n
            for coef, u in zip(z[:r.dim], r.vectors()):
                col = [s + coef * w for s, w in zip(col, u)]
            cols.append(col)
        chain.append(v)
        maps.append(Matrix.from_columns(cols, n))
        prev_im = cur_im
    chain.append(Subspace.zero(n))
    out = MSeq(n, tuple(chain), tuple(maps))
    out.check()
    return out


def relation_scale_factor(p: LinearRelation, q: LinearRelation):
    """Some c != 0 with c.P == Q, or None."""
    if p == q:
        return GaussianRational.coerce(1)
    if p.n != q.n or p.dim != q.dim:
        return None
    n = p.n
    q_ind = indef(q)
    q_pairs = q.pairs()
    q_sources = Matrix.from_columns([x for x, _ in q_pairs], n)
    c = None
    for x, y in p.pairs():
        coef = solve(q_sources, x)
        if coef is None:
            return None
        y2 = [ZERO] * n
        for k, (_, t) in zip(coef, q_pairs):
            if not k.is_zero():
                y2 = [s + k * u for s, u in zip(y2, t)]
        u = q_ind.reduce(y2)
        w = q_ind.reduce(y)
        idx = next((i for i, t in enumerate(w) if not t.is_zero()), None)
        if idx is not None:
            c = u[idx] / w[idx]
            break
    if c is None or c.is_zero():
        return None
    return c if p.scaled(c) == q else None


def hinge_equiv(h1: Hinge, h2: Hinge) -> bool:
    """Equal up to rescaling each relation's target by a nonzero scalar."""
    if h1.n != h2.n or len(h1.relations) != len(h2.relations):
        return False
    return all(relation_scale_factor(p, q) is not None
               for p, q in zip(h1.relations, h2.relations))


__all__ = [
    "LinearRelation", "Hinge", "dom", "im", "ker_rel", "indef", "is_hinge",
    "hinge_violations", "make_hinge", "image_sum", "in_MH", "varphi",
    "hinge_to_MH", "hinge_equiv", "relation_scale_factor",
]
