"""Projective points and the action of the projective monoid on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .linalg import Matrix
from .monoid import MSeq
from .scalars import GaussianRational


@dataclass(frozen=True)
class ProjPoint:
    """A point of P(V), stored with its first nonzero coordinate equal to 1."""

    coords: tuple[GaussianRational, ...]

    def __init__(self, coords: Sequence):
        v = tuple(GaussianRational.coerce(x) for x in coords)
        lead = next((x for x in v if not x.is_zero()), None)
        if lead is None:
            raise ValueError("the zero vector does not define a projective point")
        inv = lead.inverse()
        object.__setattr__(self, "coords", tuple(x * inv for x in v))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __repr__(self):
        return "ProjPoint(" + ":".join(str(x) for x in self.coords) + ")"


def stratum(a: MSeq, x: Sequence) -> int:
    """The unique i with x in V_i but not in V_{i+1}."""
    for i in range(len(a.maps)):
        if not a.chain[i + 1].contains_vector(x):
            return i
    raise ValueError("zero vector has no stratum")


def _apply_term(a: MSeq, i: int, x: Sequence) -> tuple:
    coords = a.chain[i].coords(x)
    return a.maps[i].apply(coords)


def phi_apply(a: MSeq, x: ProjPoint) -> ProjPoint:
    """Send x through the term whose stratum contains it."""
    if x.n != a.n:
        raise DimensionMismatchError(f"point of length {x.n} for dimension {a.n}")
    i = stratum(a, x.coords)
    return ProjPoint(_apply_term(a, i, x.coords))


def maps_equal_on(a: MSeq, b: MSeq, points: Iterable[ProjPoint]) -> bool:
    """Whether the two actions agree on every listed point (a sampled check only)."""
    if a.n != b.n:
        raise DimensionMismatchError(f"dimensions differ: {a.n} vs {b.n}")
    return all(phi_apply(a, x) == phi_apply(b, x) for x in points)


def matrix_point(g: Matrix, x: ProjPoint) -> ProjPoint:
    return ProjPoint(g.apply(x.coords))
