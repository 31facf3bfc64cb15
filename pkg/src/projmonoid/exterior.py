"""Compound matrices and the exterior-power invariants of kernel-chain sequences.

Wedge basis convention: the basis of the k-th exterior power of Q(i)^n is
``e_I = e_{i_1} ^ ... ^ e_{i_k}`` for index sets ``i_1 < ... < i_k`` in
lexicographic order (``itertools.combinations``).  With this ordering the
(I, J) entry of the k-th compound of a matrix is the minor with rows I and
columns J, so no extra signs appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import DegreeError, NotInMHError
from .hinge import in_MH
from .linalg import Matrix, orthocomplement_in
from .monoid import MSeq
from .scalars import ONE, ZERO, GaussianRational


def wedge_indices(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


@dataclass(frozen=True)
class WedgeMap:
    n: int
    k: int
    matrix: Matrix

    def __post_init__(self):
        size = comb(self.n, self.k)
        if self.matrix.shape != (size, size):
            raise DegreeError(f"wedge map of degree {self.k} on n={self.n} must be {size}x{size}")

    def __matmul__(self, other: "WedgeMap") -> "WedgeMap":
        return WedgeMap(self.n, self.k, self.matrix @ other.matrix)

    def projectivized(self) -> "WedgeMap":
        lead = self.matrix.first_nonzero()
        if lead is None:
            raise ValueError("zero wedge map has no projective class")
        return WedgeMap(self.n, self.k, self.matrix.scale(lead.inverse()))


@dataclass(frozen=True)
class LambdaVector:
    components: tuple[WedgeMap, ...]

    def __getitem__(self, k: int) -> WedgeMap:
        """Component of degree k (1-based, matching the exterior degree)."""
        for c in self.components:
            if c.k == k:
                return c
        raise KeyError(k)

    def __len__(self):
        return len(self.components)


def compound(m: Matrix, k: int) -> Matrix:
    """k-th compound: entry (I, J) is the minor of m on rows I, columns J."""
    if not 1 <= k <= min(m.rows, m.cols):
        raise DegreeError(f"degree {k} out of range for a {m.rows}x{m.cols} matrix")
    rows = wedge_indices(m.rows, k)
    cols = wedge_indices(m.cols, k)
    return Matrix(len(rows), len(cols),
                  [m.submatrix(r, c).det() for r in rows for c in cols])


def compound_map(m: Matrix, k: int) -> WedgeMap:
    return WedgeMap(m.rows, k, compound(m, k))


def adapted_decomposition(a: MSeq):
    """Hermitian complements V'_i of V_{i+1} in V_i.

    Returns (U, DU, blocks) where the columns of U are the concatenated bases
    of the V'_i, the columns of DU are their images under the corresponding
    A_i, and ``blocks[c]`` is the index i of the block containing column c.
    """
    n = a.n
    ucols, dcols, blocks = [], [], []
    for i, (m, v) in enumerate(zip(a.maps, a.chain)):
        comp = orthocomplement_in(a.chain[i + 1], v)
        for b in comp.vectors():
            ucols.append(b)
            dcols.append(m.apply(v.coords(b)))
            blocks.append(i)
    return Matrix.from_columns(ucols, n), Matrix.from_columns(dcols, n), blocks


def _selected_summand(blocks: Sequence[int], k: int) -> list[bool]:
    """Which adapted wedge-basis elements lie in the distinguished summand of degree k."""
    n = len(blocks)
    sizes = [blocks.count(i) for i in range(max(blocks) + 1)]
    j, before = 0, 0
    while before + sizes[j] < k:
        before += sizes[j]
        j += 1
    t = k - before
    out = []
    for idx in wedge_indices(n, k):
        counts = [0] * len(sizes)
        for c in idx:
            counts[blocks[c]] += 1
        out.append(counts[:j] == sizes[:j] and counts[j] == t and sum(counts[j + 1:]) == 0)
    return out


def wedge_seq(a: MSeq, k: int) -> WedgeMap:
    """The degree-k exterior map of a sequence, in the standard wedge basis."""
    n = a.n
    if not 1 <= k <= n:
        raise DegreeError(f"degree {k} out of range 1..{n}")
    u, du, blocks = adapted_decomposition(a)
    sel = _selected_summand(blocks, k)
    proj = Matrix.diag([ONE if s else ZERO for s in sel])
    return WedgeMap(n, k, compound(du, k) @ proj @ compound(u.inverse(), k))


def det_seq(a: MSeq) -> GaussianRational:
    return wedge_seq(a, a.n).matrix[0, 0]


def lambda_(a: MSeq) -> LambdaVector:
    return LambdaVector(tuple(wedge_seq(a, k) for k in range(1, a.n + 1)))


def lambda_bar(a: MSeq) -> LambdaVector:
    """Projectivized components of degree 1..n-1; defined on M_H only."""
    if not in_MH(a):
        raise NotInMHError("lambda-bar is defined only on M_H")
    return LambdaVector(tuple(wedge_seq(a, k).projectivized() for k in range(1, a.n)))


__all__ = [
    "WedgeMap", "LambdaVector", "wedge_indices", "compound", "compound_map",
    "adapted_decomposition", "wedge_seq", "det_seq", "lambda_", "lambda_bar",
]
