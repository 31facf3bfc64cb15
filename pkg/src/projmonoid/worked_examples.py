"""Reference matrices for the classical worked examples, and a self-checking registry.

Each registry entry is a named predicate; ``verify-examples`` on the command
line runs them all.  Names describe what is checked.
"""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from . import sampling
from .action import ProjPoint, phi_apply, maps_equal_on
from .exterior import det_seq, lambda_, lambda_bar, wedge_indices, wedge_seq
from .hinge import (
    LinearRelation, dom, hinge_equiv, hinge_to_MH, in_MH, indef, is_hinge, varphi,
)
from .limits import EpsFamily, limit
from .linalg import Matrix, Subspace, image, kernel, orthocomplement_in, restrict
from .monoid import (
    is_invertible, mul, mul_raw, pi, pmseq_from_matrices, projectivize, psi, raw_new,
)

M = Matrix.from_rows

# two rank-one 2x2 maps whose two orderings act identically on P^1
SWAP_A = M([[1, 0], [0, 0]])
SWAP_B = M([[0, 1], [0, 0]])

# 3x3 pencil A0 + eps A1
PENCIL_A0 = M([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
PENCIL_A1 = M([[0, 1, 1], [0, 1, -1], [0, 1, -1]])

# product that is discontinuous: A(eps) = A0 + eps^2 A1, B(eps) = B0 + eps B1
DISC_A0 = M([[1, 0], [0, 0]])
DISC_A1 = M([[0, 1], [0, 2]])
DISC_B0 = M([[0, 0], [1, 0]])
DISC_B1 = M([[1, 2], [0, 0]])

# two elements of M_H whose product leaves M_H
MH_A0 = M([[0, 1], [0, 0]])
MH_A1 = M([[0, 0], [1, 0]])
MH_B0 = M([[1, 1], [0, 0]])
MH_B1 = M([[0, 0], [1, -1]])

# hinge comparison family A0 + eps A1 + eps^2 A2
HINGE_A0 = M([[1, 0], [0, 0]])
HINGE_A1 = M([[0, 1], [0, 0]])
HINGE_A2 = M([[0, 0], [0, 1]])
HINGE_P0 = LinearRelation.span([([1, 0], [1, 0]), ([0, 1], [0, 0])], 2)
HINGE_P2 = LinearRelation.span([([0, 1], [0, 1]), ([0, 0], [1, 0])], 2)

# 4x4 pencil diag(1,1,0,0) + eps diag(0,0,1,1)
WEDGE_A0 = Matrix.diag([1, 1, 0, 0])
WEDGE_A1 = Matrix.diag([0, 0, 1, 1])


def pencil_family() -> EpsFamily:
    return EpsFamily.of([PENCIL_A0, PENCIL_A1])


def disc_families() -> tuple[EpsFamily, EpsFamily]:
    z = Matrix.zeros(2, 2)
    return EpsFamily.of([DISC_A0, z, DISC_A1]), EpsFamily.of([DISC_B0, DISC_B1])


def hinge_family() -> EpsFamily:
    return EpsFamily.of([HINGE_A0, HINGE_A1, HINGE_A2])


def wedge_family() -> EpsFamily:
    return EpsFamily.of([WEDGE_A0, WEDGE_A1])


def wedge_cube_expected() -> Matrix:
    """Idempotent on the degree-3 wedge space fixing e1^e2^e3 and e1^e2^e4."""
    keep = {(0, 1, 2), (0, 1, 3)}
    return Matrix.diag([1 if idx in keep else 0 for idx in wedge_indices(4, 3)])


# -- registry -------------------------------------------------------------

class Check(NamedTuple):
    name: str
    description: str
    run: Callable[[random.Random], bool]


def _kernel_rank_one(rng):
    return kernel(SWAP_A) == Subspace.coordinate(2, [1])


def _image_rank_one(rng):
    return image(SWAP_B) == Subspace.coordinate(2, [0])


def _orthocomplement(rng):
    return orthocomplement_in(Subspace.coordinate(3, [1, 2]), Subspace.full(3)) \
        == Subspace.coordinate(3, [0])


def _restrict_pencil(rng):
    r = restrict(PENCIL_A1, Subspace.coordinate(3, [1, 2]))
    return r == M([[1, 1], [1, -1], [1, -1]])


def _swap_raw_valid(rng):
    raw_new([SWAP_A, SWAP_B])
    return True


def _psi_mh_product(rng):
    prod = mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1]))
    return psi(prod).terms == (MH_B0 @ MH_A0, MH_B0 @ MH_A1)


def _psi_disc_product(rng):
    a = raw_new([DISC_A0, DISC_A1])
    b = raw_new([DISC_B0, DISC_B1])
    prod = mul_raw(a, b)
    return (prod.terms[0].is_zero() and prod.terms[3].is_zero()
            and psi(prod).terms == (DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1))


def _swap_pi_distinct(rng):
    ab = pi(raw_new([SWAP_A, SWAP_B]))
    ba = pi(raw_new([SWAP_B, SWAP_A]))
    return (projectivize(ab) != projectivize(ba)
            and ab.chain[1] == Subspace.coordinate(2, [1])
            and ba.chain[1] == Subspace.coordinate(2, [0]))


def _mul_raw_layout(rng):
    a = raw_new([sampling.invertible(rng, 2) for _ in range(3)])
    b = raw_new([sampling.invertible(rng, 2) for _ in range(2)])
    expected = tuple(a.terms[i] @ b.terms[j] for j in range(2) for i in range(3))
    return mul_raw(a, b).terms == expected


def _disc_mul(rng):
    a = pmseq_from_matrices([DISC_A0, DISC_A1])
    b = pmseq_from_matrices([DISC_B0, DISC_B1])
    return mul(a, b) == pmseq_from_matrices([DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1])


def _disc_not_unit(rng):
    return not is_invertible(pmseq_from_matrices([DISC_A0, DISC_A1]))


def _swap_phi_e2(rng):
    ab = pmseq_from_matrices([SWAP_A, SWAP_B])
    ba = pmseq_from_matrices([SWAP_B, SWAP_A])
    e1, e2 = ProjPoint([1, 0]), ProjPoint([0, 1])
    return phi_apply(ab, e2) == e1 and phi_apply(ba, e2) == e1


def _swap_maps_equal(rng):
    ab = pmseq_from_matrices([SWAP_A, SWAP_B])
    ba = pmseq_from_matrices([SWAP_B, SWAP_A])
    pts = [ProjPoint([1, 0]), ProjPoint([0, 1]), ProjPoint([1, 1]), ProjPoint([1, "i"])]
    pts += [sampling.point(rng, 2) for _ in range(50)]
    return maps_equal_on(ab, ba, pts)


def _pencil_limit(rng):
    return limit(pencil_family()) == projectivize(
        pi(raw_new([PENCIL_A0, PENCIL_A1])))


def _hinge_family_limit(rng):
    return limit(hinge_family()) == pmseq_from_matrices([HINGE_A0, HINGE_A1])


def _disc_noncontinuity(rng):
    fa, fb = disc_families()
    lhs = mul(limit(fa), limit(fb))
    rhs = limit(fa @ fb)
    return (lhs == pmseq_from_matrices([DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1])
            and rhs == pmseq_from_matrices([DISC_A0 @ DISC_B1, DISC_A1 @ DISC_B0])
            and lhs != rhs)


def _hinge_p2_parts(rng):
    return dom(HINGE_P2) == Subspace.coordinate(2, [1]) and indef(HINGE_P2) == Subspace.coordinate(2, [0])


def _hinge_pair_is_hinge(rng):
    return is_hinge([HINGE_P0, HINGE_P2])


def _hinge_in_mh(rng):
    return in_MH(pi(raw_new([HINGE_A0, HINGE_A2])))


def _mh_product_outside(rng):
    prod = pi(mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1])))
    return (in_MH(pi(raw_new([MH_A0, MH_A1]))) and in_MH(pi(raw_new([MH_B0, MH_B1])))
            and not in_MH(prod))


def _varphi_hinge_pair(rng):
    h = varphi(pi(raw_new([HINGE_A0, HINGE_A2])))
    return h.relations == (HINGE_P0, HINGE_P2) and HINGE_P0 == LinearRelation.graph(HINGE_A0)


def _varphi_graph(rng):
    g = sampling.invertible(rng, 3)
    return varphi(pi(raw_new([g]))).relations == (LinearRelation.graph(g),)


def _hinge_inverse_pair(rng):
    h = varphi(pi(raw_new([HINGE_A0, HINGE_A2])))
    back = hinge_to_MH(h)
    return hinge_equiv(varphi(back), h)


def _wedge_cube(rng):
    a = pi(raw_new([WEDGE_A0, WEDGE_A1]))
    return wedge_seq(a, 3).matrix == wedge_cube_expected()


def _det_hinge_pair(rng):
    return not det_seq(pi(raw_new([HINGE_A0, HINGE_A2]))).is_zero()


def _det_hinge_degenerate(rng):
    return det_seq(pi(raw_new([HINGE_A0, HINGE_A1]))).is_zero()


def _lambda_not_multiplicative(rng):
    a = pi(raw_new([MH_A0, MH_A1]))
    b = pi(raw_new([MH_B0, MH_B1]))
    ba = pi(mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1])))
    lb, la, lba = lambda_(b), lambda_(a), lambda_(ba)
    return any(lba[k].matrix != (lb[k] @ la[k]).matrix for k in (1, 2))


def _lambda_bar_wedge(rng):
    lb = lambda_bar(limit(wedge_family()))
    return lb[3].matrix == wedge_cube_expected()


def _normalize_swap(rng):
    from .serialize import mseq_to_json
    doc = mseq_to_json(pi(raw_new([SWAP_A, SWAP_B])))
    return doc["chain_dims"] == [2, 1, 0]


REGISTRY: list[Check] = [
    Check("kernel-rank-one", "Ker [[1,0],[0,0]] = span{e2}", _kernel_rank_one),
    Check("image-rank-one", "Im [[0,1],[0,0]] = span{e1}", _image_rank_one),
    Check("orthocomplement-pencil", "complement of span{e2,e3} in V is span{e1}", _orthocomplement),
    Check("restrict-pencil", "A1 on span{e2,e3} has columns (1,1,1), (1,-1,-1)", _restrict_pencil),
    Check("swap-raw-valid", "(A, B) has trivial common kernel", _swap_raw_valid),
    Check("psi-mh-product", "psi((B0,B1)(A0,A1)) = (B0A0, B0A1)", _psi_mh_product),
    Check("psi-disc-product", "psi drops the zero terms A0B0, A1B1", _psi_disc_product),
    Check("swap-pi-distinct", "pi(A,B) and pi(B,A) differ", _swap_pi_distinct),
    Check("mul-raw-layout", "term l*j+i of a product is A_i B_j", _mul_raw_layout),
    Check("disc-mul", "product of the two limits is P pi(A1B0, A0B1)", _disc_mul),
    Check("disc-not-unit", "two-term elements are not invertible", _disc_not_unit),
    Check("swap-phi-e2", "both orderings send e2 to e1", _swap_phi_e2),
    Check("swap-maps-equal", "both orderings act identically on sampled points", _swap_maps_equal),
    Check("pencil-limit", "limit of A0 + eps A1 is (A0, A1 on span{e2,e3})", _pencil_limit),
    Check("hinge-family-limit", "limit of A0 + eps A1 + eps^2 A2 is P pi(A0, A1)", _hinge_family_limit),
    Check("disc-noncontinuity", "limit of products differs from product of limits", _disc_noncontinuity),
    Check("hinge-p2-parts", "Dom P2 = span{e2}, Indef P2 = span{e1}", _hinge_p2_parts),
    Check("hinge-pair-is-hinge", "(P0, P2) satisfies the hinge axioms", _hinge_pair_is_hinge),
    Check("hinge-in-mh", "(A0, A2) lies in M_H", _hinge_in_mh),
    Check("mh-product-outside", "(B0,B1)(A0,A1) leaves M_H", _mh_product_outside),
    Check("varphi-hinge-pair", "varphi(A0, A2) = (P0, P2)", _varphi_hinge_pair),
    Check("varphi-graph", "an invertible g maps to its graph", _varphi_graph),
    Check("hinge-inverse-pair", "hinge_to_MH(P0, P2) maps back to an equivalent hinge", _hinge_inverse_pair),
    Check("wedge-cube", "degree-3 wedge of pi(A0, A1) fixes e123, e124 and kills the rest", _wedge_cube),
    Check("det-hinge-pair", "Det(A0, A2) != 0", _det_hinge_pair),
    Check("det-hinge-degenerate", "Det(A0, A1) = 0", _det_hinge_degenerate),
    Check("lambda-not-multiplicative", "lambda(BA) != lambda(B) lambda(A)", _lambda_not_multiplicative),
    Check("lambda-bar-wedge", "lambda-bar of the 4x4 limit has the expected degree-3 part", _lambda_bar_wedge),
    Check("normalize-swap", "normalizing (A, B) gives chain dimensions [2, 1, 0]", _normalize_swap),
]


def run_all(seed: int = 0) -> list[tuple[Check, bool, str]]:
    """Run every check with its own seeded generator; exceptions count as failures."""
    results = []
    for i, check in enumerate(REGISTRY):
        rng = random.Random(seed * 1000 + i)
        try:
            ok = bool(check.run(rng))
            msg = ""
        except Exception as e:  # a crashing check is reported, not raised
            ok, msg = False, f"{type(e).__name__}: {e}"
        results.append((check, ok, msg))
    return results
