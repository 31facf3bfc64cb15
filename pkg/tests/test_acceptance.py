"""Acceptance criteria 1-13, one PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for
just the summary lines.  Every criterion uses a fixed seed.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import check_family  # noqa: E402
from projmonoid import sampling  # noqa: E402
from projmonoid.action import ProjPoint, maps_equal_on, phi_apply  # noqa: E402
from projmonoid.exterior import compound, det_seq, lambda_bar, wedge_seq  # noqa: E402
from projmonoid.hinge import (  # noqa: E402
    LinearRelation, hinge_equiv, hinge_to_MH, image_sum, in_MH, is_hinge, varphi,
)
from projmonoid.limits import EpsFamily, eval_family, limit, projective_distance  # noqa: E402
from projmonoid.linalg import Matrix, Subspace, restrict  # noqa: E402
from projmonoid.monoid import (  # noqa: E402
    MSeq, is_invertible, mul, mul_mseq, mul_raw, pi, pmseq_from_matrices, projectivize, psi, raw_new, singleton,
)
from projmonoid.worked_examples import (  # noqa: E402
    DISC_A0, DISC_A1, DISC_B0, DISC_B1, HINGE_A0, HINGE_A1, HINGE_A2, HINGE_P0, HINGE_P2,
    MH_A0, MH_A1, MH_B0, MH_B1, PENCIL_A0, PENCIL_A1, SWAP_A, SWAP_B, WEDGE_A0, WEDGE_A1,
    disc_families, hinge_family, wedge_cube_expected, wedge_family,
)

SEED = 0


def criterion_1():
    ab = pmseq_from_matrices([SWAP_A, SWAP_B])
    ba = pmseq_from_matrices([SWAP_B, SWAP_A])
    rng = random.Random(SEED)
    pts = [ProjPoint([1, 0]), ProjPoint([0, 1])] + [sampling.point(rng, 2) for _ in range(100)]
    ok = ab != ba and maps_equal_on(ab, ba, pts)
    return ok, f"distinct elements, equal action on {len(pts)} points"


def criterion_2():
    rng = random.Random(SEED)
    v1 = Subspace.coordinate(3, [1, 2])
    expected = projectivize(MSeq(3, (Subspace.full(3), v1, Subspace.zero(3)),
                                 (PENCIL_A0, restrict(PENCIL_A1, v1))))
    families = [EpsFamily.of([PENCIL_A0, PENCIL_A1])]
    for k in range(2, 6):
        pad = [Matrix.zeros(3, 3)] * (k - 2) + [sampling.matrix(rng, 3, 3)]
        families.append(EpsFamily.of([PENCIL_A0, PENCIL_A1] + pad))
    ok = all(limit(f) == expected for f in families)
    return ok, f"{len(families)} families (with and without padding terms)"


def criterion_3():
    fa, fb = disc_families()
    lhs = mul(limit(fa), limit(fb))
    rhs = limit(fa @ fb)
    ok = (lhs == pmseq_from_matrices([DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1])
          and rhs == pmseq_from_matrices([DISC_A0 @ DISC_B1, DISC_A1 @ DISC_B0])
          and lhs != rhs)
    return ok, "product of limits differs from limit of product"


def criterion_4():
    p = psi(mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1])))
    a = pi(p)
    ok = (p.terms == (MH_B0 @ MH_A0, MH_B0 @ MH_A1)
          and image_sum(a) == Subspace.coordinate(2, [0])
          and not in_MH(a))
    return ok, "psi keeps (B0A0, B0A1); image span{e1}; outside M_H"


def criterion_5():
    h = varphi(pi(raw_new([HINGE_A0, HINGE_A2])))
    p2 = LinearRelation.span([([0, 1], [0, 1]), ([0, 0], [1, 0])], 2)
    ok = (h.relations == (HINGE_P0, HINGE_P2)
          and HINGE_P0 == LinearRelation.graph(HINGE_A0) and HINGE_P2 == p2
          and limit(hinge_family()) == pmseq_from_matrices([HINGE_A0, HINGE_A1]))
    return ok, "varphi = (P0, P2); limit = P pi(A0, A1)"


def criterion_6():
    a = pi(raw_new([WEDGE_A0, WEDGE_A1]))
    exact = wedge_seq(a, 3).matrix == wedge_cube_expected()
    lb = lambda_bar(limit(wedge_family()))[3]
    eps = Fraction(1, 10**5)
    # eps^-1 only rescales, which the projective distance ignores
    approx = compound(eval_family(wedge_family(), eps), 3).scale(1 / eps)
    dist = projective_distance([complex(x) for x in lb.matrix.entries],
                               [complex(x) for x in approx.entries])
    ok = exact and lb.matrix == wedge_cube_expected() and dist <= 1e-6
    return ok, f"exact part {'ok' if exact else 'wrong'}; float distance {dist:.3e} (tolerance 1e-06)"


def criterion_7():
    rng = random.Random(SEED)
    good = 0
    for _ in range(200):
        n = rng.choice([2, 3, 4])
        a, b, c = (sampling.pmseq(rng, n) for _ in range(3))
        good += mul(mul(a, b), c) == mul(a, mul(b, c))
    return good == 200, f"{good}/200 triples associative"


def criterion_8():
    rng = random.Random(SEED)
    good = 0
    for _ in range(200):
        n = rng.choice([2, 3, 4])
        a, b = sampling.rawseq(rng, n), sampling.rawseq(rng, n)
        good += psi(mul_raw(psi(a), psi(b))) == psi(mul_raw(a, b))
    return good == 200, f"{good}/200 pairs compatible"


def criterion_9():
    rng = random.Random(SEED)
    good = total = 0
    for _ in range(200):
        n = rng.choice([2, 3, 4])
        a, b = sampling.pmseq(rng, n), sampling.pmseq(rng, n)
        ab = mul(a, b)
        for _ in range(20):
            x = sampling.point(rng, n)
            total += 1
            good += phi_apply(ab, x) == phi_apply(a, phi_apply(b, x))
    return good == total == 4000, f"{good}/{total} point evaluations agree"


def criterion_10():
    rng = random.Random(SEED)
    units = 0
    for _ in range(100):
        n = rng.randint(1, 4)
        g = sampling.invertible(rng, n)
        pg, pinv, one = singleton(g), singleton(g.inverse()), singleton(Matrix.identity(n))
        units += is_invertible(pg) and mul(pg, pinv) == one and mul(pinv, pg) == one
    non_units = sum(not is_invertible(sampling.multi_term_pmseq(rng, rng.randint(2, 4)))
                    for _ in range(100))
    return units == 100 and non_units == 100, f"{units}/100 units, {non_units}/100 non-units"


def criterion_11():
    rng = random.Random(SEED)
    good = 0
    for _ in range(100):
        a = sampling.mh_element(rng, rng.randint(1, 4))
        h = varphi(a)
        good += (is_hinge(h.relations) and all(p.dim == a.n for p in h.relations)
                 and hinge_equiv(varphi(hinge_to_MH(h)), h))
    return good == 100, f"{good}/100 elements"


def fixture_sequences():
    raws = [
        [SWAP_A, SWAP_B], [SWAP_B, SWAP_A], [DISC_A0, DISC_A1], [DISC_B0, DISC_B1],
        [DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1], [DISC_A0 @ DISC_B1, DISC_A1 @ DISC_B0],
        [MH_A0, MH_A1], [MH_B0, MH_B1], [HINGE_A0, HINGE_A1], [HINGE_A0, HINGE_A2],
        [WEDGE_A0, WEDGE_A1], [PENCIL_A0, PENCIL_A1],
    ]
    out = [pi(raw_new(r)) for r in raws]
    out.append(pi(mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1]))))
    out.append(hinge_to_MH([HINGE_P0, HINGE_P2]))
    out.append(limit(hinge_family()))
    return out


def criterion_12():
    rng = random.Random(SEED)
    seqs = fixture_sequences()
    for _ in range(100):
        n = rng.randint(1, 4)
        seqs.append(sampling.mseq(rng, n))
        # products leave M_H often, which balances the two sides
        seqs.append(mul_mseq(sampling.mseq(rng, n), sampling.mseq(rng, n)))
    good = sum((not det_seq(a).is_zero()) == in_MH(a) for a in seqs)
    inside = sum(in_MH(a) for a in seqs)
    return good == len(seqs), f"{good}/{len(seqs)} agree ({inside} in M_H, {len(seqs) - inside} outside)"


def criterion_13():
    rng = random.Random(SEED)
    failed = 0
    for _ in range(50):
        f = sampling.family(rng, rng.randint(1, 4))
        ok, _ = check_family(rng, f)
        failed += not ok
    return failed == 0, f"{50 - failed}/50 families converge as expected"


CRITERIA = [
    (1, "two orderings: distinct elements, same action", criterion_1),
    (2, "limit of the 3x3 pencil", criterion_2),
    (3, "non-continuity of the product", criterion_3),
    (4, "psi of a product leaves M_H", criterion_4),
    (5, "hinge of (A0, A2) and limit of the quadratic family", criterion_5),
    (6, "degree-3 wedge of the 4x4 limit and its float approximation", criterion_6),
    (7, "associativity, 200 triples", criterion_7),
    (8, "psi-compatibility, 200 pairs", criterion_8),
    (9, "homomorphism, 200 pairs x 20 points", criterion_9),
    (10, "units", criterion_10),
    (11, "hinge round trip, 100 elements", criterion_11),
    (12, "Det != 0 iff M_H", criterion_12),
    (13, "float limit oracle, 50 families", criterion_13),
]


def report(number, title, fn):
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failed criterion
        ok, detail = False, f"{type(e).__name__}: {e}"
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} -- {detail}"


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, line = report(number, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
