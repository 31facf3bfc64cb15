import random

import pytest

from projmonoid import sampling
from projmonoid.action import maps_equal_on
from projmonoid.errors import InvalidHingeError, NotInMHError
from projmonoid.hinge import (
    Hinge, LinearRelation, dom, hinge_equiv, hinge_to_MH, im, in_MH, indef, is_hinge,
    ker_rel, varphi,
)
from projmonoid.linalg import Matrix, Subspace
from projmonoid.monoid import mul, mul_raw, pi, pmseq_from_matrices, projectivize, raw_new, singleton
from projmonoid.worked_examples import (
    HINGE_A0, HINGE_A2, HINGE_P0, HINGE_P2, MH_A0, MH_A1, MH_B0, MH_B1,
)


def split_relation_2d():
    return LinearRelation.span([([1, 0], [0, 0]), ([0, 0], [0, 1])], 2)


def test_parts_of_a_graph():
    rng = random.Random(0)
    g = sampling.invertible(rng, 3)
    p = LinearRelation.graph(g)
    full, zero = Subspace.full(3), Subspace.zero(3)
    assert (dom(p), im(p), ker_rel(p), indef(p)) == (full, full, zero, zero)


def test_parts_of_p2():
    assert dom(HINGE_P2) == Subspace.coordinate(2, [1])
    assert indef(HINGE_P2) == Subspace.coordinate(2, [0])
    assert im(HINGE_P2) == Subspace.full(2)
    assert ker_rel(HINGE_P2).is_zero()


def test_rank_nullity_on_projections():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 4)
        k = rng.randint(0, 2 * n)
        p = LinearRelation(Subspace.span([[sampling.scalar(rng) for _ in range(2 * n)]
                                          for _ in range(k)], 2 * n))
        assert dom(p).dim + indef(p).dim == p.dim == im(p).dim + ker_rel(p).dim


def test_is_hinge_examples():
    assert is_hinge([LinearRelation.graph(Matrix.identity(2))])
    assert is_hinge([HINGE_P0, HINGE_P2])
    assert not is_hinge([split_relation_2d()])
    assert not is_hinge([HINGE_P2, HINGE_P0])
    assert not is_hinge([HINGE_P0])


def test_in_mh_examples():
    assert in_MH(pi(raw_new([HINGE_A0, HINGE_A2])))
    prod = pi(mul_raw(raw_new([MH_B0, MH_B1]), raw_new([MH_A0, MH_A1])))
    assert not in_MH(prod)
    assert in_MH(pi(raw_new([Matrix.from_rows([[0, 1], [1, 0]])])))


def test_mh_not_closed_under_product():
    a = pmseq_from_matrices([MH_A0, MH_A1])
    b = pmseq_from_matrices([MH_B0, MH_B1])
    assert in_MH(a) and in_MH(b) and not in_MH(mul(b, a))


def test_varphi_examples():
    h = varphi(pi(raw_new([HINGE_A0, HINGE_A2])))
    assert h.relations == (HINGE_P0, HINGE_P2)
    assert HINGE_P0 == LinearRelation.graph(HINGE_A0)
    g = Matrix.from_rows([[1, 2], [3, 4]])
    assert varphi(pi(raw_new([g]))).relations == (LinearRelation.graph(g),)
    with pytest.raises(NotInMHError):
        varphi(pi(raw_new([HINGE_A0, Matrix.from_rows([[0, 1], [0, 0]])])))


def test_varphi_random_outputs_are_hinges():
    rng = random.Random(2)
    for _ in range(60):
        a = sampling.mh_element(rng, rng.randint(1, 4))
        h = varphi(a)
        assert is_hinge(h.relations)
        assert all(p.dim == a.n for p in h.relations)


def test_hinge_to_mh_examples():
    g = Matrix.from_rows([[1, 1], [0, 2]])
    back = hinge_to_MH(Hinge(2, (LinearRelation.graph(g),)))
    assert back.maps == (g,)
    back = hinge_to_MH(Hinge(2, (HINGE_P0, HINGE_P2)))
    assert in_MH(back)
    assert hinge_equiv(varphi(back), Hinge(2, (HINGE_P0, HINGE_P2)))
    with pytest.raises(InvalidHingeError):
        hinge_to_MH(Hinge(2, (split_relation_2d(),)))


def test_round_trip():
    rng = random.Random(3)
    for _ in range(60):
        a = sampling.mh_element(rng, rng.randint(1, 4))
        h = varphi(a)
        assert hinge_equiv(varphi(hinge_to_MH(h)), h)


def test_hinge_equiv_cases():
    rng = random.Random(4)
    for _ in range(30):
        h = varphi(sampling.mh_element(rng, rng.randint(1, 4)))
        assert hinge_equiv(h, h)
        scaled = Hinge(h.n, tuple(p.scaled(sampling.nonzero_scalar(rng)) for p in h.relations))
        assert hinge_equiv(h, scaled) and hinge_equiv(scaled, h)
    one = Hinge(2, (LinearRelation.graph(Matrix.identity(2)),))
    other = Hinge(2, (LinearRelation.graph(Matrix.diag([1, 2])),))
    assert not hinge_equiv(one, other)
    assert not hinge_equiv(one, Hinge(2, (HINGE_P0, HINGE_P2)))


def stratified_points(rng, a, b, count):
    # uniform points almost never reach the lower strata, so draw from each one
    strata = [(s.chain[i], s.chain[i + 1]) for s in (a, b) for i in range(len(s.maps))]
    return [sampling.point(rng, a.n, *strata[k % len(strata)]) for k in range(count)]


def test_sampled_injectivity_on_mh():
    rng = random.Random(5)
    checked = 0
    for _ in range(40):
        n = rng.randint(1, 3)
        a = projectivize(sampling.mh_element(rng, n))
        candidates = [sampling.pmseq(rng, n), mul(a, singleton(sampling.invertible(rng, n))),
                      mul(singleton(sampling.invertible(rng, n)), a)]
        for b in candidates:
            if b != a:
                checked += 1
                assert not maps_equal_on(a, b, stratified_points(rng, a, b, 200))
    assert checked > 50
