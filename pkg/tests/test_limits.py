import random
from fractions import Fraction

import pytest

from projmonoid import sampling
from projmonoid.errors import DimensionMismatchError, NotConvergentError
from projmonoid.limits import (
    EpsFamily, eval_family, eval_family_naive, limit, limit_with_orders, projective_distance,
)
from projmonoid.linalg import Matrix, Subspace, annihilator, restrict
from projmonoid.monoid import mul, pmseq_from_matrices, projectivize, singleton
from projmonoid.scalars import GR
from projmonoid.worked_examples import (
    DISC_A0, DISC_A1, DISC_B0, DISC_B1, HINGE_A0, HINGE_A1, PENCIL_A0, PENCIL_A1,
    disc_families, hinge_family, pencil_family,
)

from helpers import check_family


def test_pencil_limit():
    a = limit(pencil_family())
    assert [v.dim for v in a.chain] == [3, 2, 0]
    assert a.chain[1] == Subspace.coordinate(3, [1, 2])
    assert a.maps[0] == restrict(PENCIL_A0, Subspace.full(3))
    assert a.maps[1] == restrict(PENCIL_A1, a.chain[1])


def test_constant_invertible_family():
    g = Matrix.from_rows([[2, 1], [1, 1]])
    assert limit(EpsFamily.of([g])) == singleton(g)


def test_hinge_family_limit_uses_first_order_term():
    a, orders = limit_with_orders(hinge_family())
    assert orders == [0, 1]
    assert projectivize(a) == pmseq_from_matrices([HINGE_A0, HINGE_A1])


def test_not_convergent():
    z = Matrix.zeros(2, 2)
    e11 = Matrix.diag([1, 0])
    with pytest.raises(NotConvergentError):
        limit(EpsFamily.of([e11, e11]))
    with pytest.raises(NotConvergentError):
        EpsFamily.of([z, z])
    with pytest.raises(DimensionMismatchError):
        EpsFamily(2, (Matrix.identity(3),))


def test_eval():
    f = pencil_family()
    assert eval_family(f, 0) == PENCIL_A0
    assert eval_family(f, 1) == PENCIL_A0 + PENCIL_A1
    rng = random.Random(0)
    for _ in range(50):
        f = sampling.family(rng, rng.randint(1, 4))
        t = GR(Fraction(rng.randint(-5, 5), rng.randint(1, 7)), rng.randint(-2, 2))
        assert eval_family(f, t) == eval_family_naive(f, t)


def test_truncation_stability():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 4)
        f = sampling.family(rng, n)
        a, orders = limit_with_orders(f)
        # a high-order C that vanishes on W_1 never gets selected
        k = max(orders) + 1
        if len(a.chain) > 2:
            ann = annihilator(a.chain[1])
            c = sampling.matrix(rng, n, ann.rows) @ ann
            padded = EpsFamily(n, f.coeffs + (Matrix.zeros(n, n),) * (k + 3 - len(f.coeffs)) + (c,))
            assert limit(padded) == limit(f)
        tail = EpsFamily(n, f.coeffs + (Matrix.zeros(n, n),) * 2 + (sampling.matrix(rng, n, n),))
        assert limit(tail).maps[0] == limit(f).maps[0]


def test_scaling_invariance():
    rng = random.Random(2)
    for _ in range(50):
        f = sampling.family(rng, rng.randint(1, 4))
        lim = limit(f)
        assert limit(f.scale(sampling.nonzero_scalar(rng))) == lim
        assert limit(f.shift(rng.randint(1, 3))) == lim


def test_limit_is_a_valid_element():
    rng = random.Random(3)
    for _ in range(50):
        a = limit(sampling.family(rng, rng.randint(1, 4)))
        a.check()


def test_noncontinuity_of_mul():
    fa, fb = disc_families()
    lhs = mul(limit(fa), limit(fb))
    rhs = limit(fa @ fb)
    assert lhs == pmseq_from_matrices([DISC_A1 @ DISC_B0, DISC_A0 @ DISC_B1])
    assert rhs == pmseq_from_matrices([DISC_A0 @ DISC_B1, DISC_A1 @ DISC_B0])
    assert lhs != rhs


def test_product_family_limit_is_pi_of_raw_terms():
    # the product family's lowest orders recover pi of the raw product
    fa, fb = disc_families()
    prod = fa @ fb
    assert prod.coeffs[0].is_zero() and prod.coeffs[3].is_zero()


def test_projective_distance():
    assert projective_distance([1, 0], [2j, 0]) == pytest.approx(0, abs=1e-15)
    assert projective_distance([1, 0], [0, 1]) == pytest.approx(2 ** 0.5)
    d = projective_distance([1, 1e-9], [1, 0])
    assert d == pytest.approx(1e-9, rel=1e-6)
    with pytest.raises(ValueError):
        projective_distance([0, 0], [1, 0])


@pytest.mark.parametrize("family", [pencil_family, hinge_family,
                                    lambda: disc_families()[0], lambda: disc_families()[1]])
def test_oracle_on_worked_families(family):
    ok, bad = check_family(random.Random(4), family())
    assert ok, bad


def test_oracle_on_random_families():
    rng = random.Random(5)
    for _ in range(20):
        f = sampling.family(rng, rng.randint(1, 3))
        ok, bad = check_family(rng, f)
        assert ok, bad
