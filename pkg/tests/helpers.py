"""Shared numerical-oracle helpers for the limit and exterior suites."""

from fractions import Fraction

from projmonoid import sampling
from projmonoid.action import phi_apply
from projmonoid.limits import family_point_distance, limit

EPSILONS = (Fraction(1, 10**3), Fraction(1, 10**4), Fraction(1, 10**5))
FLOAT_SLACK = 1e-12


def stratum_points(rng, a, per_stratum=3):
    """Points x with x in V_i but not in V_{i+1}, for every stratum i of ``a``."""
    out = []
    for i in range(len(a.maps)):
        for _ in range(per_stratum):
            out.append((i, sampling.point(rng, a.n, within=a.chain[i], avoid=a.chain[i + 1])))
    return out


def oracle_distances(f, a, x):
    """Distances between Phi(a)(x) and A(eps) x over the standard epsilons."""
    y = phi_apply(a, x)
    return [family_point_distance(y.coords, f, x.coords, eps) for eps in EPSILONS]


def non_increasing(ds, slack=FLOAT_SLACK):
    return all(b <= a + slack for a, b in zip(ds, ds[1:]))


def check_family(rng, f, per_stratum=3):
    """(ok, details) for the limit oracle on one family."""
    a = limit(f)
    bad = []
    for i, x in stratum_points(rng, a, per_stratum):
        ds = oracle_distances(f, a, x)
        if not non_increasing(ds) or (i == 0 and not ds[-1] < 1e-4):
            bad.append((i, x, ds))
    return not bad, bad
