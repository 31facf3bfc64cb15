import random

import pytest
from hypothesis import settings, strategies as st

from projmonoid.linalg import Matrix
from projmonoid.scalars import GaussianRational

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(GaussianRational, small_fraction, small_fraction)
nonzero_scalars = scalars.filter(lambda x: not x.is_zero())


def matrices(rows, cols, elements=None):
    if elements is None:
        elements = st.integers(-2, 2).map(GaussianRational)
    return st.lists(elements, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(rows, cols, xs))


@pytest.fixture
def rng():
    return random.Random(12345)
