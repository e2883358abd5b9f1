import random
from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("exact", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("exact")


@pytest.fixture
def rng():
    return random.Random(12345)


def rational(rng, num=9, den=5):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))
