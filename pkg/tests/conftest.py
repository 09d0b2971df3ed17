import random
from fractions import Fraction as F

import pytest

from hellydiam.core import ConvexBody, Family, pt


def interval(a, b):
    """1-D body [a, b]."""
    return ConvexBody([(F(1),), (F(-1),)], [F(b), -F(a)])


def interval_family(pairs):
    return Family.of([interval(a, b) for a, b in pairs])


def core_box_family(rng, count, dim=2, jitter=20):
    """Boxes all containing the planted segment (0,..,0)-(1,0,..,0)."""
    bodies = []
    for _ in range(count):
        lows = [F(-rng.randint(0, jitter), 100)]
        highs = [1 + F(rng.randint(0, jitter), 100)]
        for _ in range(dim - 1):
            lows.append(F(-rng.randint(5, 15), 100))
            highs.append(F(rng.randint(5, 15), 100))
        bodies.append(ConvexBody.box(lows, highs))
    return Family.of(bodies)


def random_point(rng, dim, span=4, den=8):
    return pt(*[F(rng.randint(-span * den, span * den), den)
                for _ in range(dim)])


@pytest.fixture
def rng():
    return random.Random(20240817)
