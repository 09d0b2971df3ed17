"""Deterministic family generators for experiments and seeded tests.

Identical spec (shape, dim, count, seed, params) gives a bit-identical
family: all randomness flows through one random.Random(seed) and every
drawn quantity is a Fraction with a fixed denominator.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .core import ConvexBody, Family

DEN = 100  # grid denominator for all jitter draws


@dataclass(frozen=True)
class GeneratorSpec:
    dim: int
    count: int
    shape: str  # boxes | random-halfspaces | shifted-core
    seed: int
    params: dict = field(default_factory=dict)


def _frac(rng, lo, hi):
    return Fraction(rng.randint(int(lo * DEN), int(hi * DEN)), DEN)


def _boxes(spec, rng):
    jitter = Fraction(spec.params.get("jitter", Fraction(1, 4)))
    size = Fraction(spec.params.get("size", 1))
    bodies = []
    for _ in range(spec.count):
        lows = []
        highs = []
        for _ in range(spec.dim):
            lo = _frac(rng, -jitter, jitter) if jitter else Fraction(0)
            lows.append(lo)
            highs.append(lo + size)
        bodies.append(ConvexBody.box(lows, highs))
    return bodies


def _shifted_core(spec, rng):
    """Every body contains the planted core segment (0,..,0)-(1,0,..,0),
    so all subfamily intersections have diameter (and e1-width) >= 1."""
    jitter = Fraction(spec.params.get("jitter", Fraction(1, 5)))
    thick = Fraction(spec.params.get("thickness", Fraction(1, 10)))
    bodies = []
    for _ in range(spec.count):
        lows = [-_frac(rng, 0, jitter)]
        highs = [1 + _frac(rng, 0, jitter)]
        for _ in range(spec.dim - 1):
            lows.append(-thick - _frac(rng, 0, jitter))
            highs.append(thick + _frac(rng, 0, jitter))
        bodies.append(ConvexBody.box(lows, highs))
    return bodies


def _random_halfspaces(spec, rng):
    """Box bodies with extra random cuts that keep a planted witness point,
    so bodies stay nonempty and bounded but are no longer boxes."""
    extra = int(spec.params.get("extra_rows", 3))
    side = Fraction(spec.params.get("size", 2))
    bodies = []
    for _ in range(spec.count):
        center = tuple(_frac(rng, -1, 1) for _ in range(spec.dim))
        lows = [c - side / 2 for c in center]
        highs = [c + side / 2 for c in center]
        box = ConvexBody.box(lows, highs)
        A = list(box.A)
        b = list(box.b)
        for _ in range(extra):
            normal = tuple(Fraction(rng.randint(-5, 5)) for _ in range(spec.dim))
            if all(x == 0 for x in normal):
                continue
            slack = _frac(rng, Fraction(1, 2), 2)
            A.append(normal)
            b.append(sum(n * c for n, c in zip(normal, center)) + slack)
        bodies.append(ConvexBody(A, b))
    return bodies


_SHAPES = {
    "boxes": _boxes,
    "shifted-core": _shifted_core,
    "random-halfspaces": _random_halfspaces,
}


def generate(spec):
    if spec.shape not in _SHAPES:
        raise ValueError(f"unknown shape {spec.shape!r}; "
                         f"pick one of {sorted(_SHAPES)}")
    if spec.count < 1 or spec.dim < 1:
        raise ValueError("count and dim must be positive")
    rng = Random(spec.seed)
    return Family.of(_SHAPES[spec.shape](spec, rng))
