import random

import pytest

from ncbinom import AlgebraContext


@pytest.fixture
def ctx():
    return AlgebraContext(("a", "b", "c"), ("q", "h"))


def random_element(rng, ctx, max_terms=2, max_len=2, with_params=False):
    """Small random element with integer coefficients (seeded rng)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        word = tuple(rng.choice(ctx.generators) for _ in range(length))
        terms[word] = terms.get(word, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    e = ctx.element(terms)
    if with_params and ctx.parameters and rng.random() < 0.4:
        e = e.scale(ctx.param(rng.choice(ctx.parameters)) + rng.randint(0, 2))
    return e


def seeded(seed):
    return random.Random(seed)
