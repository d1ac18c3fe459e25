"""Shared fixtures and random-instance helpers."""

import random

import pytest

from singulocus import DEGREVLEX, LEX, NEGDEGREVLEX, Ideal, RingSpec, RMat


@pytest.fixture
def qxy():
    return RingSpec(("x", "y"), DEGREVLEX)


@pytest.fixture
def qxy_local():
    return RingSpec(("x", "y"), NEGDEGREVLEX)


@pytest.fixture
def qxyz():
    return RingSpec(("x", "y", "z"), DEGREVLEX)


def rand_poly(rng: random.Random, ring: RingSpec, max_deg=2, terms=3, in_m=False):
    """Random sparse polynomial; entries in the maximal ideal when in_m."""
    p = ring.zero
    nv = len(ring.vars)
    for _ in range(rng.randint(1, terms)):
        while True:
            exps = [0] * nv
            budget = rng.randint(1 if in_m else 0, max_deg)
            for _ in range(budget):
                exps[rng.randrange(nv)] += 1
            if not in_m or sum(exps) > 0:
                break
        coeff = ring.field(rng.randint(-3, 3))
        p = p + ring.monomial(exps, coeff)
    return p


def rand_matrix(rng: random.Random, ring: RingSpec, m, n, max_deg=2, in_m=True):
    return RMat(
        ring, [[rand_poly(rng, ring, max_deg=max_deg, terms=2, in_m=in_m) for _ in range(n)] for _ in range(m)]
    )


def rand_symmetric(rng, ring, m, max_deg=2):
    rows = [[ring.zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            e = rand_poly(rng, ring, max_deg=max_deg, terms=2, in_m=True)
            rows[i][j] = e
            rows[j][i] = e
    return RMat(ring, rows)


def rand_skew(rng, ring, m, max_deg=2, in_m=True):
    rows = [[ring.zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            e = rand_poly(rng, ring, max_deg=max_deg, terms=2, in_m=in_m)
            rows[i][j] = e
            rows[j][i] = -e
    return RMat(ring, rows)
