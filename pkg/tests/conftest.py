"""Shared corpus: every small generator-library member plus a seeded
batch of random complexes.

The library corpus enumerates all integer-parameter family instances up
to LIBRARY_MAX_M vertices, cones over each of them, and joins of a seed
list of small members.  The random corpus is reproducible from the
constants below.
"""

from __future__ import annotations

import itertools as it
import random

import pytest

from momangle import (
    boundary_simplex,
    cone,
    disjoint_points,
    from_facets,
    polygon,
    simplex,
    stacked_sphere,
)

RANDOM_SEED = 20260816
RANDOM_COUNT = 200
LIBRARY_MAX_M = 8
RANDOM_MAX_M = 7


def int_family_members(max_m):
    """Every integer-parameter family instance on at most max_m vertices."""
    members = [simplex(n) for n in range(-1, max_m)]
    members += [boundary_simplex(n) for n in range(1, max_m)]
    members += [polygon(m) for m in range(3, max_m + 1)]
    members += [
        stacked_sphere(d, k)
        for d in range(1, max_m - 1)
        for k in range(max_m - d - 1)
    ]
    members += [disjoint_points(m) for m in range(1, max_m + 1)]
    return list(dict.fromkeys(members))


JOIN_SEEDS = (
    simplex(0),
    simplex(1),
    boundary_simplex(1),
    boundary_simplex(2),
    boundary_simplex(3),
    polygon(4),
    disjoint_points(2),
    disjoint_points(3),
)


def library_members(max_m=LIBRARY_MAX_M):
    """Generator-library corpus: atoms, cones of atoms, joins of seeds."""
    atoms = int_family_members(max_m)
    members = list(atoms)
    members += [cone(K) for K in atoms if K.m < max_m]
    members += [
        a.join(b)
        for a, b in it.combinations_with_replacement(JOIN_SEEDS, 2)
        if a.m + b.m <= max_m
    ]
    return list(dict.fromkeys(members))


def random_members(count=RANDOM_COUNT, max_m=RANDOM_MAX_M, seed=RANDOM_SEED):
    """Deterministic batch of random complexes with every vertex covered."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.randint(3, max_m)
        facets = [
            tuple(rng.sample(range(1, m + 1), rng.randint(1, min(m, 4))))
            for _ in range(rng.randint(2, m + 2))
        ]
        if set().union(*map(set, facets)) != set(range(1, m + 1)):
            continue
        out.append(from_facets(m, facets))
    return out


@pytest.fixture(scope="session")
def library_corpus():
    return library_members()


@pytest.fixture(scope="session")
def random_corpus():
    return random_members()


@pytest.fixture(scope="session")
def corpus(library_corpus, random_corpus):
    return [*library_corpus, *random_corpus]
