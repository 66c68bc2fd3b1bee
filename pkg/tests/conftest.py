from __future__ import annotations

from itertools import product

import pytest

from cubisect import BlockRecipe, Multigraph, curated_suite, generate

SEEDS_PER_RECIPE = 8


def corpus_recipes() -> list[tuple[int, int, int]]:
    """Every realizable (k, t, p) with k, p in 0..3, t in {0, 2, 4}, n <= 16."""
    out = []
    for k, t, p in product(range(4), (0, 2, 4), range(4)):
        n = 4 * k + 3 * t + 2 * p
        if n == 0 or n > 16 or (k, t, p) == (1, 0, 0):
            continue
        out.append((k, t, p))
    return out


@pytest.fixture(scope="session")
def fixtures() -> dict[str, Multigraph]:
    return dict(curated_suite())


@pytest.fixture(scope="session")
def corpus() -> list[tuple[tuple[int, int, int, int], Multigraph]]:
    """216 generated instances spanning the recipe grid, keyed by
    (k, t, p, seed)."""
    out = []
    for k, t, p in corpus_recipes():
        for seed in range(SEEDS_PER_RECIPE):
            out.append(((k, t, p, seed), generate(BlockRecipe(k, t, p, seed=seed))))
    return out


@pytest.fixture(scope="session")
def odd_k_corpus(corpus):
    return [(key, g) for key, g in corpus if key[0] % 2 == 1]
