"""Deterministic random simplicial complexes for cross-checks."""

from __future__ import annotations

import random

from .complex import SimplicialComplex


def random_complex(rng: random.Random, d: int, max_vertices: int = 7, max_facets: int = 5) -> SimplicialComplex:
    """A complex whose largest facet has exactly ``d`` vertices; may be non-pure."""
    n = rng.randint(d, max(d, max_vertices))
    ground = list(range(1, n + 1))
    facets = [rng.sample(ground, d)]
    for _ in range(rng.randint(0, max_facets - 1)):
        facets.append(rng.sample(ground, rng.randint(1, d)))
    return SimplicialComplex.from_facets(facets, ground_size=n)


def corpus(d: int, count: int = 50, seed: int = 0, max_vertices: int = 7) -> list[SimplicialComplex]:
    rng = random.Random(f"{seed}:{d}")
    return [random_complex(rng, d, max_vertices) for _ in range(count)]
