"""Shared fixture complexes used across the suite."""

from itertools import combinations

import pytest

from simplicial_games import SimplicialComplex, full_simplex


def figure_a() -> SimplicialComplex:
    """Three triangles sharing vertex 3 pairwise along edges."""
    return SimplicialComplex.from_facets(5, [[1, 2, 3], [2, 3, 5], [3, 4, 5]])


def figure_b() -> SimplicialComplex:
    """Two triangles glued at the single vertex 3."""
    return SimplicialComplex.from_facets(5, [[1, 2, 3], [3, 4, 5]])


def cycle(n: int) -> SimplicialComplex:
    edges = [[i, i + 1] for i in range(1, n)] + [[n, 1]]
    return SimplicialComplex.from_facets(n, edges)


def boundary_simplex(n: int) -> SimplicialComplex:
    """All proper subsets of [n]."""
    return SimplicialComplex.from_facets(
        n, [list(c) for c in combinations(range(1, n + 1), n - 1)]
    )


def petersen() -> SimplicialComplex:
    outer = [[i, i % 5 + 1] for i in range(1, 6)]
    spokes = [[i, i + 5] for i in range(1, 6)]
    inner = [[i + 5, (i + 1) % 5 + 5 + 1] for i in range(1, 6)]
    return SimplicialComplex.from_facets(10, outer + spokes + inner)


def all_fixtures() -> dict[str, SimplicialComplex]:
    """The acceptance corpus, keyed by a stable name."""
    fixtures = {
        "figure_a": figure_a(),
        "figure_b": figure_b(),
        "boundary_simplex_4": boundary_simplex(4),
        "skeleton_5_2": full_simplex(5).skeleton(2),
        "cycle_4": cycle(4),
        "cycle_5": cycle(5),
        "petersen": petersen(),
    }
    for n in range(2, 6):
        fixtures[f"simplex_{n}"] = full_simplex(n)
    return fixtures


@pytest.fixture(scope="session")
def fixtures() -> dict[str, SimplicialComplex]:
    return all_fixtures()
