"""Seeded random phase-space points for tests and the CLI.

Group points are sampled with independent uniform [-1, 1] entries,
resampled until det > 0.1, then scaled by det^(-1/n) so the determinant
is 1 to rounding.  Covectors get independent uniform [-1, 1] entries.
"""

import numpy as np

from .hamiltonian import CotangentPoint


def group_point(n: int, rng: np.random.Generator) -> np.ndarray:
    """A well-conditioned unit-determinant matrix."""
    while True:
        a = rng.uniform(-1.0, 1.0, (n, n))
        d = np.linalg.det(a)
        if d > 0.1:
            return a * d ** (-1.0 / n)


def cotangent_point(n: int, rng: np.random.Generator) -> CotangentPoint:
    """A random on-manifold phase-space point with unit-scale covector."""
    return CotangentPoint(group_point(n, rng), rng.uniform(-1.0, 1.0, (n, n)))


def point_rngs(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators split from one seed, one per test point."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]
