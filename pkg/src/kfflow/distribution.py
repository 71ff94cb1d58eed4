"""Distributions on SL(n, R) from eigenvectors of the Gram matrix.

A distribution is selected by the dimension n and a subset I of the
diagonal indices {1, ..., n-2}.  Its generating set consists of all X_r
and Y_r plus Z_l for l in I; the trace form restricted to that set is
block diagonal with signature blocks 2*Id, -2*Id and a P_{#I} tail.
Bracket generation of the full algebra is certified by span closure.
"""

import operator
from dataclasses import dataclass

import numpy as np

from .algebra import BasisLabel, SpanBuilder, bracket, p_matrix, p_matrix_inverse
from .spectral import eigen_family


class ConsistencyError(RuntimeError):
    """Two construction routes that must agree exactly did not."""


@dataclass(frozen=True)
class DistributionSpec:
    """Dimension n plus the sorted diagonal index set I (subset of 1..n-2)."""

    n: int
    I: tuple[int, ...] = ()

    def __post_init__(self):
        n = operator.index(self.n)
        if n < 2:
            raise ValueError("n must be an integer >= 2")
        members = tuple(sorted({operator.index(i) for i in self.I}))
        for i in members:
            if not 1 <= i <= n - 2:
                raise ValueError(f"diagonal index {i} outside 1..{n - 2} for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "I", members)

    @property
    def algebra_dim(self) -> int:
        return self.n * self.n - 1

    @property
    def distribution_dim(self) -> int:
        return self.n * (self.n - 1) + len(self.I)


@dataclass(frozen=True)
class GeneratingSet:
    """Ordered generators of the distribution: X block, Y block, Z block."""

    spec: DistributionSpec
    labels: tuple[BasisLabel, ...]
    matrices: np.ndarray  # shape (dim, n, n), read-only


def generating_set(spec: DistributionSpec) -> GeneratingSet:
    """The generators X_1..X_k, Y_1..Y_k, then Z_l for l in I ascending."""
    fam = eigen_family(spec.n)
    npairs = spec.n * (spec.n - 1) // 2
    labels = [BasisLabel("X", r) for r in range(1, npairs + 1)]
    labels += [BasisLabel("Y", r) for r in range(1, npairs + 1)]
    labels += [BasisLabel("Z", ell) for ell in spec.I]
    mats = list(fam.X) + list(fam.Y) + [fam.Z[ell - 1] for ell in spec.I]
    arr = np.array(mats)
    arr.setflags(write=False)
    return GeneratingSet(spec, tuple(labels), arr)


@dataclass(frozen=True)
class RestrictedMetric:
    """The trace form restricted to the distribution, with its inverse.

    index is the dimension of a maximal negative-definite subspace;
    corank the codimension of the distribution in the full algebra.
    """

    dim: int
    g: np.ndarray
    g_inv: np.ndarray
    index: int
    corank: int


def restricted_metric(spec: DistributionSpec) -> RestrictedMetric:
    """Restricted metric, computed two ways and compared exactly.

    Route (a) assembles the block matrix diag(2 Id, -2 Id, P_{#I});
    route (b) evaluates the trace form pairwise over the generating set.
    Both have exact integer entries, so any disagreement signals a
    construction bug and raises :class:`ConsistencyError`.
    """
    n = spec.n
    k = n * (n - 1) // 2
    m = len(spec.I)
    d = 2 * k + m

    g = np.zeros((d, d))
    g[:k, :k] = 2.0 * np.eye(k)
    g[k : 2 * k, k : 2 * k] = -2.0 * np.eye(k)
    if m:
        g[2 * k :, 2 * k :] = p_matrix(m)

    mats = generating_set(spec).matrices
    pairwise = np.einsum("aij,bji->ab", mats, mats)
    if not np.array_equal(g, pairwise):
        raise ConsistencyError(
            f"restricted metric mismatch between block formula and pairwise trace form for {spec}"
        )

    g_inv = np.zeros((d, d))
    g_inv[:k, :k] = 0.5 * np.eye(k)
    g_inv[k : 2 * k, k : 2 * k] = -0.5 * np.eye(k)
    if m:
        g_inv[2 * k :, 2 * k :] = p_matrix_inverse(m)

    return RestrictedMetric(dim=d, g=g, g_inv=g_inv, index=k, corank=n - 1 - m)


@dataclass(frozen=True)
class GenerationCertificate:
    """Outcome of the span-closure computation.

    rank_trace[0] is the rank of the generator span; each further entry
    is the rank after one more level of brackets with the generators.
    """

    generates: bool
    step: int
    rank_trace: tuple[int, ...]


def bracket_generation_certificate(spec: DistributionSpec) -> GenerationCertificate:
    """Certify that the generating set bracket-generates the full algebra.

    Starting from the span of the generators, repeatedly add brackets of
    generators with the newly found spanning matrices until the rank
    reaches n^2 - 1 or stagnates.  Rank uses pivoted elimination with
    threshold 1e-10 on flattened matrices.
    """
    gens = generating_set(spec).matrices
    full = spec.algebra_dim
    builder = SpanBuilder(tol=1e-10)
    frontier = [m for m in gens if builder.add(m.ravel())]
    trace = [builder.rank]
    step = 0
    while builder.rank < full:
        new: list[np.ndarray] = []
        for g in gens:
            for m in frontier:
                c = bracket(g, m)
                if builder.add(c.ravel()):
                    new.append(c)
        step += 1
        trace.append(builder.rank)
        if not new:
            break
        frontier = new
    return GenerationCertificate(builder.rank == full, step, tuple(trace))
