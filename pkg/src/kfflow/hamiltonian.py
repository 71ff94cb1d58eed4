"""Momentum functions, quadratic Hamiltonians, and phase-space gradients.

Phase space is parametrized by two n x n matrices: the group-element
coordinates a and the covector coordinates lambda dual to d/da_{i,j}.
The Hamiltonian of a distribution splits into the pair part (from the
X/Y generators) and the Z part weighted by the inverse of P_{#I}:

    H(a; l) = 1/2 sum_{p != q} sum_{i,j} a_{i,p} a_{j,q} l_{j,p} l_{i,q}
            + 1/2 sum_{k,l in I} P^{-1}_{k,l} w_k w_l,

where w_k = sum_i (a_{i,k} l_{i,k} - a_{i,n-1} l_{i,n-1}).  A second
route assembles the same value from the momentum functions,

    H = 1/4 sum_r (P_X_r^2 - P_Y_r^2) + 1/2 sum_{k,l} P^{-1}_{k,l} P_Z_k P_Z_l,

and is kept as an independent implementation for cross-checking.

Gradients are analytic.  The pair part is

    dH/da_{s,t} = sum_{p != t} sum_i a_{i,p} l_{s,p} l_{i,t},
    dH/dl_{s,t} = sum_{p != t} sum_i a_{i,t} a_{s,p} l_{i,p},

and the Z part is nonzero only in columns t in I (factor sum_l
P^{-1}_{t,l} w_l) and t = n-1 (factor -sum_{k,l} P^{-1}_{k,l} w_l).
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import index_pair, p_matrix_inverse
from .distribution import DistributionSpec


@dataclass(frozen=True)
class CotangentPoint:
    """A phase-space point: group-element coordinates and covector coordinates."""

    a: np.ndarray
    lam: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        lam = np.array(self.lam, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"a must be square, got shape {a.shape}")
        if lam.shape != a.shape:
            raise ValueError(f"lambda shape {lam.shape} does not match a shape {a.shape}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(lam))):
            raise ValueError("phase-space coordinates must be finite")
        a.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "lam", lam)

    @property
    def dim(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class PhaseGradient:
    """Analytic partials of a scalar field with respect to a and lambda."""

    d_a: np.ndarray
    d_lam: np.ndarray


def _check_point(spec: DistributionSpec, pt: CotangentPoint):
    if pt.dim != spec.n:
        raise ValueError(f"point dimension {pt.dim} does not match spec n={spec.n}")


def momentum_x(p: int, q: int, pt: CotangentPoint) -> float:
    """Momentum of the symmetric pair generator: sum_i (a_iq l_ip + a_ip l_iq)."""
    n = pt.dim
    if not (1 <= p < q <= n):
        raise ValueError(f"need 1 <= p < q <= {n}, got p={p}, q={q}")
    a, lam = pt.a, pt.lam
    return float(a[:, q - 1] @ lam[:, p - 1] + a[:, p - 1] @ lam[:, q - 1])


def momentum_y(p: int, q: int, pt: CotangentPoint) -> float:
    """Momentum of the antisymmetric pair generator: sum_i (a_iq l_ip - a_ip l_iq)."""
    n = pt.dim
    if not (1 <= p < q <= n):
        raise ValueError(f"need 1 <= p < q <= {n}, got p={p}, q={q}")
    a, lam = pt.a, pt.lam
    return float(a[:, q - 1] @ lam[:, p - 1] - a[:, p - 1] @ lam[:, q - 1])


def momentum_z(ell: int, pt: CotangentPoint) -> float:
    """Momentum of the diagonal generator: sum_i (a_il l_il - a_i,n-1 l_i,n-1)."""
    n = pt.dim
    if not (1 <= ell <= n - 2):
        raise ValueError(f"diagonal index {ell} out of range 1..{n - 2}")
    a, lam = pt.a, pt.lam
    return float(a[:, ell - 1] @ lam[:, ell - 1] - a[:, n - 2] @ lam[:, n - 2])


def _z_weights(I: tuple[int, ...], a: np.ndarray, lam: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    base = a[:, n - 2] @ lam[:, n - 2]
    return np.array([a[:, k - 1] @ lam[:, k - 1] for k in I]) - base


def hamiltonian_value(spec: DistributionSpec, pt: CotangentPoint) -> float:
    """Coordinate evaluation of the quadratic Hamiltonian."""
    _check_point(spec, pt)
    a, lam = pt.a, pt.lam
    # T[p,q] = sum_{i,j} a_{i,p} a_{j,q} l_{j,p} l_{i,q}
    T = np.einsum("ip,jq,jp,iq->pq", a, a, lam, lam)
    value = 0.5 * (T.sum() - np.trace(T))
    if spec.I:
        w = _z_weights(spec.I, a, lam)
        value += 0.5 * float(w @ p_matrix_inverse(len(spec.I)) @ w)
    return float(value)


def z_hamiltonian_value(spec: DistributionSpec, pt: CotangentPoint) -> float:
    """The Z-only quadratic form; requires a nonempty index set."""
    if not spec.I:
        raise ValueError("the diagonal index set is empty")
    _check_point(spec, pt)
    w = _z_weights(spec.I, pt.a, pt.lam)
    return 0.5 * float(w @ p_matrix_inverse(len(spec.I)) @ w)


def hamiltonian_from_momenta(spec: DistributionSpec, pt: CotangentPoint) -> float:
    """Assemble the Hamiltonian from momentum functions (cross-check route)."""
    _check_point(spec, pt)
    n = spec.n
    total = 0.0
    for r in range(1, n * (n - 1) // 2 + 1):
        p, q = index_pair(n, r)
        total += momentum_x(p, q, pt) ** 2 - momentum_y(p, q, pt) ** 2
    total *= 0.25
    if spec.I:
        pinv = p_matrix_inverse(len(spec.I))
        pz = [momentum_z(ell, pt) for ell in spec.I]
        for i, zi in enumerate(pz):
            for j, zj in enumerate(pz):
                total += 0.5 * pinv[i, j] * zi * zj
    return float(total)


def gradient_function(spec: DistributionSpec) -> Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]:
    """Array-level gradient evaluator with spec-dependent data precomputed.

    Returns grad(a, lam) -> (dH/da, dH/dlam).  This is the core used by
    the integrator; :func:`hamiltonian_gradient` wraps it for points.
    """
    cols = tuple(k - 1 for k in spec.I)
    m = len(cols)
    pinv = p_matrix_inverse(m) if m else None

    def grad(a: np.ndarray, lam: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        mu = a.T @ lam
        d = np.diag(mu)
        d_a = lam @ mu - lam * d
        d_l = a @ mu.T - a * d
        if m:
            last = a.shape[0] - 2
            w = np.array([a[:, c] @ lam[:, c] for c in cols]) - a[:, last] @ lam[:, last]
            u = pinv @ w
            s = u.sum()
            for pos, c in enumerate(cols):
                d_a[:, c] += lam[:, c] * u[pos]
                d_l[:, c] += a[:, c] * u[pos]
            d_a[:, last] -= lam[:, last] * s
            d_l[:, last] -= a[:, last] * s
        return d_a, d_l

    return grad


def hamiltonian_gradient(spec: DistributionSpec, pt: CotangentPoint) -> PhaseGradient:
    """Analytic phase-space gradient of the Hamiltonian at a point."""
    _check_point(spec, pt)
    d_a, d_l = gradient_function(spec)(pt.a, pt.lam)
    return PhaseGradient(d_a, d_l)


def z_hamiltonian_gradient(spec: DistributionSpec, pt: CotangentPoint) -> PhaseGradient:
    """Analytic gradient of the Z-only quadratic form."""
    if not spec.I:
        raise ValueError("the diagonal index set is empty")
    _check_point(spec, pt)
    a, lam = pt.a, pt.lam
    cols = [k - 1 for k in spec.I]
    last = spec.n - 2
    w = _z_weights(spec.I, a, lam)
    u = p_matrix_inverse(len(cols)) @ w
    s = u.sum()
    d_a = np.zeros_like(a)
    d_l = np.zeros_like(a)
    for pos, c in enumerate(cols):
        d_a[:, c] = lam[:, c] * u[pos]
        d_l[:, c] = a[:, c] * u[pos]
    d_a[:, last] = -lam[:, last] * s
    d_l[:, last] = -a[:, last] * s
    return PhaseGradient(d_a, d_l)


def poisson_bracket(
    grad_f: Callable[[CotangentPoint], PhaseGradient],
    grad_g: Callable[[CotangentPoint], PhaseGradient],
    pt: CotangentPoint,
) -> float:
    """Canonical Poisson bracket of two scalar fields at a point.

    Both arguments are callables returning the analytic PhaseGradient;
    the bracket is sum_{s,t} (dF/da * dG/dlam - dF/dlam * dG/da).
    """
    gf = grad_f(pt)
    gg = grad_g(pt)
    if gf.d_a.shape != gg.d_a.shape:
        raise ValueError("gradient dimensions do not match")
    return float(np.sum(gf.d_a * gg.d_lam - gf.d_lam * gg.d_a))
