"""Closed-form structure of the n = 2 flow.

For n = 2 the Hamiltonian system reduces to

    da11 = a12 M,  da12 = a11 N,  da21 = a22 M,  da22 = a21 N,
    dl11 = -l12 N, dl12 = -l11 M, dl21 = -l22 N, dl22 = -l21 M,

with M = a11 l12 + a21 l22 and N = a12 l11 + a22 l21.  Five constants of
motion follow: the four bilinear combinations c1..c4 and c5 = M N.
Solving the linear system for the covector in terms of a and c1..c4
decouples the base motion into a cubic autonomous system, which admits
hyperbolic, elliptic and constant solution families from the identity.
"""

from typing import NamedTuple

import numpy as np

from .hamiltonian import CotangentPoint

FAMILIES = ("hyperbolic", "elliptic", "constant")


class Sl2Constants(NamedTuple):
    c1: float
    c2: float
    c3: float
    c4: float
    c5: float


def _check_dim2(pt: CotangentPoint):
    if pt.dim != 2:
        raise ValueError(f"n = 2 required, got n = {pt.dim}")


def mn_values(pt: CotangentPoint) -> tuple[float, float]:
    """The pair (M, N); their product is the Hamiltonian value."""
    _check_dim2(pt)
    a, l = pt.a, pt.lam
    m = a[0, 0] * l[0, 1] + a[1, 0] * l[1, 1]
    n = a[0, 1] * l[0, 0] + a[1, 1] * l[1, 0]
    return float(m), float(n)


def conserved_constants(pt: CotangentPoint) -> Sl2Constants:
    """The five constants of motion evaluated at a point."""
    _check_dim2(pt)
    a, l = pt.a, pt.lam
    c1 = a[0, 0] * l[0, 0] + a[0, 1] * l[0, 1]
    c2 = a[1, 0] * l[0, 0] + a[1, 1] * l[0, 1]
    c3 = a[0, 0] * l[1, 0] + a[0, 1] * l[1, 1]
    c4 = a[1, 0] * l[1, 0] + a[1, 1] * l[1, 1]
    m, n = mn_values(pt)
    return Sl2Constants(float(c1), float(c2), float(c3), float(c4), m * n)


def reconstruct_momenta(a, c: Sl2Constants) -> np.ndarray:
    """Recover the covector from the base point and the linear constants.

    Valid on the unit-determinant locus, where the 4x4 linear system for
    the covector inverts explicitly.
    """
    a = np.asarray(a, dtype=float)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if abs(np.linalg.det(a) - 1.0) >= 1e-8:
        raise ValueError("base point must have unit determinant")
    return np.array(
        [
            [c.c1 * a[1, 1] - c.c2 * a[0, 1], -c.c1 * a[1, 0] + c.c2 * a[0, 0]],
            [c.c3 * a[1, 1] - c.c4 * a[0, 1], -c.c3 * a[1, 0] + c.c4 * a[0, 0]],
        ]
    )


def decoupled_rhs(a, c: Sl2Constants) -> np.ndarray:
    """Base velocity of the decoupled cubic system at a base point."""
    a = np.asarray(a, dtype=float)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    f1 = (c.c4 - c.c1) * a[0, 0] * a[1, 0] + c.c2 * a[0, 0] ** 2 - c.c3 * a[1, 0] ** 2
    f2 = (c.c1 - c.c4) * a[0, 1] * a[1, 1] - c.c2 * a[0, 1] ** 2 + c.c3 * a[1, 1] ** 2
    return np.array([[a[0, 1] * f1, a[0, 0] * f2], [a[1, 1] * f1, a[1, 0] * f2]])


def closed_form(family: str, c: float, t: float) -> np.ndarray:
    """Known solution families from the identity.

    hyperbolic (c2 = c3 = c, c1 = c4): cosh/sinh matrix;
    elliptic (c2 = -c3 = c, c1 = c4): rotation matrix;
    constant (c2 = c3 = 0): the identity for all time.
    """
    if family == "hyperbolic":
        ch, sh = np.cosh(c * t), np.sinh(c * t)
        return np.array([[ch, sh], [sh, ch]])
    if family == "elliptic":
        co, si = np.cos(c * t), np.sin(c * t)
        return np.array([[co, -si], [si, co]])
    if family == "constant":
        return np.eye(2)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def initial_covector(family: str, c: float, k: float = 0.0) -> np.ndarray:
    """Covector at the identity whose constants select the given family."""
    if family == "hyperbolic":
        return np.array([[k, c], [c, k]])
    if family == "elliptic":
        return np.array([[k, c], [-c, k]])
    if family == "constant":
        return np.array([[k, 0.0], [0.0, k]])
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
