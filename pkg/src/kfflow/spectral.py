"""Eigenvector families of the Gram matrix and its spectrum.

The Gram matrix of the trace form has spectrum {n, 1, -1}.  An explicit
eigenbasis is built from the ordered basis: symmetric combinations X_r
(eigenvalue 1), antisymmetric combinations Y_r (eigenvalue -1), diagonal
differences Z_l (eigenvalue 1, only for n >= 3), and the distinguished
diagonal matrix H (eigenvalue n).
"""

from dataclasses import dataclass

import numpy as np

from .algebra import basis_coordinates, build_basis, gram_matrix


@dataclass(frozen=True)
class EigenFamily:
    """Eigenvectors of the Gram matrix, as n x n matrices.

    X_r = e_r^1 + e_r^2 (symmetric), Y_r = e_r^1 - e_r^2 (antisymmetric),
    Z_l = e_l - e_{n-1} (diagonal, empty for n = 2), H = e_1 + ... + e_{n-1}.
    """

    n: int
    H: np.ndarray
    X: tuple[np.ndarray, ...]
    Y: tuple[np.ndarray, ...]
    Z: tuple[np.ndarray, ...]


def _frozen(mat: np.ndarray) -> np.ndarray:
    mat.setflags(write=False)
    return mat


def eigen_family(n: int) -> EigenFamily:
    """Construct the eigenvector families from the ordered basis."""
    basis = build_basis(n)
    mats = basis.matrices
    npairs = n * (n - 1) // 2

    def upper(r):
        return mats[2 * (r - 1)]

    def lower(r):
        return mats[2 * (r - 1) + 1]

    def diag(ell):
        return mats[2 * npairs + ell - 1]

    X = tuple(_frozen(upper(r) + lower(r)) for r in range(1, npairs + 1))
    Y = tuple(_frozen(upper(r) - lower(r)) for r in range(1, npairs + 1))
    Z = tuple(_frozen(diag(ell) - diag(n - 1)) for ell in range(1, n - 1))
    H = _frozen(sum(diag(ell) for ell in range(1, n)))
    return EigenFamily(n, H, X, Y, Z)


@dataclass(frozen=True)
class SpectrumReport:
    """Numerically diagonalized spectrum plus constructed-eigenvector residuals."""

    eigenvalues: np.ndarray
    multiplicities: dict[int, int]
    max_residual: float


def verify_spectrum(n: int) -> SpectrumReport:
    """Diagonalize the Gram matrix and check it against the eigenbasis.

    Every numerical eigenvalue must sit within 1e-9 of {n, 1, -1}; the
    residual is the max of ||Gr v - lambda v||_inf over the coordinate
    vectors of the constructed eigenfamily members.
    """
    gr = gram_matrix(n)
    try:
        vals = np.linalg.eigvalsh(gr)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"eigendecomposition of the Gram matrix failed for n={n}") from exc

    targets = (float(n), 1.0, -1.0)
    mult = {int(t): 0 for t in targets}
    for v in vals:
        t = min(targets, key=lambda t: abs(v - t))
        if abs(v - t) > 1e-9:
            raise RuntimeError(f"unexpected Gram eigenvalue {v!r} for n={n}")
        mult[int(t)] += 1

    fam = eigen_family(n)
    basis = build_basis(n)
    max_res = 0.0
    members = [(fam.H, float(n))]
    members += [(x, 1.0) for x in fam.X]
    members += [(z, 1.0) for z in fam.Z]
    members += [(y, -1.0) for y in fam.Y]
    for mat, lam in members:
        coords = basis_coordinates(basis, mat)
        res = float(np.max(np.abs(gr @ coords - lam * coords)))
        max_res = max(max_res, res)
    return SpectrumReport(vals, mult, max_res)
