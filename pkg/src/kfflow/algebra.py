"""Trace-form linear algebra on the traceless n x n matrices.

Builds the ordered elementary-matrix basis of sl(n, R), the commutator,
the trace form B(A, B) = tr(AB), its Gram matrix in that basis, and the
constant family P_m (2 on the diagonal, 1 off) that appears as the
diagonal block of the Gram matrix.

Matrix indices in the public API are 1-based, matching the usual E_{i,j}
notation; stored numpy arrays are 0-based as always.  All constructions
here have exact integer entries, so equality checks on constructed
matrices are exact while derived numeric quantities carry tolerances.
"""

from dataclasses import dataclass

import numpy as np

_LABEL_KINDS = ("offdiag", "diag", "X", "Y", "Z", "H")


@dataclass(frozen=True)
class BasisLabel:
    """Symbolic identity of a basis element or eigenvector-family member.

    kind "offdiag" carries the pair index r and part 1 (upper, E_{p,q})
    or part 2 (lower, E_{q,p}); kind "diag" carries the diagonal index.
    Kinds "X", "Y", "Z", "H" tag eigenvector-family members.
    """

    kind: str
    index: int
    part: int | None = None

    def __post_init__(self):
        if self.kind not in _LABEL_KINDS:
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == "offdiag":
            if self.part not in (1, 2):
                raise ValueError("offdiag labels need part 1 or 2")
        elif self.part is not None:
            raise ValueError(f"label kind {self.kind!r} takes no part")
        if self.index < 1:
            raise ValueError("label index must be positive")


@dataclass(frozen=True)
class OrderedBasis:
    """The ordered basis of sl(n, R): off-diagonal pairs, then diagonals.

    For each pair index r the elements E_{p,q} (part 1) and E_{q,p}
    (part 2) appear consecutively, pairs enumerated row by row; the last
    n-1 elements are E_{n,n} - E_{l,l} for l = 1..n-1.
    """

    n: int
    labels: tuple[BasisLabel, ...]
    matrices: np.ndarray  # shape (n**2 - 1, n, n), read-only

    @property
    def dim(self) -> int:
        return self.n * self.n - 1


def unit_matrix(n: int, i: int, j: int) -> np.ndarray:
    """E_{i,j}: single 1 in row i, column j (1-based), zeros elsewhere."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"entry ({i},{j}) out of range for dimension {n}")
    out = np.zeros((n, n))
    out[i - 1, j - 1] = 1.0
    return out


def pair_index(n: int, p: int, q: int) -> int:
    """Rank of the pair (p, q), p < q, in row-by-row enumeration.

    (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n) get ranks 1..n(n-1)/2;
    the closed form is r = (p-1)n - p(p-1)/2 + (q-p).
    """
    if not (1 <= p < q <= n):
        raise ValueError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    return (p - 1) * n - p * (p - 1) // 2 + (q - p)


def index_pair(n: int, r: int) -> tuple[int, int]:
    """Inverse of :func:`pair_index`."""
    if not (1 <= r <= n * (n - 1) // 2):
        raise ValueError(f"pair rank {r} out of range for dimension {n}")
    p = 1
    while r > n - p:  # row p holds n - p pairs
        r -= n - p
        p += 1
    return p, p + r


def build_basis(n: int) -> OrderedBasis:
    """The ordered basis: (E_{p,q}, E_{q,p}) per pair, then E_{n,n}-E_{l,l}."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    labels: list[BasisLabel] = []
    mats: list[np.ndarray] = []
    for r in range(1, n * (n - 1) // 2 + 1):
        p, q = index_pair(n, r)
        labels.append(BasisLabel("offdiag", r, 1))
        mats.append(unit_matrix(n, p, q))
        labels.append(BasisLabel("offdiag", r, 2))
        mats.append(unit_matrix(n, q, p))
    for ell in range(1, n):
        labels.append(BasisLabel("diag", ell))
        mats.append(unit_matrix(n, n, n) - unit_matrix(n, ell, ell))
    arr = np.array(mats)
    arr.setflags(write=False)
    return OrderedBasis(n, tuple(labels), arr)


def basis_coordinates(basis: OrderedBasis, mat) -> np.ndarray:
    """Coordinates of a traceless matrix in the ordered basis (exact).

    Off-diagonal entries are read off directly; the diagonal coordinate
    for index l is -mat[l,l] since the diagonal elements are
    E_{n,n} - E_{l,l}.
    """
    m = np.asarray(mat, dtype=float)
    if m.shape != (basis.n, basis.n):
        raise ValueError(f"expected a {basis.n}x{basis.n} matrix, got {m.shape}")
    if abs(np.trace(m)) > 1e-9:
        raise ValueError("matrix is not traceless")
    coords = np.empty(basis.dim)
    for idx, lab in enumerate(basis.labels):
        if lab.kind == "offdiag":
            p, q = index_pair(basis.n, lab.index)
            coords[idx] = m[p - 1, q - 1] if lab.part == 1 else m[q - 1, p - 1]
        else:
            coords[idx] = -m[lab.index - 1, lab.index - 1]
    return coords


def _pair_of_squares(a, b) -> tuple[np.ndarray, np.ndarray]:
    A = np.asarray(a, dtype=float)
    B = np.asarray(b, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if B.shape != A.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return A, B


def bracket(a, b) -> np.ndarray:
    """Commutator AB - BA."""
    A, B = _pair_of_squares(a, b)
    return A @ B - B @ A


def trace_form(a, b) -> float:
    """The trace form B(A, B) = tr(AB); symmetric and bilinear."""
    A, B = _pair_of_squares(a, b)
    return float(np.einsum("ij,ji->", A, B))


def gram_matrix(n: int) -> np.ndarray:
    """Gram matrix of the trace form over the ordered basis.

    Entry (i, j) is tr(B_i B_j).  The result is block diagonal: one
    [[0,1],[1,0]] block per off-diagonal pair, then P_{n-1}.
    """
    mats = build_basis(n).matrices
    return np.einsum("aij,bji->ab", mats, mats)


def p_matrix(m: int) -> np.ndarray:
    """The m x m matrix with 2 on the diagonal and 1 elsewhere."""
    if m < 1:
        raise ValueError("size must be at least 1")
    return np.ones((m, m)) + np.eye(m)


def p_matrix_inverse(m: int) -> np.ndarray:
    """Closed-form inverse of :func:`p_matrix`: m/(m+1) diagonal, -1/(m+1) off."""
    if m < 1:
        raise ValueError("size must be at least 1")
    return (np.eye(m) * (m + 1) - np.ones((m, m))) / (m + 1)


class SpanBuilder:
    """Incremental Gaussian elimination over flattened matrices.

    Tracks the rank of the span of the vectors added so far.  A vector
    whose residual after reduction has max-norm at or below ``tol`` is
    rejected as linearly dependent.
    """

    def __init__(self, tol: float = 1e-10):
        self.tol = float(tol)
        self._rows: list[tuple[int, np.ndarray]] = []

    def add(self, vec) -> bool:
        """Add a vector; return True if it enlarged the span."""
        v = np.array(vec, dtype=float).ravel()
        for col, row in self._rows:
            coef = v[col]
            if coef != 0.0:
                v = v - coef * row
        col = int(np.argmax(np.abs(v)))
        if abs(v[col]) <= self.tol:
            return False
        self._rows.append((col, v / v[col]))
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)


def elimination_rank(mats, tol: float = 1e-10) -> int:
    """Rank of the span of flattened matrices by pivoted elimination."""
    builder = SpanBuilder(tol=tol)
    for m in mats:
        builder.add(np.asarray(m, dtype=float).ravel())
    return builder.rank
