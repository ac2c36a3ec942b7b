"""Small dense linear-algebra kernels.

Symmetric-coefficient skew Sylvester solver and the SVD-based optimal
rotation (rotation-only Procrustes). Design envelope is m <= 10.
"""

import numpy as np

from .errors import AmbiguousAlignment, RankDeficient

# A singular/eigen value counts as zero below this fraction of the largest.
RANK_RTOL = 1e-9


def solve_skew_sylvester(sym: np.ndarray, rhs_skew: np.ndarray) -> np.ndarray:
    """Solve A @ S + S @ A = B for skew-symmetric A.

    S = ``sym`` must be symmetric positive semi-definite with at most one
    (near-)zero eigenvalue, B = ``rhs_skew`` skew-symmetric. Solved in the
    eigenbasis of S: with S = U diag(lam) U^T, the transformed solution has
    entries B~_ij / (lam_i + lam_j) off the diagonal and zeros on it.
    """
    lam, u = np.linalg.eigh(sym)
    lam_max = lam[-1]
    if lam_max <= 0.0 or np.sum(lam < RANK_RTOL * lam_max) >= 2:
        raise RankDeficient(
            "two or more eigenvalues below tolerance; rank < m-1"
        )
    bt = u.T @ rhs_skew @ u
    denom = lam[:, None] + lam[None, :]
    np.fill_diagonal(denom, 1.0)  # diagonal of the solution is forced to 0
    at = bt / denom
    np.fill_diagonal(at, 0.0)
    a = u @ at @ u.T
    return 0.5 * (a - a.T)


def solve_sylvester_skew(x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Skew-symmetric A with A(xx^T) + (xx^T)A = wx^T - xw^T.

    ``x`` is an m-by-k pre-shape of rank >= m-1, ``w`` any m-by-k matrix.
    """
    rhs = w @ x.T - x @ w.T
    return solve_skew_sylvester(x @ x.T, 0.5 * (rhs - rhs.T))


def optimal_rotation(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Rotation R in SO(m) maximizing <x, R y> (Frobenius inner product).

    Kabsch convention: SVD x y^T = P Sigma Q^T, then
    R = P diag(1, ..., 1, det(P Q^T)) Q^T. Raises AmbiguousAlignment when a
    determinant flip is needed but the two smallest singular values are both
    (near-)zero, i.e. the minimizer is not unique.
    """
    p, sig, qt = np.linalg.svd(x @ y.T)
    det = np.linalg.det(p) * np.linalg.det(qt)
    signs = np.ones(len(sig))
    if det < 0.0:
        if sig[-2] + sig[-1] <= RANK_RTOL * sig[0]:
            raise AmbiguousAlignment(
                "optimal rotation not unique: degenerate singular values"
            )
        signs[-1] = -1.0
    return (p * signs) @ qt
