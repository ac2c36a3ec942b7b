"""The pre-shape sphere of centered, unit-norm m-by-k landmark matrices.

Projection from raw landmarks, closed-form sphere geodesics (exp/log/dist),
tangent projection, the vertical/horizontal split and the align map.
Points and tangent vectors are plain m-by-k numpy arrays; columns are
landmarks in R^m.
"""

import numpy as np

from .errors import AntipodalPoints, DegenerateConfiguration, IoFailure
from .linalg import RANK_RTOL, optimal_rotation, solve_sylvester_skew

# Below this norm the exponential falls back to its first-order limit.
_SMALL_ANGLE = 1e-9
# Inner products above 1 - this are treated as coincident points in log.
_COINCIDENT = 1e-14
# Inner products at or below -1 + this raise AntipodalPoints.
_ANTIPODAL = 1e-10


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.sum(a * b))


def center(points: np.ndarray) -> np.ndarray:
    """Subtract the landmark barycentre from every column."""
    return points - points.mean(axis=1, keepdims=True)


def project_to_preshape(points: np.ndarray) -> np.ndarray:
    """Center and normalize a raw landmark configuration.

    Invariant under translation of all landmarks and positive rescaling.
    """
    centered = center(np.asarray(points, dtype=float))
    norm = np.linalg.norm(centered)
    if norm <= 1e-12:
        raise DegenerateConfiguration("all landmarks coincide")
    return centered / norm


def configuration_rank(x: np.ndarray) -> int:
    """Numerical rank with the package-wide relative tolerance."""
    s = np.linalg.svd(x, compute_uv=False)
    if s[0] <= 0.0:
        return 0
    return int(np.sum(s > RANK_RTOL * s[0]))


def to_tangent(x: np.ndarray, raw: np.ndarray) -> np.ndarray:
    """Project a raw m-by-k matrix onto the tangent space at x.

    Centers the columns, then removes the radial component. Idempotent.
    """
    w = center(np.asarray(raw, dtype=float))
    return w - frobenius_inner(w, x) * x


def exp(x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Great-circle exponential: cos(|w|) x + sin(|w|) w/|w|."""
    norm = np.linalg.norm(w)
    if norm < _SMALL_ANGLE:
        y = x + w
    else:
        y = np.cos(norm) * x + (np.sin(norm) / norm) * w
    return y / np.linalg.norm(y)


def log(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Inverse of exp: tangent vector at x pointing to y, length dist(x, y)."""
    cos_d = float(np.clip(frobenius_inner(x, y), -1.0, 1.0))
    if cos_d <= -1.0 + _ANTIPODAL:
        raise AntipodalPoints("log undefined at the cut locus")
    if cos_d > 1.0 - _COINCIDENT:
        return np.zeros_like(x)
    u = y - cos_d * x
    norm_u = np.linalg.norm(u)
    # |u| = sin(theta); atan2 keeps the angle well-conditioned near 0,
    # where arccos loses half the significant digits.
    return np.arctan2(norm_u, cos_d) * u / norm_u


def dist(x: np.ndarray, y: np.ndarray) -> float:
    """Arc-length distance on the pre-shape sphere, in [0, pi].

    Same atan2 form as in log: full precision for nearly coincident
    (and nearly antipodal) points, where arccos of the clamped inner
    product would lose half the digits.
    """
    cos_d = float(np.clip(frobenius_inner(x, y), -1.0, 1.0))
    sin_d = float(np.linalg.norm(y - cos_d * x))
    return float(np.arctan2(sin_d, cos_d))


def vertical_projection(x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Component of w along the rotation fiber: A x with A from the
    Sylvester equation A(xx^T) + (xx^T)A = wx^T - xw^T."""
    return solve_sylvester_skew(x, w) @ x


def horizontal_projection(x: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Component of w orthogonal to the fiber; satisfies xw^T symmetric."""
    return w - vertical_projection(x, w)


def is_horizontal(x: np.ndarray, w: np.ndarray, tol: float = 1e-10) -> bool:
    """Symmetry certificate: x w^T must be symmetric up to tol."""
    cert = x @ w.T - w @ x.T
    return float(np.linalg.norm(cert)) <= tol


def align(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Rotated copy of y closest to x; realizes the quotient distance."""
    return optimal_rotation(x, y) @ y


def read_landmarks(path) -> np.ndarray:
    """Load a landmark CSV (one row per landmark, m columns, no header)
    and return the m-by-k matrix."""
    try:
        rows = np.loadtxt(path, delimiter=",", ndmin=2)
    except OSError as err:
        raise IoFailure(f"{path}: {err}") from err
    return rows.T
