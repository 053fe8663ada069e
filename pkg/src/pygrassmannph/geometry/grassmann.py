"""Principal angles and Grassmannian distances between d-planes.

Every function here goes through principal_angle_stack, which works on
broadcastable stacks of D×d frames. Angles below π/4 come from the sines
(singular values of B - A·AᵀB), the others from the cosines (singular
values of AᵀB), so small angles keep full precision. The scalar functions
call the same routine on stacks of one and agree with the distance matrix
assembly to rounding.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from ..const import DET_ZERO_TOL
from ..errors import DimensionError
from ..models.frame import Frame, PrincipalAngles

_LOGGER = logging.getLogger(__name__)

FrameLike = Frame | np.ndarray


def as_columns(frame: FrameLike) -> np.ndarray:
    """The D×d column array of a Frame, a raw matrix or a single vector."""
    if isinstance(frame, Frame):
        return frame.columns
    columns = np.asarray(frame, dtype=np.float64)
    return columns.reshape(-1, 1) if columns.ndim == 1 else columns


def gram_stack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """AᵀB for broadcastable stacks of frames of shape (..., D, d)."""
    if a.shape[-2:] != b.shape[-2:]:
        msg = f"Frames of shape {a.shape[-2:]} and {b.shape[-2:]} are not comparable"
        raise DimensionError(msg)
    return np.einsum("...ak,...al->...kl", a, b)


def det_sign(det: float | np.ndarray) -> int | np.ndarray:
    """Sign of a determinant with a 1e-12 zero band."""
    signs = np.where(np.abs(det) <= DET_ZERO_TOL, 0, np.sign(det)).astype(int)
    return int(signs) if signs.ndim == 0 else signs


def singular_values_from_gram(gram: np.ndarray) -> np.ndarray:
    """Singular values of each Gram matrix, descending, clamped to [0, 1]."""
    return np.clip(np.linalg.svd(gram, compute_uv=False), 0.0, 1.0)


def principal_angle_stack(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Principal angles, descending, and det(AᵀB) for stacks of frames.

    Args:
    ----
        a: (..., D, d) orthonormal columns
        b: (..., D, d) orthonormal columns, broadcastable against a

    Returns:
    -------
        (angles of shape (..., d) in [0, π/2], determinants of shape (...))

    """
    gram = gram_stack(a, b)
    cosines = singular_values_from_gram(gram)[..., ::-1]
    residual = b - np.einsum("...ak,...kl->...al", a, gram)
    sines = np.clip(np.linalg.svd(residual, compute_uv=False), 0.0, 1.0)
    theta = np.where(cosines**2 >= 0.5, np.arcsin(sines), np.arccos(cosines))  # noqa: PLR2004
    return theta, np.linalg.det(gram)


def _branches(theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unoriented distance and the det < 0 branch with θ₁ replaced by π - θ₁."""
    squared = np.sum(theta**2, axis=-1)
    largest = theta[..., 0]
    return np.sqrt(squared), np.sqrt(squared - largest**2 + (math.pi - largest) ** 2)


def grassmann_distance_stack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Unoriented Grassmannian distance for stacks of frames."""
    theta, _ = principal_angle_stack(a, b)
    return _branches(theta)[0]


def oriented_distance_stack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Oriented Grassmannian distance for stacks of frames.

    Inside the zero band both branches are candidates and the smaller one,
    the unoriented distance, is returned.
    """
    theta, det = principal_angle_stack(a, b)
    unoriented, reversed_branch = _branches(theta)
    return np.where(det < -DET_ZERO_TOL, reversed_branch, unoriented)


def _pair(a: FrameLike, b: FrameLike) -> tuple[np.ndarray, np.ndarray]:
    a_cols, b_cols = as_columns(a), as_columns(b)
    if a_cols.shape != b_cols.shape:
        msg = f"Frames of shape {a_cols.shape} and {b_cols.shape} are not comparable"
        raise DimensionError(msg)
    return a_cols, b_cols


def gram_svd(a: FrameLike, b: FrameLike) -> tuple[np.ndarray, int]:
    """Singular values of AᵀB and the sign of det(AᵀB).

    Args:
    ----
        a: Frame
        b: Frame

    Returns:
    -------
        (singular values descending in [0, 1], det sign in {-1, 0, +1})

    Raises:
    ------
        DimensionError: frames do not share D and d

    """
    gram = gram_stack(*_pair(a, b))
    return singular_values_from_gram(gram), det_sign(float(np.linalg.det(gram)))


def principal_angles(a: FrameLike, b: FrameLike) -> PrincipalAngles:
    """Principal angles between two planes, largest first."""
    theta, det = principal_angle_stack(*_pair(a, b))
    return PrincipalAngles(angles=theta, det_sign=det_sign(float(det)))


def grassmann_distance(a: FrameLike, b: FrameLike) -> float:
    """Geodesic distance on Gr(D, d): (Σθᵢ²)^½."""
    return float(grassmann_distance_stack(*_pair(a, b)))


def oriented_grassmann_distance_ex(a: FrameLike, b: FrameLike) -> tuple[float, bool]:
    """Geodesic distance on Gr⁺(D, d) and whether det(AᵀB) was in the zero band.

    Returns
    -------
        (distance, degenerate); a degenerate pair gets the smaller branch

    """
    theta, det = principal_angle_stack(*_pair(a, b))
    unoriented, reversed_branch = _branches(theta)
    sign = det_sign(float(det))
    if sign > 0:
        return float(unoriented), False
    if sign < 0:
        return float(reversed_branch), False
    return float(min(unoriented, reversed_branch)), True


def oriented_grassmann_distance(a: FrameLike, b: FrameLike) -> float:
    """Geodesic distance on Gr⁺(D, d); see oriented_grassmann_distance_ex."""
    value, degenerate = oriented_grassmann_distance_ex(a, b)
    if degenerate:
        _LOGGER.debug("det(AᵀB) within %.0e of zero, orientation undetermined", DET_ZERO_TOL)
    return value


def projector_distance(a: FrameLike, b: FrameLike) -> float:
    """Hilbert-Schmidt norm of AAᵀ - BBᵀ."""
    a_cols, b_cols = _pair(a, b)
    return float(np.linalg.norm(a_cols @ a_cols.T - b_cols @ b_cols.T))
