"""Frame, principal angle and frame field models."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from ..const import ORTHONORMAL_TOL
from ..errors import DimensionError, ParameterError

if TYPE_CHECKING:
    from .cloud import PointCloud
    from .records import EdgeDeterminant


class Provenance(StrEnum):
    """Where a frame field comes from."""

    ESTIMATED = "estimated"
    ANALYTIC = "analytic"


def orthonormality_defect(columns: np.ndarray) -> float:
    """Return max |CᵀC - I| over a single frame or a stack of frames."""
    gram = np.einsum("...ak,...al->...kl", columns, columns)
    return float(np.max(np.abs(gram - np.eye(columns.shape[-1])), initial=0.0))


@dataclass(frozen=True, eq=False)
class Frame:
    """Orthonormal basis of an oriented d-plane in ℝ^D, one column per vector."""

    columns: np.ndarray

    def __post_init__(self) -> None:
        """Validate shape and orthonormality."""
        columns = np.asarray(self.columns, dtype=np.float64)
        if columns.ndim == 1:
            columns = columns.reshape(-1, 1)
        if columns.ndim != 2 or not 1 <= columns.shape[1] <= columns.shape[0]:  # noqa: PLR2004
            msg = f"Frame must be a D×d matrix with 1 <= d <= D, got shape {columns.shape}"
            raise DimensionError(msg)
        defect = orthonormality_defect(columns)
        if defect > ORTHONORMAL_TOL:
            msg = f"Frame columns are not orthonormal (defect {defect:.3e})"
            raise ParameterError(msg)
        object.__setattr__(self, "columns", columns)

    @classmethod
    def orthonormalize(cls, vectors: np.ndarray) -> Frame:
        """Build a frame spanning the given columns, keeping their orientation.

        QR with the sign of R's diagonal made positive, so the result is
        the Gram-Schmidt basis of the columns in order.
        """
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim == 1:
            vectors = vectors.reshape(-1, 1)
        q, r = np.linalg.qr(vectors)
        signs = np.sign(np.diag(r))
        if np.any(signs == 0):
            msg = "Cannot orthonormalize linearly dependent columns"
            raise ParameterError(msg)
        return cls(q * signs)

    @property
    def ambient_dim(self) -> int:
        """Ambient dimension D."""
        return int(self.columns.shape[0])

    @property
    def plane_dim(self) -> int:
        """Plane dimension d."""
        return int(self.columns.shape[1])

    def flipped(self) -> Frame:
        """Return the frame with its last column negated."""
        columns = self.columns.copy()
        columns[:, -1] *= -1.0
        return Frame(columns)


@dataclass(frozen=True, eq=False)
class PrincipalAngles:
    """Principal angles θ₁ ≥ … ≥ θ_d in [0, π/2] and the sign of det(AᵀB)."""

    angles: np.ndarray
    det_sign: int

    @property
    def largest(self) -> float:
        """θ₁."""
        return float(self.angles[0])


@dataclass(frozen=True, eq=False)
class FrameField:
    """One frame per point of a cloud, stored as an (n, D, d) stack.

    After orientation, `indeterminate` holds the graph edges whose
    determinant fell inside the zero band and carried no orientation.
    """

    frames: np.ndarray
    oriented: bool = False
    provenance: Provenance = Provenance.ESTIMATED
    cloud: PointCloud | None = None
    indeterminate: tuple[EdgeDeterminant, ...] = ()

    def __post_init__(self) -> None:
        """Validate the stack against the cloud."""
        frames = np.asarray(self.frames, dtype=np.float64)
        if frames.ndim != 3 or not 1 <= frames.shape[2] <= frames.shape[1]:  # noqa: PLR2004
            msg = f"Expected an (n, D, d) frame stack, got shape {frames.shape}"
            raise DimensionError(msg)
        if self.cloud is not None and (
            frames.shape[0] != self.cloud.n
            or frames.shape[1] != self.cloud.ambient_dim
            or frames.shape[2] != self.cloud.intrinsic_dim
        ):
            msg = (
                f"Frame stack {frames.shape} does not match cloud "
                f"(n={self.cloud.n}, D={self.cloud.ambient_dim}, d={self.cloud.intrinsic_dim})"
            )
            raise DimensionError(msg)
        defect = orthonormality_defect(frames)
        if defect > ORTHONORMAL_TOL:
            msg = f"Frame field contains non-orthonormal frames (defect {defect:.3e})"
            raise ParameterError(msg)
        object.__setattr__(self, "frames", frames)
        object.__setattr__(self, "provenance", Provenance(self.provenance))

    def __len__(self) -> int:
        """Return the number of frames."""
        return int(self.frames.shape[0])

    @property
    def ambient_dim(self) -> int:
        """Ambient dimension D."""
        return int(self.frames.shape[1])

    @property
    def plane_dim(self) -> int:
        """Plane dimension d."""
        return int(self.frames.shape[2])

    def frame(self, index: int) -> Frame:
        """Return the frame at a point."""
        return Frame(self.frames[index])

    def subset(self, indices: np.ndarray) -> FrameField:
        """Return the field restricted to the given indices."""
        indices = np.asarray(indices, dtype=np.intp)
        cloud = self.cloud.subset(indices) if self.cloud is not None else None
        return FrameField(self.frames[indices], oriented=self.oriented, provenance=self.provenance, cloud=cloud)

    def with_cloud(self, cloud: PointCloud) -> FrameField:
        """Return the same frames attached to another cloud."""
        return FrameField(
            self.frames,
            oriented=self.oriented,
            provenance=self.provenance,
            cloud=cloud,
            indeterminate=self.indeterminate,
        )
