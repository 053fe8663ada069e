"""Constants for pygrassmannph."""

from __future__ import annotations

# Frame columns must be orthonormal within this tolerance.
ORTHONORMAL_TOL = 1e-10

# det(AᵀB) values within this band are reported as sign 0.
DET_ZERO_TOL = 1e-12

# Local PCA rejects neighborhoods whose d-th eigenvalue is at or below this.
EIGEN_DEGENERATE_TOL = 1e-14

# DistanceMatrix symmetry tolerance.
SYMMETRY_TOL = 1e-12

# Persistence
MAX_HOMOLOGY_DIM = 2
ORACLE_MAX_POINTS = 40
DIAGRAM_CSV_HEADER = "degree,birth,death"
DIAGRAM_MARKERS = ("o", "^", "s")
INFINITE_BAR_MARKER = "x"
INFINITE_BAR_SCALE = 1.05
SVG_HASH_SALT = "pygrassmannph"

# Generators
FD_STEP = 1e-5
RK4_STEP = 0.01
BOX_TOL = 1e-6
DOUBLE_GYRE_BOX = (2.0, 1.0)

# Theory checks
QUAD_EPSREL = 1e-10
QUAD_SELF_CONSISTENCY = 1e-8
RICHARDSON_TOL = 1e-5
CHECK_SLACK = 1e-9
LOG_II_SLACK = 1e-5

# File formats
GPDM_MAGIC = b"GPDM"
GPDM_VERSION = 1
FRAMES_MAGIC = "GPFRAMES"
FLOAT_FORMAT = ".17g"
METADATA_SUFFIX = ".meta.jsonl"

# Row block size for pairwise kernels.
BLOCK_SIZE = 256

# Environment variable capping the worker pool.
THREADS_ENV = "GP_THREADS"

# CLI exit codes
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3
EXIT_INCONSISTENT = 4
