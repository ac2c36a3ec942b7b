"""Parallel transport on Kendall shape spaces via the pre-shape sphere."""

from . import bench, linalg, preshape, quotient, transport
from .errors import (
    AmbiguousAlignment,
    AntipodalPoints,
    DegenerateConfiguration,
    InsufficientData,
    IoFailure,
    RankDeficient,
    ReferenceInconsistent,
    SamplingFailed,
    ShapeSpaceError,
)
from .transport import TransportProblem, TransportResult

__all__ = [
    "bench",
    "linalg",
    "preshape",
    "quotient",
    "transport",
    "TransportProblem",
    "TransportResult",
    "ShapeSpaceError",
    "RankDeficient",
    "AmbiguousAlignment",
    "AntipodalPoints",
    "DegenerateConfiguration",
    "SamplingFailed",
    "InsufficientData",
    "ReferenceInconsistent",
    "IoFailure",
]

__version__ = "0.1.0"
