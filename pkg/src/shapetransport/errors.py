"""Exception hierarchy for the shape-space geometry and benchmark code."""


class ShapeSpaceError(Exception):
    """Base class for all numerical/geometric failures in this package."""


class RankDeficient(ShapeSpaceError):
    """Configuration rank < m-1: the Sylvester system has no unique solution."""


class AmbiguousAlignment(ShapeSpaceError):
    """Optimal rotation between two pre-shapes is not unique."""


class AntipodalPoints(ShapeSpaceError):
    """Log map requested at (or too close to) the cut locus."""


class DegenerateConfiguration(ShapeSpaceError):
    """All landmarks coincide; no pre-shape projection exists."""


class SamplingFailed(ShapeSpaceError):
    """Random problem generation did not produce a valid sample."""


class InsufficientData(ShapeSpaceError):
    """Not enough usable records to estimate a convergence order."""


class ReferenceInconsistent(ShapeSpaceError):
    """Reference transport at n_ref and 2*n_ref disagree; run aborted."""


class IoFailure(ShapeSpaceError):
    """File input/output failed; message carries the offending path."""
