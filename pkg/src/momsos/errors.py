"""Exception types shared across the package."""


class MomsosError(Exception):
    """Base class for every package-specific error."""


class SingularMatrixError(MomsosError):
    """Matrix inversion was asked of a matrix with zero determinant."""


class NotSymmetricError(MomsosError):
    """An operation requiring a symmetric matrix got a non-symmetric one."""


class ZeroPolynomialError(MomsosError):
    """The zero polynomial was passed where a nonzero one is required."""


class BoundaryRootError(MomsosError):
    """A Sturm count was requested on an interval whose endpoint is a root."""


class DegenerateRecurrenceError(MomsosError):
    """A vanishing-leading-factor step of the Jacobi recurrence turned out
    inconsistent (the right-hand side did not vanish with it)."""


class OrderTooSmallError(MomsosError):
    """Relaxation order r < 3; the hierarchy is defined for r >= 3 only."""


class IdentityViolationError(MomsosError):
    """An exact identity that must hold by construction failed; indicates a
    bug, never a property of the inputs."""


class ParityViolationError(MomsosError):
    """A polynomial expected to have pure parity has mixed-parity terms."""


class DegreeOverflowError(MomsosError):
    """A polynomial exceeds the degree a moment sequence can pair with."""


class SingularShiftError(MomsosError):
    """I - C turned out singular while computing resolvent traces."""
