"""Exception types shared across the package."""


class MasterKernelsError(Exception):
    """Base class for all package errors."""


class PoleError(MasterKernelsError):
    """Evaluation requested at (or too near) a pole of the function."""


class DomainError(MasterKernelsError):
    """Argument outside the function's real domain."""


class BranchCutError(MasterKernelsError):
    """Evaluation requested on a branch cut."""


class ParityError(MasterKernelsError):
    """Integrand parity does not match what the combination mode requires."""


class NearPoleError(MasterKernelsError):
    """Kernel evaluation requested within the exclusion radius of a pole."""


class InfiniteCensusError(MasterKernelsError):
    """The kernel has infinitely many poles in the strip (q=0 case)."""


class DerivativeUnavailableError(MasterKernelsError):
    """A derivative order was requested that the integrand cannot supply."""


class NonConvergenceError(MasterKernelsError):
    """Quadrature or series acceleration failed to reach tolerance."""


class SingularOnPathError(MasterKernelsError):
    """Integrand evaluation failed on the integration path."""


class ThresholdViolationError(MasterKernelsError):
    """Oscillatory-Gaussian rate exceeds the divergence threshold."""


class PoleOrderError(MasterKernelsError):
    """Symmetrization did not regularize the origin singularity."""


class OnContourError(MasterKernelsError):
    """A residue sits on the integration contour and the integrand does not vanish there."""


class PremiseError(MasterKernelsError):
    """A theorem premise (vanishing/growth condition) is violated."""


class ResonanceError(MasterKernelsError):
    """Closed form hits a cosecant pole (perfect-square resonance)."""


class ParamWindowError(MasterKernelsError):
    """Parameter outside the catalog entry's validity window."""
