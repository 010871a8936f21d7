"""Exception types shared across the package."""


class RosetteError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RosetteError):
    """Argument lies outside the closed unit disk (or the positive reals for the gamma function)."""


class NoConvergence(RosetteError):
    """The series evaluator could not certify the requested absolute tolerance."""


class SingularPoint(RosetteError):
    """Derivative requested too close to a 2n-th root of unity."""


class SingularParameter(RosetteError):
    """Boundary derivative requested at (or too close to) a multiple of pi/n."""


class NonCanonicalBeta(RosetteError):
    """Operation requires beta in the canonical interval (-pi/2, pi/2]."""


class WrongBeta(RosetteError):
    """Operation is only defined for beta = pi/2."""


class IntervalCrossesCusp(RosetteError):
    """Parameter interval is not contained in a single inter-cusp interval."""


class TooCloseToCurve(RosetteError):
    """Winding-number probe lies within the exclusion radius of the curve."""


class OpenCurve(RosetteError):
    """Winding number requested for a polyline whose endpoints do not coincide."""


class QuadratureFailure(RosetteError):
    """Adaptive quadrature did not reach the requested accuracy."""
