"""Exception types shared across the package."""


class ReflowLensError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ReflowLensError, ValueError):
    """An input lies outside the domain where a formula is defined."""


class NoEquilibriumAngle(DomainError):
    """Surface energies admit no Young contact angle (full spreading or full beading)."""


class InsufficientData(ReflowLensError, ValueError):
    pass


class NonPhysicalFit(ReflowLensError):
    """A spin-curve fit produced thickness that does not fall with speed."""


class DegenerateFit(ReflowLensError):
    pass


class ProfileInconsistent(ReflowLensError):
    """A fitted circle places the apex outside (0, 2R) above the base plane."""


class InputFormatError(ReflowLensError, ValueError):
    """An input file does not follow its declared format."""


class RecipeFormatError(InputFormatError):
    """A recipe is structurally malformed (bad keys, missing step fields)."""
