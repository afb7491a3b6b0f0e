"""Exception hierarchy shared by the series and polynomial layers."""


class AjackError(Exception):
    """Base class for all library errors."""


class LevelMismatchError(AjackError):
    """Two series with different level tags were combined additively."""


class GridError(AjackError):
    """Leading exponents differ by an amount not representable on a common grid."""


class NotInvertibleError(AjackError):
    """Series inversion/division left the Laurent-polynomial coefficient ring."""


class DomainError(AjackError):
    """Numeric evaluation outside the domain of convergence (Im tau <= 0, poles)."""


class ResonanceError(AjackError):
    """Zero eigenvalue denominator in the Jack recursion (Definition ill-posed here)."""
