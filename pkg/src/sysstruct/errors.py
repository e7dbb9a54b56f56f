"""Exception types raised across the package."""


class StructureError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(StructureError, ZeroDivisionError):
    pass


class DimensionMismatch(StructureError, ValueError):
    pass


class SingularMatrix(StructureError, ArithmeticError):
    pass


class IndexNotZero(SingularMatrix):
    """``I - Atil`` is singular: the auxiliary equations cannot be solved."""


class AlgebraicLoop(SingularMatrix):
    """``I - S K`` is singular in an LFT interconnection."""


class SingularLoop(SingularMatrix):
    """``I - Q`` (or ``I - Qint``) is singular."""


class NoManifestOutputs(StructureError, ValueError):
    pass


class InconsistentComponent(StructureError, ValueError):
    """A hidden variable crosses the boundary of a component."""


class BadNode(StructureError, ValueError):
    pass


class ParseError(StructureError, ValueError):
    pass
