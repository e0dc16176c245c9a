class PolyominoError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(PolyominoError):
    pass


class RaggedRows(PolyominoError):
    pass


class NotConnected(PolyominoError):
    pass


class NotSublattice(PolyominoError):
    pass


class NonUnitCover(PolyominoError):
    """A cover relation of the vertex lattice is not a unit step."""


class NegativeCoefficient(PolyominoError):
    """An h-vector transform produced a negative coefficient."""


class TooLarge(PolyominoError):
    pass


class IsThin(PolyominoError):
    pass


class NotLConvex(PolyominoError):
    pass


class ProjectionInvariantFailed(PolyominoError):
    pass


class OutOfRange(PolyominoError):
    pass


class CounterexampleFound(PolyominoError):
    """A machine-checked statement failed on a concrete instance."""
