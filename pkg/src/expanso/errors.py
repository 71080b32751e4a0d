"""Exception hierarchy.  Everything raised on bad input derives from
:class:`ExpansoError`, which is also a :class:`ValueError`."""


class ExpansoError(ValueError):
    pass


class EmptySpace(ExpansoError):
    pass


class NotATopology(ExpansoError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InvalidCover(ExpansoError):
    pass


class NotContinuous(ExpansoError):
    def __init__(self, message, witness=None, direction="image"):
        super().__init__(message)
        self.witness = witness
        self.direction = direction


class NotInvariant(ExpansoError):
    pass


class NotClosed(ExpansoError):
    pass


class NotADiagonalNbhd(ExpansoError):
    pass


class CoverNotExpansive(ExpansoError):
    pass


class OracleScaleExceeded(ExpansoError):
    pass


class SearchBudgetExceeded(ExpansoError):
    pass


class ScaleCap(ExpansoError):
    pass


class EmptyShift(ExpansoError):
    pass


class FixedSymbolMissing(ExpansoError):
    pass


class InstanceError(ExpansoError):
    """Malformed instance document."""
