"""Exception types shared across the package."""


class SqfreeNbhdError(Exception):
    """Base class for all package errors."""


class BadToken(SqfreeNbhdError):
    pass


class SelfLoop(SqfreeNbhdError):
    pass


class DuplicateEdge(SqfreeNbhdError):
    pass


class HasCycle(SqfreeNbhdError):
    pass


class Disconnected(SqfreeNbhdError):
    pass


class BadParameter(SqfreeNbhdError):
    pass


class EmptyComplex(SqfreeNbhdError):
    pass


class SizeMismatch(SqfreeNbhdError):
    pass


class KTooLarge(SqfreeNbhdError):
    pass


class BudgetExceeded(SqfreeNbhdError):
    pass


class NotEquigenerated(SqfreeNbhdError):
    pass


class NotPendant(SqfreeNbhdError):
    pass


class NotCaterpillar(SqfreeNbhdError):
    pass
