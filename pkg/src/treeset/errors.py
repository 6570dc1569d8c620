"""Exception types shared across the package."""


class TreeSetError(Exception):
    """Base class for all errors raised by this package."""


class HorizonExceeded(TreeSetError):
    """A query needs words longer than the factor set's horizon."""

    def __init__(self, needed, horizon, what=""):
        self.needed = needed
        self.horizon = horizon
        msg = f"needs words of length {needed} but horizon is {horizon}"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class EmptyWordInCode(TreeSetError):
    pass


class StabilizationFailed(TreeSetError):
    """The prefix is too short for its factor set to be trusted."""


class NotProlongable(TreeSetError):
    pass


class TooManyBlocks(TreeSetError):
    pass


class NoOccurrence(TreeSetError):
    pass


class PeriodicSet(TreeSetError):
    pass


class ConjugacyViolated(TreeSetError):
    def __init__(self, message, element=None):
        self.element = element
        super().__init__(message)


class NoSpecialVertex(TreeSetError):
    pass


class DisconnectedGraph(TreeSetError):
    pass


class NotFolded(TreeSetError):
    pass
