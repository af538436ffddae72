"""Exception types raised by the engine."""


class NetFreqError(Exception):
    """Base class for all engine errors."""


class SentinelInInput(NetFreqError, ValueError):
    """The terminator symbol was passed where a real character is required."""


class OffsetOutOfRange(NetFreqError, IndexError):
    pass


class StoreNotFresh(NetFreqError):
    """A tree can only be built on an unbound store that holds just the sentinel."""


class NotADescendant(NetFreqError, ValueError):
    pass


class StaleReport(NetFreqError):
    """An update report was applied out of sequence."""


class InvariantError(NetFreqError, AssertionError):
    """A structural invariant of the tree or of the NF bookkeeping was violated."""
