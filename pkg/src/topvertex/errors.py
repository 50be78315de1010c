"""Shared exception types."""


class EmptyPartition(ValueError):
    """A surgery that needs a nonempty partition was given the empty one."""


class NotPolynomial(ValueError):
    """A series marked truncated-open was used where a closed polynomial is required."""


class WindowUnknown(ValueError):
    """A coefficient comparison window reaches past what a series knows."""


class LabelOutOfRange(ValueError):
    """A boundary label does not exist at this window size."""


class Unmatchable(ValueError):
    """The graph has no perfect matching."""


class BadNodeChoice(ValueError):
    """Marked boundary nodes violate the pairing preconditions."""


class BoxOutOfWindow(ValueError):
    """A box falls outside the drawing window."""


class OddSector(ValueError):
    """A sector holds an odd number of nodes, so it cannot be nested-paired."""


class InvalidIdeal(ValueError):
    """A box set is not downward closed over its base configuration."""
