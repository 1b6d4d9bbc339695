"""Exception types raised by ribbonlink."""


class RibbonlinkError(ValueError):
    """Base class for all ribbonlink errors."""


# -- combinatorial maps -------------------------------------------------

class NotPermutation(RibbonlinkError):
    """sigma or alpha is not a permutation of the dart set (or alpha is not
    an involution)."""


class FixedPointAlpha(RibbonlinkError):
    """alpha fixes a dart, so some edge has only one end."""


class WeightCoverage(RibbonlinkError):
    """An edge weight table does not cover the edge set exactly once."""


class UnknownEdge(RibbonlinkError):
    """An edge id does not belong to the map."""


class LabelNotTwice(RibbonlinkError):
    """An arrow presentation label does not occur exactly twice."""


class NonOrientable(RibbonlinkError):
    """An arrow presentation cannot be consistently oriented; it describes a
    non-orientable ribbon graph, which is out of scope."""


class BudgetExceeded(RibbonlinkError):
    """An exact search was asked to run past its size budget.  Enlarge the
    budget; the answer is never silently falsified."""


# -- link diagrams ------------------------------------------------------

class ArcCount(RibbonlinkError):
    """Arc labels of a PD code are not 1..2n with each label used twice."""


class NonPlanar(RibbonlinkError):
    """The traced faces violate the sphere Euler relation n - 2n + f = 2."""


class Disconnected(RibbonlinkError):
    """The diagram's underlying 4-valent graph is not connected."""


class BadOrientation(RibbonlinkError):
    """Arc numbering does not define a consistent orientation of the link
    components."""


# -- seifert / parallels ------------------------------------------------

class NotPlane(RibbonlinkError):
    """A plane (genus zero, connected) map was required."""


class NotEulerian(RibbonlinkError):
    """A cd-labeling whose contraction subgraphs are not Eulerian was passed
    where an admissible labeling is required."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class BadR(RibbonlinkError):
    """Invalid parallel multiplicity r."""
