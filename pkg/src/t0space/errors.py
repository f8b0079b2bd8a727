"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class NotT0Error(WorkbenchError):
    """Two points have identical open-neighborhood families."""


class PointOutOfRangeError(WorkbenchError):
    """A point set references indices outside 0..n-1."""


class CapExceededError(WorkbenchError):
    """An operation would exceed its configured size cap."""


class EmptySetError(WorkbenchError):
    """The operation requires a nonempty set."""


class NotIrreducibleFamilyError(WorkbenchError):
    """A Hoare-space family contains a non-irreducible or non-closed member."""


class FamilyNotIrreducibleError(WorkbenchError):
    """A Rudin family is not irreducible as a subset of the Smyth space."""


class PremiseViolatedError(WorkbenchError):
    """A Rudin problem's closed set misses some family member."""


class NotContinuousError(WorkbenchError):
    """A point mapping has a non-open preimage of some open set."""


class NotOmegaWellFilteredError(WorkbenchError):
    """The target space fails the omega-well-filtered classifier."""


class NoGenericPointError(WorkbenchError):
    """No point generates the given closed set (internal consistency failure)."""


class NotRetractionError(WorkbenchError):
    """The given pair of maps does not compose to the identity."""


class OracleInconsistentError(WorkbenchError):
    """A stream's upper-bound oracle returned a non-dominating element."""


class IllFormedFamilyError(WorkbenchError):
    """A ray-family descriptor is invalid (e.g. claims a countable sup of Omega)."""


class NotCoveredError(WorkbenchError):
    """The family intersection is not contained in the candidate open."""


class NotNeighborhoodOfTopError(WorkbenchError):
    """A candidate base member is not a Scott-open neighborhood of the top element."""


class ParseError(WorkbenchError):
    """A document or report could not be parsed."""


class UnknownCatalogSpaceError(WorkbenchError):
    """No catalog space is registered under the given name."""
