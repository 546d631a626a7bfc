"""Exception hierarchy shared by all hcolor modules.

Every error raised by the public API derives from HcolorError, so callers
(including the CLI, which maps input problems to exit code 3) can catch one
base class.  Names follow the operation contracts; most carry a short message
with the offending index or vertex.
"""


class HcolorError(Exception):
    """Base class for all errors raised by this package."""


class NotCubic(HcolorError):
    """A vertex has degree other than three (loops count twice)."""


class BadIndex(HcolorError):
    """A vertex or edge index is out of range or otherwise malformed."""


class LoopNotAllowed(BadIndex):
    """A loop was supplied to a builder that forbids loops."""


class UnknownName(HcolorError):
    """Unknown catalog graph name."""


class NotATriangle(HcolorError):
    """The given edges do not form a triangle."""


class NotContractible(HcolorError):
    """Contracting the triangle would be refused by the caller's contract."""


class LoopAtExpandedVertex(HcolorError):
    """A vertex selected for triangle expansion carries a loop."""


class BadK(HcolorError):
    """A size parameter is out of its allowed range."""


class PreconditionViolated(HcolorError):
    """A structural precondition (connected, simple, bridgeless, ...) fails."""


class MalformedInput(HcolorError):
    """Unparseable graph text or corpus entry."""


class EdgeInTriangle(HcolorError):
    """The edge lies inside the distinguished triangle."""


class NotThreeColorable(HcolorError):
    """A construction required a 3-edge-colorable input."""


class NoSuchPMPair(HcolorError):
    """No pair of perfect matchings meets the required intersection."""


class HasPerfectMatching(HcolorError):
    """The operation requires a graph without a perfect matching."""


class OracleFailed(HcolorError):
    """An injected oracle returned no witness where one was required."""


class ProofAssertionFailed(HcolorError):
    """A structural fact the pipeline relies on failed to hold on this input."""


class BudgetExceeded(HcolorError):
    """Search node budget exhausted before a definite answer was reached."""


class EquivalenceViolation(HcolorError):
    """Two results that must agree (dual routes) disagree."""


class NotADigon(HcolorError):
    """The given pair of edges is not a reducible digon."""


class NotAString(HcolorError):
    """The given structure is not a reducible diamond string."""


class BadJoinConfiguration(HcolorError):
    """A parity cover violates the per-vertex join configuration."""


class NoValidRenaming(HcolorError):
    """No permutation of cover parts satisfies the descent normal form."""


class PartialMap(HcolorError):
    """An edge map does not assign every source edge."""


class ChainMismatch(HcolorError):
    """Composition was attempted between maps whose middle graphs differ."""


class SchemaMismatch(HcolorError):
    """A certificate does not match the expected schema."""


class VerificationFailed(HcolorError):
    """A certificate's payload fails re-verification."""


class NotProper(HcolorError):
    """A coloring assigns the same color to two adjacent edges."""
