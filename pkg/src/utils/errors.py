"""Exception hierarchy shared by the toolkit.

Every error carries a stable ``code`` so that the command line front end can
report failures as one machine-readable JSON line without string matching.
"""
from __future__ import annotations


class SpectralToolkitError(Exception):
    """Base class for all toolkit failures."""

    code = "toolkit_error"

    def to_payload(self) -> dict:
        return {"error": self.code, "message": str(self)}


class GraphValidationError(SpectralToolkitError, ValueError):
    """A graph, document or parameter violates its structural invariants."""

    code = "invalid_graph"


class UnknownIdError(SpectralToolkitError, KeyError):
    """A vertex or arc id does not exist in the graph."""

    code = "unknown_id"

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class DisconnectedGraphError(SpectralToolkitError, ValueError):
    code = "disconnected_graph"


class NeighborhoodError(SpectralToolkitError, ValueError):
    """The vertex set does not cover every virtualized arc."""

    code = "neighborhood_violation"


class NonHermitianError(SpectralToolkitError, ValueError):
    code = "non_hermitian"


class EigensolverError(SpectralToolkitError, ArithmeticError):
    """The doubled spectrum did not split into matching pairs."""

    code = "eigensolver_failure"


class CostGuardError(SpectralToolkitError):
    """A grid computation would exceed the configured cost cap."""

    code = "cost_guard"


class ModelError(SpectralToolkitError, ValueError):
    code = "invalid_model"


class CriterionError(SpectralToolkitError, ValueError):
    """Inputs outside the hypotheses of the gap criterion or the symmetry refinement."""

    code = "criterion_precondition"


class InvariantViolation(SpectralToolkitError, AssertionError):
    """A numerically checked identity failed beyond its tolerance."""

    code = "invariant_violation"


class DiagramError(SpectralToolkitError, ValueError):
    code = "invalid_diagram"


class CommandError(SpectralToolkitError, ValueError):
    """Command line arguments are missing, conflicting or malformed."""

    code = "invalid_command"


__all__ = [
    "SpectralToolkitError",
    "GraphValidationError",
    "UnknownIdError",
    "DisconnectedGraphError",
    "NeighborhoodError",
    "NonHermitianError",
    "EigensolverError",
    "CostGuardError",
    "ModelError",
    "CriterionError",
    "InvariantViolation",
    "DiagramError",
    "CommandError",
]
