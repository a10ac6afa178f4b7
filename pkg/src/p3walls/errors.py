"""Exception hierarchy.

DomainError and its subclasses signal well-formed input that lies outside a
function's mathematical domain (the CLI maps them to exit code 1).  Plain
ValueError/TypeError remain for malformed input such as parse failures.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input is syntactically fine but outside the supported domain."""


class NotSemicircleError(DomainError):
    """A semicircular wall was required but another locus was supplied."""


class UnboundedAdmissibleError(DomainError):
    """The admissible third-component set is infinite for this wall."""


class DegenerateWindowError(DomainError):
    """A drawing window with empty interior was supplied."""


class ScenarioValidationError(DomainError):
    """A scenario config failed a consistency check; message locates it."""
