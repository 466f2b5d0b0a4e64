"""Exception types shared across the package."""

from __future__ import annotations


class HyperNFError(Exception):
    """Base class for every error raised by this package."""


class NotInSpan(HyperNFError):
    """A complex field is not in the span of Theta and the P/R basis."""


class RealityViolation(HyperNFError):
    """Conjugate-pair coefficients of a complex field do not match."""


class BadLinearPart(HyperNFError):
    """The linear part is not diag(i w1, -i w1, i w2, -i w2)."""


class PostRationalityCheck(HyperNFError):
    """A resonant coefficient still depends on the frequencies."""


class GradeTooSmall(HyperNFError):
    """Homological matrices exist only for grade >= 2."""


class DegenerateCubic(HyperNFError):
    """All four cubic radial coefficients vanish."""


class SingularBlock(HyperNFError):
    """A block required to be invertible by a recursion is singular."""

    def __init__(self, index: int, kind: int, message: str = ""):
        self.index = index
        self.kind = kind
        super().__init__(message or f"block (j={index}, kind={kind}) is singular")


class NonUniqueSolve(HyperNFError):
    """A nullity guard failed: the special solve has no unique solution."""


class UncoveredCase(HyperNFError):
    """No lemma describes the survivor set for this parameter regime."""


class KernelViolation(HyperNFError):
    """Leading generator components are not in the required kernel."""
