"""Typed domain errors.

Every error carries a stable machine-readable ``code`` (the class name), which
the command line reports on stderr next to the message.
"""
from __future__ import annotations


class ArtifactError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# threefold-model
class ToddViolation(ArtifactError):
    pass


class NonPositiveDegree(ArtifactError):
    pass


class PencilTooSmall(ArtifactError):
    pass


class UnknownEntry(ArtifactError):
    pass


class NotNormalizable(ArtifactError):
    pass


class NotNormalized(ArtifactError):
    """Chern data lies outside the window ``1 - mu(L) <= mu(E) < 0``."""


class InvalidChernData(ArtifactError):
    pass


# riemann-roch
class NonIntegralChi(ArtifactError):
    pass


class NegativeRank(ArtifactError):
    pass


class NonIntegralRank(ArtifactError):
    pass


class NonIntegralDegree(ArtifactError):
    pass


class RouteMismatch(ArtifactError):
    pass


# spectrum
class InvalidRank(ArtifactError):
    pass


class InvalidSpectrum(ArtifactError):
    pass


class TwistOutOfRange(ArtifactError):
    pass


class UnboundedEnumeration(ArtifactError):
    pass


# hn-polygon
class RankOverflow(ArtifactError):
    pass


class InvalidPoint(ArtifactError):
    pass


class EndpointMismatch(ArtifactError):
    pass


class InvalidPolygon(ArtifactError):
    pass


# gm-family
class NotGloballyGenerated(ArtifactError):
    pass


class TrivialNormalBundle(ArtifactError):
    pass


class DegreeTooSmall(ArtifactError):
    pass


class NotSorted(ArtifactError):
    pass


class UnknownFamilyKind(ArtifactError):
    pass
