"""Domain error hierarchy.

Every error carries a stable `code` string that the HTTP layer and CLI echo
verbatim, so clients can branch on codes instead of parsing messages.
"""

from __future__ import annotations


class ClioxError(Exception):
    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class UnknownIdentity(ClioxError):
    code = "UnknownIdentity"


class BadSignature(ClioxError):
    code = "BadSignature"


class DuplicateAsset(ClioxError):
    code = "DuplicateAsset"


class UnknownNft(ClioxError):
    code = "UnknownNft"


class NotOwner(ClioxError):
    code = "NotOwner"


class InsufficientFunds(ClioxError):
    code = "InsufficientFunds"


class BadSplit(ClioxError):
    code = "BadSplit"


class UnknownOrder(ClioxError):
    code = "UnknownOrder"


class NotLocked(ClioxError):
    code = "NotLocked"


class DuplicateDid(ClioxError):
    code = "DuplicateDid"


class MissingLocator(ClioxError):
    code = "MissingLocator"


class NotFound(ClioxError):
    code = "NotFound"


class DigestMismatch(ClioxError):
    code = "DigestMismatch"


class BadRuntimeToken(ClioxError):
    code = "BadRuntimeToken"


class UnknownLocator(ClioxError):
    code = "UnknownLocator"


class SealTampered(ClioxError):
    code = "SealTampered"


class UnknownAsset(ClioxError):
    code = "UnknownAsset"


class AssetRetired(ClioxError):
    code = "AssetRetired"


class MissingSeed(ClioxError):
    code = "MissingSeed"


class UnknownJob(ClioxError):
    code = "UnknownJob"


class NotYourJob(ClioxError):
    code = "NotYourJob"


class NotFinished(ClioxError):
    code = "NotFinished"


class AlgorithmError(ClioxError):
    code = "AlgorithmError"


class PolicyViolation(ClioxError):
    code = "PolicyViolation"


class CorpusLoadError(ClioxError):
    code = "CorpusLoadError"


class EmptyCorpus(ClioxError):
    code = "EmptyCorpus"


class BadK(ClioxError):
    code = "BadK"


class BadTopicCount(ClioxError):
    code = "BadTopicCount"


class AuthRequired(ClioxError):
    code = "AuthRequired"


class RoleRequired(ClioxError):
    code = "RoleRequired"


class ConsentRequired(ClioxError):
    code = "ConsentRequired"
