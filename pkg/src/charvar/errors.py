"""Exception hierarchy.

Two families matter to callers: ``ValidationError`` (bad input, CLI exit 2)
and ``VerificationError`` (a refuted identity or failed certificate, CLI
exit 3).  Everything else is a plain bug.
"""


class CharvarError(Exception):
    pass


class ValidationError(CharvarError, ValueError):
    pass


class VerificationError(CharvarError):
    pass


# algebra
class UnknownVariable(ValidationError):
    pass


class MissingVariable(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class OverlappingGroups(ValidationError):
    pass


class DivisionByZeroPoly(CharvarError, ZeroDivisionError):
    pass


class NotDivisible(CharvarError, ArithmeticError):
    pass


# chebyshev / words
class EmptyFamily(ValidationError):
    pass


class ComplexityLimit(CharvarError):
    pass


class IdentityFailure(VerificationError):
    def __init__(self, identity, j, detail=""):
        self.identity = identity
        self.j = j
        super().__init__(f"identity {identity!r} fails at j={j}" + (f": {detail}" if detail else ""))


# varieties
class InvalidParams(ValidationError):
    pass


class NonHyperbolic(ValidationError):
    pass


class ExceptionalLocus(CharvarError, ArithmeticError):
    pass


# geometry
class ClosedFormMismatch(VerificationError):
    pass


class CertificateFailure(VerificationError):
    pass


class CountMismatch(VerificationError):
    pass


class FiberMismatch(VerificationError):
    pass


class ConsistencyFailure(VerificationError):
    pass


class SuspectSingularity(VerificationError):
    def __init__(self, message, gap=None):
        self.gap = gap
        super().__init__(message)


# oracle
class IdentityRefuted(VerificationError):
    def __init__(self, claim, witness):
        self.claim = claim
        self.witness = witness
        super().__init__(f"claim {claim!r} refuted at {witness}")
