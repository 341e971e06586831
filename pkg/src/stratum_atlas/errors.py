"""Exception hierarchy shared by the whole package."""


class AtlasError(ValueError):
    """Base class for every error raised by stratum_atlas."""


class SignatureParseError(AtlasError):
    """Signature text could not be read."""


class InvalidSignatureError(AtlasError):
    """A degree list violates one or more stratum rules.

    ``violations`` holds the short rule names, in a fixed order.
    """

    def __init__(self, degrees, violations):
        self.degrees = tuple(degrees)
        self.violations = tuple(violations)
        super().__init__(
            f"invalid signature {list(self.degrees)}: {', '.join(self.violations)}"
        )


class GroupError(AtlasError):
    """Malformed group, element or homomorphism."""


class BoundExceededError(AtlasError):
    """Brute-force enumeration refused because the group is too large."""


class PreconditionError(AtlasError):
    """An operation was called outside of its domain."""


class UnknownHyperellipticError(PreconditionError):
    """The component's hyperelliptic status is not determined."""
