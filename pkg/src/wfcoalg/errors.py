"""Exception types shared across the package."""


class WfcoalgError(Exception):
    """Base class for all library errors."""


class CarrierMismatch(WfcoalgError):
    """An operation received objects over incompatible carriers."""


class FunctorMismatch(WfcoalgError):
    """An operation received objects over different functors."""


class MalformedValue(WfcoalgError):
    """A structured value does not match its functor shape or carrier."""


class CapExceeded(WfcoalgError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotAHomomorphism(WfcoalgError):
    """A map claimed to be a coalgebra homomorphism is not one."""


class NotWellFounded(WfcoalgError):
    """A well-foundedness certificate was required but does not hold."""


class IncompatibleQuotient(WfcoalgError):
    """A surjection's kernel is not a congruence; carries a witness pair."""

    def __init__(self, a, b):
        super().__init__(f"kernel pair ({a!r}, {b!r}) has unequal pushed structure")
        self.witness = (a, b)


class InternalConsistencyError(WfcoalgError):
    """Two independent computations of the same fact disagree."""
