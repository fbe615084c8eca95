"""Exception types raised across the package."""


class UeqError(Exception):
    pass


class OverlapError(UeqError, ValueError):
    pass


class CoverageError(UeqError, ValueError):
    pass


class CarrierMismatch(UeqError, ValueError):
    pass


class EmptyGeneratorSet(UeqError, ValueError):
    pass


class EmptyFamily(UeqError, ValueError):
    pass


class EmptySubset(UeqError, ValueError):
    pass


class TooManyFactors(UeqError, ValueError):
    pass


class NotLeftInverse(UeqError, ValueError):
    pass


class NotAPseudoMetric(UeqError, ValueError):
    pass


class NotTransitive(UeqError, ValueError):
    pass


class NonPositiveAlpha(UeqError, ValueError):
    pass


class CharacterizationMismatch(UeqError, AssertionError):
    """Two routes that must agree by a theorem did not. Always a bug."""


class SchemaError(UeqError, ValueError):
    pass


class ValidationError(UeqError, ValueError):
    pass


class UnknownCheckId(UeqError, KeyError):
    pass
