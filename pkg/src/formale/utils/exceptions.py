"""
Custom exceptions for formale.
"""


class FormaleError(Exception):
    """Base class for every error raised by formale."""
    pass


class ValidationError(FormaleError):
    """Raised when validation of user input fails."""
    pass


class ConfigurationError(FormaleError):
    """Raised when configuration is invalid."""
    pass


class CacheError(FormaleError):
    """Raised when trace cache operations fail."""
    pass


class CurveParseError(FormaleError):
    """Raised when a curve or coefficient file cannot be parsed."""
    pass


class SingularCurveError(FormaleError):
    """Raised when a Weierstrass equation has zero discriminant."""
    pass


class NonzeroConstantTerm(FormaleError):
    """Raised when composing with an inner series g where g(0) != 0."""
    pass


class NotReversible(FormaleError):
    """Raised when a series has no compositional inverse over its ring."""
    pass


class BadConstantTerm(FormaleError):
    """Raised when a reciprocal square root is requested for f(0) != 1."""
    pass


class NotPrime(FormaleError):
    """Raised when a prime was expected."""
    pass


class BadReduction(FormaleError):
    """Raised when an operation needs good reduction at p but p divides the discriminant."""
    pass


class DegenerateFamily(FormaleError):
    """Raised when the family-1 closed form has an identically zero denominator."""
    pass


class IntegralityViolation(FormaleError):
    """Raised when a series that must be integral has a non-integral coefficient."""
    pass


class InsufficientOrder(FormaleError):
    """Raised when an expansion is too short for the requested check."""
    pass


class HasseBoundViolation(FormaleError):
    """Raised when a computed trace violates |t_p| < 2 sqrt(p)."""
    pass


class MinimalityNotAsserted(FormaleError):
    """Raised when a bad-prime congruence is requested without --assert-minimal."""
    pass
