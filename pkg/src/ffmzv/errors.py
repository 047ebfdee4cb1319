"""Exception types shared across the package."""


class FFMzvError(Exception):
    """Base class for all package errors."""


class DivisionByZero(FFMzvError, ZeroDivisionError):
    """Inversion or division by a zero element."""


class NotInvertible(FFMzvError):
    """Element has no inverse in the requested residue ring."""


class InvalidPrime(FFMzvError):
    """Modulus is not a monic irreducible polynomial."""


class InvalidFieldSpec(FFMzvError, ValueError):
    """Malformed or inconsistent finite-field description."""


class MixedModulus(FFMzvError):
    """Arithmetic between residue elements with different (v, N)."""


class CapTooSmall(FFMzvError):
    """Vanishing degree could not be certified within the search cap."""


class InvalidFamilyInput(FFMzvError, ValueError):
    """Input violates the preconditions of a relation family."""


class InvalidEvaluator(FFMzvError, ValueError):
    """Evaluator incompatible with the relation or with itself."""


class InvalidScope(FFMzvError, ValueError):
    """Malformed relation-search scope."""


class ScopeMismatch(FFMzvError, ValueError):
    """Relations being compared were produced under a different scope."""


class DoublingLawViolated(FFMzvError):
    """h(d, 2s) != h(d, s)^2 on a table that claims the doubling law."""


class ParseError(FFMzvError, ValueError):
    """Malformed polynomial, tuple, or field-spec literal."""
