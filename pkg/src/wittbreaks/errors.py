"""Exception hierarchy.

Four base classes, one per CLI exit code: ParseError (1), ValidationError (2),
PreconditionError (3, a mathematical precondition was violated by the caller),
InternalError (4, an internal invariant failed -- always a bug or corrupted
input, never a recoverable condition).
"""


class ParseError(Exception):
    """Malformed input text (JSON syntax, element syntax)."""


class ValidationError(Exception):
    """Well-formed input describing an invalid object (p not prime, reducible
    modulus, exponents out of order, shape mismatches in files)."""


class PreconditionError(Exception):
    """Caller violated a documented mathematical precondition."""


class InternalError(Exception):
    """An invariant that should hold identically failed at runtime."""


# -- precondition violations -------------------------------------------------

class DivisionByZero(PreconditionError):
    pass


class FieldMismatch(PreconditionError):
    """Operands belong to different fields or rings."""


class ShapeMismatch(PreconditionError):
    """Witt vectors of different p, length, or ring were combined."""


class NotAPthPower(PreconditionError):
    """Exponent not divisible by p where a p-th root was requested."""


class ZeroOperand(PreconditionError):
    pass


class PrecisionRequired(PreconditionError):
    """An operation that only makes sense modulo t^N was called without N."""


class PrecisionPresent(PreconditionError):
    """An operation requiring exact data received a precision-bounded value."""


class NoRootFound(PreconditionError):
    """No root of the modulus exists in the target field (bad degrees)."""


class CutOutOfRange(PreconditionError):
    """Truncation index outside 1..n-1."""


class UnassignedVariable(PreconditionError):
    """Polynomial evaluation with a variable left unassigned."""


class NegativeValuation(PreconditionError):
    pass


class NotReduced(PreconditionError):
    """Vector fails the reducedness requirement of the break formulas."""


class DegenerateCharacter(PreconditionError):
    """The attached character does not have full order, so the break
    formulas do not apply as stated (leading component is a wp-image)."""


class NotTotallyRamifiedProfile(PreconditionError):
    """m_0 <= 0 where the totally ramified break formula was requested."""


class NotIncreasing(PreconditionError):
    """Break sequence fails strict monotonicity."""


class OutOfRange(PreconditionError):
    pass


class ZeroElement(PreconditionError):
    """Valuation of the zero element was requested in a tower."""


class UnsupportedDepth(PreconditionError):
    """Tower depth outside the supported range."""


# -- internal invariant violations -------------------------------------------

class InexactDivision(InternalError):
    """Division by a power of p left a remainder during polynomial
    generation; the recursion would be wrong."""


class IdentityViolation(InternalError):
    """A structural identity that holds for all inputs failed on an instance."""


class NonUniqueMinimum(InternalError):
    """Tower valuation minimum attained twice; input was not in the
    prime-to-p regime the construction guarantees."""


class NotTotallyRamified(InternalError):
    """In-tower reduction drove a right-hand side to valuation >= 0,
    contradicting total ramification."""


class NonIncreasingBreaks(InternalError):
    """Filtration breaks read from the tower failed to increase."""


class NoCancellingCoefficient(InternalError):
    """No unit cancels the leading term during in-tower reduction."""


EXIT_CODES = {
    ParseError: 1,
    ValidationError: 2,
    PreconditionError: 3,
    InternalError: 4,
}


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code of its category (0 = no match)."""
    for base, code in EXIT_CODES.items():
        if isinstance(exc, base):
            return code
    return 0
