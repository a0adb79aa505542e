from abc import ABC

__all__ = (
    "CurvefactError",
    "MathematicalError",
    "UsageError",
    "NonUnitInput",
    "BadOrder",
    "ZeroDegree",
    "NotSquare",
    "NotDivisible",
    "InsufficientTruncation",
    "TruncationTooSmall",
    "IncompleteTruncation",
    "StandardizationError",
    "DimensionMismatch",
    "NonTransversal",
    "NonReducedImage",
    "NotPolynomialParametrization",
    "VerificationFailed",
    "NoPresentationFound",
    "SameFRequired",
    "MissingParameter",
    "ExpressionSyntaxError",
    "UnknownVariable",
    "InputFileError",
    "POSSIBLE_ERRORS",
)


class CurvefactError(Exception, ABC):
    """This abstract class is the root of all errors raised by `curvefact`.

    Subclasses set a `title` and the process `exit_code` used by the command line
    interface when the error escapes a command.

    Attributes:
        title: A descriptive title for this exception.
        exit_code: The exit status of the `curvefact` command for this error.
        detail: Human-readable description of the particular failure.

    """

    title: str = "Error"
    exit_code: int = None

    def __init__(self, detail: str = None) -> None:
        if self.exit_code is None:
            raise AttributeError(
                f"CurvefactError class {self.__class__.__name__} is missing required `exit_code` attribute."
            )
        self.detail = detail if detail is not None else (self.__doc__ or "").strip()
        super().__init__(self.detail)

    def __str__(self) -> str:
        return self.detail if self.detail is not None else self.__repr__()


class MathematicalError(CurvefactError):
    """The input is well formed but the requested computation failed."""

    exit_code: int = 1
    title: str = "Mathematical Failure"


class UsageError(CurvefactError):
    """The input could not be understood."""

    exit_code: int = 2
    title: str = "Usage Error"


class NonUnitInput(MathematicalError):
    """The series is not a unit with constant term 1."""

    title: str = "Non Unit Input"


class BadOrder(MathematicalError):
    """The series has the wrong t-order for this operation."""

    title: str = "Bad Order"


class ZeroDegree(MathematicalError):
    """A polynomial has degree zero in the elimination variable."""

    title: str = "Zero Degree"


class NotSquare(MathematicalError):
    """The matrix is not square."""

    title: str = "Not Square"


class NotDivisible(MathematicalError):
    """Exact polynomial division left a nonzero remainder."""

    title: str = "Not Divisible"


class InsufficientTruncation(MathematicalError):
    """The working truncation is too small for the requested computation."""

    title: str = "Insufficient Truncation"


class TruncationTooSmall(MathematicalError):
    """The stored coefficients do not determine the answer; retry with a larger truncation."""

    title: str = "Truncation Too Small"


class IncompleteTruncation(MathematicalError):
    """The truncated linear algebra did not reach a certified answer."""

    title: str = "Incomplete Truncation"


class StandardizationError(MathematicalError):
    """The branch cannot be brought into standard form."""

    title: str = "Standardization Error"


class DimensionMismatch(MathematicalError):
    """The projection plane and the branch live in different ambient dimensions."""

    title: str = "Dimension Mismatch"


class NonTransversal(MathematicalError):
    """The kernel of the projection meets the secant cone outside the origin."""

    title: str = "Non Transversal"


class NonReducedImage(MathematicalError):
    """The projected parametrization is not injective (support gcd exceeds 1)."""

    title: str = "Non Reduced Image"


class NotPolynomialParametrization(MathematicalError):
    """The parametrization is a truncated series, not a polynomial in t."""

    title: str = "Not Polynomial Parametrization"


class VerificationFailed(MathematicalError):
    """An exact post-hoc identity check failed."""

    title: str = "Verification Failed"


class NoPresentationFound(MathematicalError):
    """No square presentation matrix was found within the degree caps."""

    title: str = "No Presentation Found"


class SameFRequired(MathematicalError):
    """Both matrix factorizations must share the equation F and the size b."""

    title: str = "Same F Required"


class MissingParameter(UsageError):
    """The assignment does not cover every deformation parameter."""

    title: str = "Missing Parameter"


class ExpressionSyntaxError(UsageError):
    """The expression could not be parsed.

    Attributes:
        line: 1-based line of the offending token, if known.
        column: 1-based column of the offending token, if known.

    """

    title: str = "Syntax Error"

    def __init__(self, detail: str = None, line: int = None, column: int = None):
        self.line = line
        self.column = column
        if detail is not None and line is not None:
            detail = f"line {line}, column {column}: {detail}"
        super().__init__(detail)


class UnknownVariable(UsageError):
    """The expression uses a variable that was not declared."""

    title: str = "Unknown Variable"


class InputFileError(UsageError):
    """The input file does not follow the expected format."""

    title: str = "Input File Error"


POSSIBLE_ERRORS = (
    NonUnitInput,
    BadOrder,
    ZeroDegree,
    NotSquare,
    NotDivisible,
    InsufficientTruncation,
    TruncationTooSmall,
    IncompleteTruncation,
    StandardizationError,
    DimensionMismatch,
    NonTransversal,
    NonReducedImage,
    NotPolynomialParametrization,
    VerificationFailed,
    NoPresentationFound,
    SameFRequired,
    MissingParameter,
    ExpressionSyntaxError,
    UnknownVariable,
    InputFileError,
)
