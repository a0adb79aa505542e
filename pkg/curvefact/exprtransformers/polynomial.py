"""Transform parsed expressions into [`MPoly`][curvefact.exactalg.mpoly.MPoly] objects."""
from fractions import Fraction
from typing import Sequence, Union

from lark import v_args
from lark.exceptions import VisitError

from curvefact.exactalg import MPoly
from curvefact.exceptions import CurvefactError, UnknownVariable
from curvefact.exprparser import LarkParser
from curvefact.exprtransformers.base_transformer import BaseTransformer

__all__ = ("PolynomialTransformer", "parse_polynomial")


class PolynomialTransformer(BaseTransformer):
    """Builds a polynomial in a declared variable context.

    Attributes:
        variables: The admissible variable names, in context order.
        line_offset: Added to the line numbers of error messages.

    """

    def __init__(self, variables: Sequence[str] = ("t",), line_offset: int = 0):
        super().__init__()
        self.variables = tuple(variables)
        self.line_offset = line_offset

    def _poly(self, value: Union[int, Fraction, MPoly]) -> MPoly:
        if isinstance(value, MPoly):
            return value
        return MPoly.const(value, self.variables)

    def postprocess(self, result) -> MPoly:
        return self._poly(result).with_vars(self.variables)

    @v_args(inline=True)
    def variable(self, token):
        name = str(token)
        if name not in self.variables:
            raise UnknownVariable(
                f"line {token.line + self.line_offset}, column {token.column}: unknown variable {name!r}; "
                f"declared variables are {', '.join(self.variables)}"
            )
        return MPoly.var(name, self.variables)

    @v_args(inline=True)
    def add(self, a, b):
        return self._poly(a) + b

    @v_args(inline=True)
    def sub(self, a, b):
        return self._poly(a) - b

    @v_args(inline=True)
    def mul(self, a, b):
        return self._poly(a) * b

    @v_args(inline=True)
    def neg(self, a):
        return -self._poly(a)

    @v_args(inline=True)
    def pow(self, base, exponent):
        return self._poly(base) ** int(exponent)


_PARSER = None


def parse_polynomial(
    text: str, variables: Sequence[str] = ("t",), line_offset: int = 0
) -> MPoly:
    """Parse an expression into a polynomial in the context `variables`.

    Parameters:
        text: The expression, e.g. `"t^6 + (1+s6)*t^7"`.
        variables: Declared variable names.
        line_offset: Added to the line numbers of syntax errors.

    Raises:
        ExpressionSyntaxError: If the text does not follow the grammar.
        UnknownVariable: If a name is not declared.

    Returns:
        The parsed polynomial.

    """
    global _PARSER
    if _PARSER is None:
        _PARSER = LarkParser()
    tree = _PARSER.parse(text, line_offset=line_offset)
    try:
        return PolynomialTransformer(variables, line_offset).transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, CurvefactError):
            raise exc.orig_exc from None
        raise
