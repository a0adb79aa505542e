"""This submodule implements the
[`BaseTransformer`][curvefact.exprtransformers.base_transformer.BaseTransformer]
class, the common ancestor of the transformers turning expression trees parsed by
lark into library objects.

"""

import abc
from fractions import Fraction
from typing import Any

from lark import Transformer, Tree, v_args

from curvefact.exceptions import ExpressionSyntaxError

__all__ = ("BaseTransformer",)


class BaseTransformer(abc.ABC, Transformer):
    """Generic expression transformer handling the literal parts of the grammar.

    Subclasses implement the operator rules for their target type.

    """

    def postprocess(self, result) -> Any:
        """Post-process the transformed tree, returning the final object."""
        return result

    def transform(self, tree: Tree) -> Any:
        """Transform the tree using the Lark `Transformer` then run the
        post-processing method.

        """
        return self.postprocess(super().transform(tree))

    def __default__(self, data, children, meta):
        """The default rule to call when no definition is found for a particular construct."""
        raise NotImplementedError(
            f"Calling __default__, i.e., unknown grammar concept. data: {data}, children: {children}, meta: {meta}"
        )

    @v_args(inline=True)
    def integer(self, token):
        """integer: INT"""
        return int(token)

    @v_args(inline=True)
    def rational(self, token):
        """rational: RATIONAL"""
        num, den = str(token).split("/")
        if int(den) == 0:
            raise ExpressionSyntaxError(
                f"Zero denominator in {token}", line=token.line, column=token.column
            )
        return Fraction(int(num), int(den))

    @abc.abstractmethod
    def variable(self, args):
        """variable: NAME"""

    @abc.abstractmethod
    def add(self, args):
        """add: sum "+" product"""

    @abc.abstractmethod
    def sub(self, args):
        """sub: sum "-" product"""

    @abc.abstractmethod
    def mul(self, args):
        """mul: product "*" unary"""

    @abc.abstractmethod
    def neg(self, args):
        """neg: "-" unary"""

    @abc.abstractmethod
    def pow(self, args):
        """pow: atom "^" INT"""
