""" This module implements expression transformer classes. These classes take an
expression parsed with Lark and produce the corresponding library object.

"""

from curvefact.exprtransformers.base_transformer import BaseTransformer
from curvefact.exprtransformers.polynomial import PolynomialTransformer, parse_polynomial

__all__ = (
    "BaseTransformer",
    "PolynomialTransformer",
    "parse_polynomial",
)
