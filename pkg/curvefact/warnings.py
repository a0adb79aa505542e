__all__ = (
    "CurvefactWarning",
    "IncompleteSemigroup",
    "TruncatedCone",
    "ExponentConventionWarning",
    "TransversalityOverridden",
    "ParameterSpecialized",
    "NonExactNormalization",
)


class CurvefactWarning(Warning):
    """Base Warning for the `curvefact` package"""

    def __init__(self, detail: str = None, title: str = None, *args) -> None:
        detail = detail if detail else self.__doc__
        super().__init__(detail, *args)
        self.detail = detail
        self.title = title if title else self.__class__.__name__

    def __repr__(self) -> str:
        attrs = {
            "detail": self.detail,
            "title": self.title,
        }
        return "<{:s}({:s})>".format(
            self.__class__.__name__,
            " ".join(
                [
                    f"{attr}={value!r}"
                    for attr, value in attrs.items()
                    if value is not None
                ]
            ),
        )

    def __str__(self) -> str:
        return self.detail if self.detail is not None else ""


class IncompleteSemigroup(CurvefactWarning):
    """No run of e consecutive semigroup elements was found below the bound, so the
    gaps, delta and conductor are only lower-bound information."""


class TruncatedCone(CurvefactWarning):
    """Some residues have no jump exponent below the truncation; the secant cone may
    be missing planes."""


class ExponentConventionWarning(CurvefactWarning):
    """A plane branch carries exponents not divisible by the multiplicity that are not
    characteristic but cannot be removed by a change of coordinates."""


class TransversalityOverridden(CurvefactWarning):
    """A projection was computed without checking transversality."""


class ParameterSpecialized(CurvefactWarning):
    """A family was specialized at the closed point s = 0."""


class NonExactNormalization(CurvefactWarning):
    """The implicit equation was normalized by a truncated parameter series."""
