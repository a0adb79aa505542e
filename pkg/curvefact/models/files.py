# pylint: disable=no-self-argument
from typing import Dict, Optional, Tuple

from pydantic import validator

from curvefact.models.utils import CurvefactModel, StrictField

__all__ = ("BranchFile", "ModuleFile", "MFFile")


class BranchFile(CurvefactModel):
    """The content of a `.branch` file, expressions still unparsed."""

    name: str = StrictField("branch", description="The `name:` line.")
    params: Tuple[str, ...] = StrictField((), description="The `params:` line.")
    coords: Tuple[str, ...] = StrictField(..., description="One `coord:` line per coordinate.")
    options: Dict[str, str] = StrictField(
        {}, description="`option key = value` lines, e.g. trunc or degree caps."
    )
    lines: Dict[str, int] = StrictField(
        {}, description="Source line of each entry, for error locations."
    )

    @validator("coords")
    def at_least_two(cls, v):
        if len(v) < 2:
            raise ValueError(f"A branch file needs at least 2 coord lines, got {len(v)}")
        return v


class ModuleFile(CurvefactModel):
    """The content of a `.module` file: a plane branch and module generators."""

    name: str = StrictField("module", description="The `name:` line.")
    params: Tuple[str, ...] = StrictField((), description="The `params:` line.")
    x: str = StrictField(..., description="The `x:` line.")
    y: str = StrictField(..., description="The `y:` line.")
    gens: Tuple[str, ...] = StrictField(..., description="One `gen:` line per generator.")
    options: Dict[str, str] = StrictField({}, description="`option key = value` lines.")
    lines: Dict[str, int] = StrictField({}, description="Source line of each entry.")


class MFFile(CurvefactModel):
    """The content of a `.mf` file: F, d and optionally h and the presented module."""

    name: str = StrictField("mf", description="The `name:` line.")
    params: Tuple[str, ...] = StrictField((), description="The `params:` line.")
    size: int = StrictField(..., description="The `size:` line, the matrix size b.")
    F: str = StrictField(..., description="The `F:` line.")
    d: Dict[Tuple[int, int], str] = StrictField(..., description="Entries `d[i,j]:`, 1-based.")
    h: Dict[Tuple[int, int], str] = StrictField({}, description="Entries `h[i,j]:`, 1-based, optional.")
    x: Optional[str] = StrictField(None, description="Optional `x:` line of the plane branch.")
    y: Optional[str] = StrictField(None, description="Optional `y:` line of the plane branch.")
    gens: Tuple[str, ...] = StrictField((), description="Optional `gen:` lines.")
    lines: Dict[str, int] = StrictField({}, description="Source line of each entry.")
