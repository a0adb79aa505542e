"""Line-oriented input files.

Each non-empty line is `key: value` or `option key = value`; `#` starts a comment.

- `.branch`: `name:`, `params:`, one `coord:` per coordinate, options.
- `.module`: `name:`, `params:`, `x:`, `y:`, one `gen:` per generator.
- `.mf`: `name:`, `params:`, `size:`, `F:`, entries `d[i,j]:` and optionally
  `h[i,j]:`, `x:`, `y:` and `gen:` lines.

Expressions follow the grammar of [`parse_polynomial`][curvefact.exprtransformers.polynomial.parse_polynomial];
the line numbers of syntax errors refer to the file.

"""
import re
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import ValidationError

from curvefact.exactalg import MPoly, PolyMatrix, poly_adjugate, poly_det
from curvefact.exceptions import InputFileError
from curvefact.exprtransformers import parse_polynomial
from curvefact.matfact import det_ratio
from curvefact.models import (
    Branch,
    BranchFile,
    ImplicitEquation,
    MatrixFactorization,
    MFFile,
    ModuleData,
    ModuleFile,
    Normalization,
    PlaneBranch,
    T,
)

__all__ = (
    "parse_branch_file",
    "parse_module_file",
    "parse_mf_file",
    "load_branch",
    "load_module",
    "load_mf",
    "read_input",
)

ENTRY = re.compile(r"^(?P<key>[A-Za-z_]+)(\[(?P<i>\d+)\s*,\s*(?P<j>\d+)\])?\s*:\s*(?P<value>.*)$")
OPTION = re.compile(r"^option\s+(?P<key>[A-Za-z_]+)\s*=\s*(?P<value>.+)$")
XY = ("x", "y")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _scan(text: str, single: Tuple[str, ...], repeated: Tuple[str, ...], indexed: Tuple[str, ...] = ()):
    """Split a file into single-valued keys, repeated keys, indexed entries and options,
    recording the line of each."""
    values: Dict[str, object] = {key: [] for key in repeated}
    values.update({key: {} for key in indexed})
    options: Dict[str, str] = {}
    lines: Dict[str, int] = {}
    for number, line in _lines(text):
        option = OPTION.match(line)
        if option:
            options[option["key"]] = option["value"].strip()
            lines[f"option {option['key']}"] = number
            continue
        entry = ENTRY.match(line)
        if not entry:
            raise InputFileError(f"line {number}: expected 'key: value' or 'option key = value', got {line!r}")
        key, value = entry["key"], entry["value"].strip()
        if entry["i"] is not None:
            if key not in indexed:
                raise InputFileError(f"line {number}: {key!r} takes no index")
            ij = (int(entry["i"]), int(entry["j"]))
            if ij in values[key]:
                raise InputFileError(f"line {number}: {key}[{ij[0]},{ij[1]}] is given twice")
            values[key][ij] = value
            lines[f"{key}[{ij[0]},{ij[1]}]"] = number
        elif key in repeated:
            lines[f"{key} {len(values[key]) + 1}"] = number
            values[key].append(value)
        elif key in single:
            if key in values:
                raise InputFileError(f"line {number}: {key!r} is given twice")
            values[key] = value
            lines[key] = number
        else:
            raise InputFileError(f"line {number}: unknown key {key!r}")
    return values, options, lines


def _params(value: str) -> Tuple[str, ...]:
    return tuple(p for p in re.split(r"[\s,]+", value) if p)


def _model(cls, **kwargs):
    try:
        return cls(**kwargs)
    except ValidationError as exc:
        raise InputFileError(f"Invalid {cls.__name__}: {exc}") from exc


def parse_branch_file(text: str) -> BranchFile:
    """Read a `.branch` file without parsing its expressions."""
    values, options, lines = _scan(text, ("name", "params"), ("coord",))
    return _model(
        BranchFile,
        name=values.get("name", "branch"),
        params=_params(values.get("params", "")),
        coords=tuple(values["coord"]),
        options=options,
        lines=lines,
    )


def parse_module_file(text: str) -> ModuleFile:
    """Read a `.module` file without parsing its expressions."""
    values, options, lines = _scan(text, ("name", "params", "x", "y"), ("gen",))
    for key in ("x", "y"):
        if key not in values:
            raise InputFileError(f"A module file needs an '{key}:' line")
    return _model(
        ModuleFile,
        name=values.get("name", "module"),
        params=_params(values.get("params", "")),
        x=values["x"],
        y=values["y"],
        gens=tuple(values["gen"]) or ("1",),
        options=options,
        lines=lines,
    )


def parse_mf_file(text: str) -> MFFile:
    """Read a `.mf` file without parsing its expressions."""
    values, _, lines = _scan(text, ("name", "params", "size", "F", "x", "y"), ("gen",), ("d", "h"))
    for key in ("size", "F"):
        if key not in values:
            raise InputFileError(f"A matrix factorization file needs a '{key}:' line")
    try:
        size = int(values["size"])
    except ValueError:
        raise InputFileError(f"line {lines['size']}: size must be an integer") from None
    for key in ("d", "h"):
        for i, j in values[key]:
            if not (1 <= i <= size and 1 <= j <= size):
                raise InputFileError(
                    f"line {lines[f'{key}[{i},{j}]']}: index ({i},{j}) is outside a {size}x{size} matrix"
                )
    return _model(
        MFFile,
        name=values.get("name", "mf"),
        params=_params(values.get("params", "")),
        size=size,
        F=values["F"],
        d=values["d"],
        h=values["h"],
        x=values.get("x"),
        y=values.get("y"),
        gens=tuple(values["gen"]),
        lines=lines,
    )


def _parse(text: str, variables, lines: Dict[str, int], key: str) -> MPoly:
    return parse_polynomial(text, variables, line_offset=lines.get(key, 1) - 1)


def load_branch(bf: BranchFile) -> Branch:
    """The branch described by a `.branch` file."""
    variables = (T,) + bf.params
    coords = tuple(
        _parse(c, variables, bf.lines, f"coord {k}") for k, c in enumerate(bf.coords, start=1)
    )
    trunc = bf.options.get("trunc")
    if trunc is not None and not trunc.isdigit():
        raise InputFileError(f"line {bf.lines['option trunc']}: option trunc must be a positive integer")
    return _model(
        Branch,
        name=bf.name,
        coords=coords,
        params=bf.params,
        trunc=int(trunc) if trunc is not None else None,
    )


def _plane(name: str, params, x: str, y: str, lines) -> PlaneBranch:
    variables = (T,) + tuple(params)
    return _model(
        PlaneBranch,
        name=name,
        x=_parse(x, variables, lines, "x"),
        y=_parse(y, variables, lines, "y"),
        params=tuple(params),
    )


def _gens(gens, lines) -> Tuple[MPoly, ...]:
    return tuple(_parse(g, (T,), lines, f"gen {k}") for k, g in enumerate(gens, start=1))


def load_module(mf: ModuleFile) -> ModuleData:
    """The module data described by a `.module` file."""
    plane = _plane(mf.name, mf.params, mf.x, mf.y, mf.lines)
    return _model(ModuleData, plane=plane, gens=_gens(mf.gens, mf.lines))


def _matrix(entries: Dict[Tuple[int, int], str], size: int, variables, lines, key: str) -> PolyMatrix:
    rows: List[List[MPoly]] = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            text = entries.get((i, j))
            row.append(
                _parse(text, variables, lines, f"{key}[{i},{j}]")
                if text is not None
                else MPoly.zero(variables)
            )
        rows.append(row)
    return PolyMatrix(rows, variables)


def load_mf(mff: MFFile) -> MatrixFactorization:
    """The matrix factorization described by a `.mf` file.

    Without `h[i,j]:` lines, `h` is the adjugate of `d` divided by the constant
    `det(d) / F` when there is one.

    """
    variables = XY + mff.params
    F = _model(
        ImplicitEquation,
        F=_parse(mff.F, variables, mff.lines, "F"),
        params=mff.params,
        normalization=Normalization(monomial="as given", divisor=MPoly.const(1), exact=True),
    )
    d = _matrix(mff.d, mff.size, variables, mff.lines, "d")
    if mff.h:
        h = _matrix(mff.h, mff.size, variables, mff.lines, "h")
    else:
        h = poly_adjugate(d)
        c = det_ratio(poly_det(d), F)
        if c is not None:
            h = h * (1 / c)
    gens = None
    if mff.x is not None and mff.y is not None:
        plane = _plane(mff.name, mff.params, mff.x, mff.y, mff.lines)
        gens = _model(ModuleData, plane=plane, gens=_gens(mff.gens or ("1",), mff.lines))
    return _model(MatrixFactorization, F=F, d=d, h=h, gens=gens)


def read_input(path: Union[str, Path]):
    """Load a `.branch`, `.module` or `.mf` file into its library object.

    Raises:
        InputFileError: If the file cannot be read or has an unknown suffix.

    """
    path = Path(path)
    loaders = {
        ".branch": lambda text: load_branch(parse_branch_file(text)),
        ".module": lambda text: load_module(parse_module_file(text)),
        ".mf": lambda text: load_mf(parse_mf_file(text)),
    }
    if path.suffix not in loaders:
        raise InputFileError(
            f"{path.name}: unknown input type {path.suffix!r}; expected one of {', '.join(loaders)}"
        )
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"Cannot read {path}: {exc}") from exc
    return loaders[path.suffix](text)
