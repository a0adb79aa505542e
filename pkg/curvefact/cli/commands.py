"""One function per command: load the inputs, call the library, describe the results."""
import argparse
import re
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from curvefact.branch import delta_consistency, puiseux_characteristic, semigroup, standardize
from curvefact.cone5 import is_transversal, pick_generic_plane, secant_cone
from curvefact.config import CONFIG
from curvefact.exactalg import poly_adjugate
from curvefact.exceptions import InputFileError, NonReducedImage, UsageError
from curvefact.exprtransformers import parse_polynomial
from curvefact.matfact import (
    build_mf,
    is_algebra,
    is_generic_projection_witness,
    mf_equivalent,
    presentation_matrix,
    verify_mf,
)
from curvefact.models import (
    Branch,
    MatrixFactorization,
    ModuleData,
    ProjectionPlane,
    Report,
    StandardBranch,
    plain,
)
from curvefact.projection import (
    delta_bounds_check,
    implicitize,
    mu_bar,
    plane_invariants,
    project,
    specialize,
)
from curvefact.cli.files import read_input

__all__ = ("COMMANDS", "run", "parse_plane", "parse_assignment")

NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_plane(text: str) -> ProjectionPlane:
    """`z1,...,z2n`; entries are expressions in any parameter names."""
    entries = [e.strip() for e in text.split(",")]
    if any(not e for e in entries):
        raise InputFileError(f"--plane {text!r} has an empty entry")
    names = tuple(sorted({n for e in entries for n in NAME.findall(e)}))
    reserved = set(names) & {"t", "x", "y"}
    if reserved:
        raise InputFileError(f"--plane entries cannot use {', '.join(sorted(reserved))}")
    try:
        return ProjectionPlane.from_values([parse_polynomial(e, names) for e in entries])
    except ValueError as exc:
        raise InputFileError(f"--plane {text!r}: {exc}") from exc


def parse_assignment(values: Optional[List[str]]) -> Dict[str, Fraction]:
    """`["s6=0", "s7=1/2"]` to `{"s6": 0, "s7": 1/2}`."""
    out = {}
    for item in values or ():
        name, sep, value = item.partition("=")
        try:
            if not sep or not NAME.fullmatch(name.strip()):
                raise ValueError(item)
            out[name.strip()] = Fraction(value.strip())
        except ValueError:
            raise InputFileError(f"--param expects NAME=RATIONAL, got {item!r}") from None
    return out


def _load(path: str, args: argparse.Namespace, *kinds: type):
    obj = read_input(path)
    if not isinstance(obj, kinds):
        expected = " or ".join(k.__name__ for k in kinds)
        raise InputFileError(f"{path}: this command expects a {expected} input")
    if args.param:
        obj = specialize(obj, parse_assignment(args.param))
    return obj


def _standard(path: str, args: argparse.Namespace) -> Tuple[Branch, StandardBranch]:
    b = _load(path, args, Branch)
    return b, standardize(b, trunc=args.trunc)


def _plane(sb: StandardBranch, args: argparse.Namespace) -> ProjectionPlane:
    if args.plane and args.auto_plane:
        raise UsageError("--plane and --auto-plane are mutually exclusive")
    if args.plane:
        return parse_plane(args.plane)
    return pick_generic_plane(secant_cone(sb))


def _branch_inputs(b: Branch) -> Dict[str, Any]:
    return {"name": b.name, "params": list(b.params), "coords": [str(c) for c in b.coords]}


def _module_inputs(m: ModuleData) -> Dict[str, Any]:
    return {
        "name": m.plane.name,
        "params": list(m.plane.params),
        "x": str(m.plane.x),
        "y": str(m.plane.y),
        "gens": [str(g) for g in m.gens],
    }


def _mf_results(mf: MatrixFactorization) -> Dict[str, Any]:
    out = {"F": str(mf.F.F), "b": mf.b, "d": mf.d.tolist(), "h": mf.h.tolist()}
    if mf.gens is not None:
        out["gens"] = [str(g) for g in mf.gens.gens]
        out["generator_orders"] = list(mf.gens.orders)
    return out


def invariants(args: argparse.Namespace) -> Report:
    b, sb = _standard(args.inputs[0], args)
    sg = semigroup(sb)
    results: Dict[str, Any] = {
        "multiplicity": sb.e,
        "standard_form": [str(c) for c in sb.coords],
        "transforms": list(sb.transforms),
        "semigroup": plain(sg.dict(exclude={"elements", "bound"})),
    }
    checks: Dict[str, bool] = {}
    if sb.n == 2:
        results["puiseux"] = plain(puiseux_characteristic(sb))
        consistency = delta_consistency(sb)
        results["delta_consistency"] = plain(consistency)
        checks["delta_consistency"] = consistency.consistent
    else:
        bounds = delta_bounds_check(sb)
        results["mu_bar"] = mu_bar(sb)
        results["delta_bounds"] = plain(bounds)
        checks["delta_lower_bound"] = bounds.lower_ok
        checks["delta_upper_bound"] = bounds.upper_ok
    return Report(
        command="invariants",
        inputs=_branch_inputs(b),
        caps={"trunc": sb.trunc, "semigroup_bound": sg.bound},
        results=results,
        checks=checks,
    )


def cone5(args: argparse.Namespace) -> Report:
    b, sb = _standard(args.inputs[0], args)
    cone = secant_cone(sb)
    results: Dict[str, Any] = {
        "planes": [plain(p) for p in cone.planes],
        "truncated_residues": list(cone.truncated_residues),
        "generic_plane": str(pick_generic_plane(cone)),
    }
    if args.plane:
        plane = parse_plane(args.plane)
        results["plane"] = str(plane)
        results["transversal"] = is_transversal(cone, plane)
    return Report(
        command="cone5",
        inputs=_branch_inputs(b),
        caps={"trunc": sb.trunc, "plane_search_norm": CONFIG.plane_search_norm},
        results=results,
    )


def project_command(args: argparse.Namespace) -> Report:
    b, sb = _standard(args.inputs[0], args)
    plane = _plane(sb, args)
    pb = project(sb, plane)
    return Report(
        command="project",
        inputs=_branch_inputs(b),
        caps={"trunc": sb.trunc},
        results={
            "plane": str(plane),
            "x": str(pb.x),
            "y": str(pb.y),
            "puiseux": plain(plane_invariants(pb)),
        },
    )


def implicitize_command(args: argparse.Namespace) -> Report:
    obj = _load(args.inputs[0], args, Branch, ModuleData)
    results: Dict[str, Any] = {}
    if isinstance(obj, ModuleData):
        pb, inputs = obj.plane, _module_inputs(obj)
    else:
        sb = standardize(obj, trunc=args.trunc)
        plane = _plane(sb, args)
        pb, inputs = project(sb, plane), _branch_inputs(obj)
        results.update({"plane": str(plane), "x": str(pb.x), "y": str(pb.y)})
    F = implicitize(pb)
    results.update({"F": str(F.F), "normalization": plain(F.normalization)})
    return Report(
        command="implicitize",
        inputs=inputs,
        caps={"param_order": CONFIG.param_order},
        results=results,
        checks={"vanishes_on_branch": F.verified},
    )


def matfact(args: argparse.Namespace) -> Report:
    obj = _load(args.inputs[0], args, Branch, ModuleData)
    caps = {"degree": args.degree, "trunc": args.trunc, "param_degree": args.param_degree}
    if isinstance(obj, ModuleData):
        F = implicitize(obj.plane)
        d = presentation_matrix(
            obj, F, D=args.degree, N=args.trunc, param_degree=args.param_degree
        )
        mf = MatrixFactorization(F=F, d=d, h=poly_adjugate(d), gens=obj)
        inputs, extra = _module_inputs(obj), {}
    else:
        sb = standardize(obj)
        plane = _plane(sb, args)
        mf = build_mf(sb, plane, D=args.degree, N=args.trunc, param_degree=args.param_degree)
        inputs, extra = _branch_inputs(obj), {"plane": str(plane)}
    report = verify_mf(mf)
    return Report(
        command="matfact",
        inputs=inputs,
        caps=caps,
        results={**extra, **_mf_results(mf)},
        checks={c.name: c.passed for c in report.checks},
    )


def verify_command(args: argparse.Namespace) -> Report:
    mf = _load(args.inputs[0], args, MatrixFactorization)
    report = verify_mf(mf)
    return Report(
        command="verify-mf",
        inputs={"file": args.inputs[0]},
        results={
            **_mf_results(mf),
            "witnesses": {c.name: c.witness for c in report.checks if not c.passed},
        },
        checks={c.name: c.passed for c in report.checks},
    )


def is_algebra_command(args: argparse.Namespace) -> Report:
    m = _load(args.inputs[0], args, ModuleData)
    witness = is_algebra(m, trunc=args.trunc)
    return Report(
        command="is-algebra",
        inputs=_module_inputs(m),
        caps={"trunc": witness.trunc},
        results=plain(witness),
    )


def equiv_command(args: argparse.Namespace) -> Report:
    if len(args.inputs) != 2:
        raise UsageError("equiv-mf needs two .mf files")
    mf1, mf2 = (_load(path, args, MatrixFactorization) for path in args.inputs)
    verdict = mf_equivalent(mf1, mf2, D=args.degree)
    return Report(
        command="equiv-mf",
        inputs={"files": list(args.inputs)},
        caps={"degree": verdict.degree, "screen_depth": CONFIG.screen_depth},
        results=plain(verdict),
    )


def check_generic(args: argparse.Namespace) -> Report:
    b, sb = _standard(args.inputs[0], args)
    plane = _plane(sb, args)
    inputs = _branch_inputs(b)
    try:
        pb = project(sb, plane, check=False)
    except NonReducedImage as exc:
        results = {"generic": False, "reason": NonReducedImage.__name__, "detail": str(exc)}
    else:
        results = {"x": str(pb.x), "y": str(pb.y), **plain(is_generic_projection_witness(sb, pb))}
    return Report(
        command="check-generic",
        inputs=inputs,
        results={"plane": str(plane), **results},
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace], Report]] = {
    "invariants": invariants,
    "cone5": cone5,
    "project": project_command,
    "implicitize": implicitize_command,
    "matfact": matfact,
    "verify-mf": verify_command,
    "is-algebra": is_algebra_command,
    "equiv-mf": equiv_command,
    "check-generic": check_generic,
}


def run(args: argparse.Namespace) -> Report:
    """Dispatch to the command named by `args.command`."""
    if len(args.inputs) > 1 and args.command != "equiv-mf":
        raise UsageError(f"{args.command} takes a single input file")
    return COMMANDS[args.command](args)
