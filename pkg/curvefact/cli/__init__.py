"""The `curvefact` command line tool."""
# pylint: disable=import-outside-toplevel
from .commands import COMMANDS, parse_assignment, parse_plane, run
from .files import read_input

__all__ = ("COMMANDS", "main", "parse_assignment", "parse_plane", "read_input", "run")


def _apply_config(path: str) -> None:
    from curvefact.config import CONFIG, CurvefactConfig

    loaded = CurvefactConfig.from_file(path)
    for field in CurvefactConfig.__fields__:
        setattr(CONFIG, field, getattr(loaded, field))


def main(argv=None) -> int:
    import argparse
    import logging
    import sys
    import traceback
    import warnings

    from pydantic import ValidationError

    from curvefact.config import CONFIG
    from curvefact.exceptions import CurvefactError
    from curvefact.logger import set_console_level
    from curvefact.warnings import CurvefactWarning

    parser = argparse.ArgumentParser(
        prog="curvefact",
        description="""Exact invariants, generic plane projections and matrix factorizations of curve branches.

    - Invariants and secant cone of a space branch:

        $ curvefact invariants m467.branch
        $ curvefact cone5 m467.branch --plane 1,0,0,0,1,1

    - Implicit equation of a projection, and a matrix factorization of it:

        $ curvefact implicitize exc5def.branch --plane 1,0,0,0,1,1
        $ curvefact matfact m467_t7.module --degree 4

    - Checks on matrix factorizations and modules:

        $ curvefact verify-mf exc5mf.mf
        $ curvefact is-algebra cusp34.module
        $ curvefact equiv-mf noalg.mf noalg_swapped.mf --degree 2
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="The computation to run.")
    parser.add_argument(
        "inputs",
        nargs="+",
        help="Input files: `.branch`, `.module` or `.mf` (two `.mf` files for equiv-mf).",
    )
    parser.add_argument(
        "--plane",
        type=str,
        help="Projection plane as comma separated coefficients z1,...,z2n; entries may use parameters.",
    )
    parser.add_argument(
        "--auto-plane",
        action="store_true",
        help="Pick the first transversal plane of the enumeration (the default when --plane is absent).",
    )
    parser.add_argument(
        "--trunc",
        type=int,
        help="Truncation order: of the branch series, or the working order N of module computations.",
    )
    parser.add_argument(
        "--degree", type=int, help="Degree cap D for syzygies or equivalence witnesses."
    )
    parser.add_argument(
        "--param-degree", type=int, help="Degree cap for parameter monomials in family searches."
    )
    parser.add_argument(
        "--param",
        action="append",
        metavar="NAME=VALUE",
        help="Specialize a parameter to a rational value before computing. May be repeated.",
    )
    parser.add_argument(
        "-j", "--json", action="store_true", help="Print the report as JSON instead of YAML."
    )
    parser.add_argument(
        "--config", type=str, help="A JSON or YAML configuration file overriding ~/.curvefact.json."
    )
    parser.add_argument(
        "-v",
        "--verbosity",
        action="count",
        default=0,
        help="Increase the verbosity of the log on stderr. (-v: info, -vv: debug)",
    )

    args = parser.parse_args(argv)

    if args.config is not None:
        try:
            _apply_config(args.config)
        except ValidationError as exc:
            print(f"Invalid configuration in {args.config}: {exc}", file=sys.stderr)
            return 2
        set_console_level(CONFIG.log_level.value.upper())

    if args.verbosity:
        set_console_level(logging.DEBUG if args.verbosity > 1 else logging.INFO)

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            report = run(args)
    except CurvefactError as exc:
        print(f"{exc.title}: {exc}", file=sys.stderr)
        return exc.exit_code
    # catch and print internal exceptions, exiting with non-zero error code
    except Exception:
        traceback.print_exc()
        return 1

    messages = [
        f"{w.message.title}: {w.message.detail}"
        if isinstance(w.message, CurvefactWarning)
        else str(w.message)
        for w in caught
    ]
    report = report.copy(update={"warnings": messages})
    if args.json:
        print(report.to_json())
    else:
        print(report.to_yaml(), end="")
    return 1 if report.failed else 0


def entrypoint() -> None:  # pragma: no cover
    import sys

    sys.exit(main())
