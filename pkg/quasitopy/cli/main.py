"""
Command line front end.

Example:
  quasitopy blowdown x.json --edge 1
  quasitopy verify-charts --k 2 --m 3 --points 1000 --seed 7

Exit codes: 0 success, 2 usage error, 3 parse or validation error, 4 domain error.
"""
import argparse
import logging
from pathlib import Path
import sys
from typing import (
    Any,
    Dict,
    List,
    NamedTuple,
    Optional,
)

from quasitopy.birational.blowdown import (
    BlowdownSite,
    Side,
    blowdown,
    blowdown_site,
    blowdown_sites,
    blowup,
    crepant_blowup,
    euler_change,
    image_vertex,
    insertion_position,
    is_crepant,
    resolve_all,
    resolve_vertex,
)
from quasitopy.birational.mckay import mckay_check
from quasitopy.charts.charts import LocalModelParams
from quasitopy.charts.identities import (
    discrepancy_exponent,
    verify_chart_identities,
)
from quasitopy.charts.sampling import DEFAULT_TOLERANCE
from quasitopy.cli.render import (
    edge_frame,
    error_document,
    write_document,
    write_table,
)
from quasitopy.core.model import (
    QuasitoricModel,
    is_manifold,
    model_document,
    parse_model,
    rotate,
    validate,
)
from quasitopy.errors import (
    DomainError,
    NotAdmissible,
    ParseError,
    ValidationError,
)
from quasitopy.invariants.cohomology import (
    cr_betti,
    render_degree,
    singular_betti,
    todd_genus,
)
from quasitopy.invariants.localgroup import (
    is_SL_model,
    singular_vertices,
    vertex_frame,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_DOMAIN = 4


class UsageError(Exception):
    pass


class Outcome(NamedTuple):
    document: Dict[str, Any]
    exit_code: int = EXIT_OK
    table: Any = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer, got %r" % text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits, got %d" % value)
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %d" % value)
    return value


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror or exc)) from exc


def _load(path: str) -> QuasitoricModel:
    return parse_model(_read(path))


def cmd_validate(args: argparse.Namespace) -> Outcome:
    model = parse_model(_read(args.model), validate=False)
    report = validate(model)
    code = EXIT_OK if report.valid else EXIT_INVALID
    return Outcome(report.to_dict(), code, edge_frame(model))


def cmd_info(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    frame = vertex_frame(model)
    report = validate(model)
    sites = blowdown_sites(model) if report.positively_omnioriented else []
    document = {
        "edges": model.to_list(),
        "positively_omnioriented": report.positively_omnioriented,
        "manifold": is_manifold(model),
        "sl": is_SL_model(model),
        "singular_vertices": singular_vertices(model),
        "vertices": [
            {
                "index": int(index),
                "first": model.vertex(index).first.to_list(),
                "second": model.vertex(index).second.to_list(),
                "det": int(row["det"]),
                "order": int(row["order"]),
                "type": row["type"],
                "sl": bool(row["sl"]),
            }
            for index, row in frame.iterrows()
        ],
        "blowdown_sites": [dict(site.to_dict(), crepant=is_crepant(site)) for site in sites],
    }
    return Outcome(document, table=frame)


def cmd_cohomology(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    if args.singular:
        kind, table = "singular", singular_betti(model)
    else:
        kind, table = "chen-ruan", cr_betti(model)
    document = {"kind": kind, "betti": table.to_json_dict(), "total": table.total()}
    return Outcome(document, table=table)


def cmd_todd_genus(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    direction = tuple(args.direction) if args.direction else None
    return Outcome({"todd_genus": todd_genus(model, direction)})


def cmd_blowdown(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    site = blowdown_site(model, args.edge)
    result = blowdown(model, site)
    document = dict(model_document(result))
    document.update(
        {
            "site": site.to_dict(),
            "crepant": is_crepant(site),
            "image_vertex": image_vertex(model, site),
            "euler_change": euler_change(site),
        }
    )
    return Outcome(document, table=edge_frame(result))


def cmd_blowup(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    if args.crepant:
        result = crepant_blowup(model, args.vertex)
        if result is None:
            msg = "vertex %d admits no crepant blowup" % args.vertex
            raise NotAdmissible(msg, reason="noCrepantBlowup")
    else:
        result = blowup(model, args.vertex, Side(args.side))
    blown_up, inserted = result
    document = dict(model_document(blown_up))
    document.update(
        {
            "inserted": inserted.to_list(),
            "position": insertion_position(args.vertex, len(model)),
        }
    )
    return Outcome(document, table=edge_frame(blown_up))


def cmd_resolve(args: argparse.Namespace) -> Outcome:
    model = _load(args.model)
    if args.all:
        resolved, inserted = resolve_all(model)
    else:
        resolved, inserted = resolve_vertex(model, args.vertex)
    document = dict(model_document(resolved))
    document["inserted"] = [vector.to_list() for vector in inserted]
    return Outcome(document, table=edge_frame(resolved))


def _relating_site(
    model_x: QuasitoricModel, model_y: QuasitoricModel
) -> Optional[BlowdownSite]:
    """First admissible site of X whose blowdown is Y up to cyclic rotation."""
    if len(model_x) != len(model_y) + 1 or not validate(model_x).positively_omnioriented:
        return None
    rotations = {rotate(model_y, shift) for shift in range(len(model_y))}
    for site in blowdown_sites(model_x):
        if blowdown(model_x, site) in rotations:
            return site
    return None


def cmd_mckay(args: argparse.Namespace) -> Outcome:
    model_x = _load(args.model_x)
    model_y = _load(args.model_y)
    report = mckay_check(model_x, model_y)

    document: Dict[str, Any] = {}
    site = _relating_site(model_x, model_y)
    if site is not None:
        document.update({"edge": site.edge_index, "crepant": is_crepant(site)})
    else:
        logger.debug("no admissible site of X blows down to Y")
    document.update(report.to_dict())
    table = report.table_x.to_frame("x").join(report.table_y.to_frame("y"), how="outer")
    return Outcome(document, table=table.fillna(0).astype("int64"))


def cmd_verify_charts(args: argparse.Namespace) -> Outcome:
    params = LocalModelParams(args.k, args.m, args.s, args.t)
    report = verify_chart_identities(params, args.points, args.seed, args.tolerance)
    exponent = discrepancy_exponent(args.k, args.m)
    document: Dict[str, Any] = {
        "k": args.k,
        "m": args.m,
        "s": args.s,
        "t": args.t,
        "seed": args.seed,
        "discrepancy_exponent": render_degree(exponent),
        "crepant": exponent == 0,
    }
    document.update(report.to_dict())
    return Outcome(document, table=report.max().rename("max_residual"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasitopy", description="Quasitoric orbifolds in dimension four.")
    parser.add_argument("--pretty", action="store_true", help="print tables on standard error")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    def model_command(name: str, func: Any, help: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help)
        sub.add_argument("model", help="model JSON document")
        sub.set_defaults(func=func)
        return sub

    model_command("validate", cmd_validate, "check a model")
    model_command("info", cmd_info, "vertices, singularities and blowdown sites")

    sub = model_command("cohomology", cmd_cohomology, "Betti numbers")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--singular", action="store_true")
    group.add_argument("--chen-ruan", action="store_true")

    sub = model_command("todd-genus", cmd_todd_genus, "Todd genus of a manifold")
    sub.add_argument("--direction", type=int, nargs=2, metavar=("X", "Y"))

    sub = model_command("blowdown", cmd_blowdown, "delete an edge")
    sub.add_argument("--edge", type=int, required=True)

    sub = model_command("blowup", cmd_blowup, "insert an edge at a vertex")
    sub.add_argument("--vertex", type=int, required=True)
    sub.add_argument("--side", choices=[side.value for side in Side], default=Side.FIRST.value)
    sub.add_argument("--crepant", action="store_true")

    sub = model_command("resolve", cmd_resolve, "resolve singular vertices")
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--vertex", type=int)
    target.add_argument("--all", action="store_true")

    sub = commands.add_parser("mckay", help="compare Chen-Ruan Betti numbers of two models")
    sub.add_argument("model_x", help="model X")
    sub.add_argument("model_y", help="model Y")
    sub.set_defaults(func=cmd_mckay)

    sub = commands.add_parser("verify-charts", help="check the chart identities numerically")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--s", type=float, default=1.0)
    sub.add_argument("--t", type=float, default=1.0)
    sub.add_argument("--points", type=_positive, default=1000)
    sub.add_argument("--seed", type=_seed, default=0)
    sub.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    sub.set_defaults(func=cmd_verify_charts)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    stdout, stderr = sys.stdout, sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        write_document(error_document(exc), stdout)
        return EXIT_USAGE

    logging.basicConfig(
        stream=stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("running %s", args.command)

    try:
        outcome = args.func(args)
    except UsageError as exc:
        write_document(error_document(exc), stdout)
        return EXIT_USAGE
    except (ParseError, ValidationError) as exc:
        write_document(error_document(exc), stdout)
        return EXIT_INVALID
    except DomainError as exc:
        write_document(error_document(exc), stdout)
        return EXIT_DOMAIN

    write_document(outcome.document, stdout)
    if args.pretty and outcome.table is not None:
        write_table(outcome.table, stderr)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
