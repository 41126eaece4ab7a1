"""
Command line front end.

    python -m src.cli spectrum --model cycle --n 6 --weights combinatorial
    python -m src.cli bracket --model polyacetylene --flux 1.570796 --virtualize-arcs e1 --virtualize-vertices v1 --kappa
    python -m src.cli sweep --model agnr --width 3 --s-grid 256 --theta-grid 256 --output fig.csv --svg fig.svg
    python -m src.cli render fig.csv --lambda-max 2 --output fig.svg

Artifacts go to stdout (or --output); logs and the one-line error JSON go to
stderr. Exit status: 0 success, 1 invalid input or failed check, 2 cost guard.
"""
from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import ValidationError

from src.covering import (
    PeriodicGraph,
    band_structure,
    bracket_sweep,
    connecting_arc_classes,
    covering_bracketing,
    fiber_spectrum,
    flux_sweep,
    unfold_truncation,
)
from src.formats import (
    DeltaDocument,
    ErrorDocument,
    band_structure_csv,
    flux_diagram_csv,
    load_graph,
    read_flux_diagram,
    result_json,
)
from src.graph import MwGraph, apply_weight_scheme, minimal_neighborhood
from src.models import ModelSpec, build, constant_flux_potential, flux_family
from src.spectra import assemble_dml, bracketing, certify, eigenvalues, kappa_refine, trace_identity_check
from src.utils.config import settings
from src.utils.errors import CommandError, CostGuardError, SpectralToolkitError
from src.utils.metrics import solve_metrics
from src.utils.validators import CommandValidator

from .render import render_svg

logger = logging.getLogger(__name__)

VERBS = ("spectrum", "bands", "sweep", "bracket", "delta", "render")


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors through CommandError instead of exiting."""

    def error(self, message: str):
        raise CommandError(message)


def _id_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}") from e


def _source_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_argument_group("source")
    source.add_argument("--model", choices=["polyacetylene", "agnr", "zgnr", "cycle", "z_lattice"])
    source.add_argument("--graph", help="JSON graph file")
    source.add_argument("--width", type=int, help="ribbon width N (agnr, zgnr)")
    source.add_argument("--n", type=int, help="cycle length (cycle)")
    source.add_argument("--weights", choices=["standard", "combinatorial"], help="weight scheme")
    flux = source.add_mutually_exclusive_group()
    flux.add_argument("--flux", type=float, help="constant flux s in radians")
    flux.add_argument("--flux-turns", type=float, help="constant flux as a fraction of 2π")
    return parent


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--log-level", help="logging level (default from MAGLAP_LOG_LEVEL)")
    parent.add_argument("--output", help="write the artifact to this file instead of stdout")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="python -m src.cli", description=settings.app_name)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    common = _common_options()
    source = _source_options()

    p = sub.add_parser("spectrum", parents=[common, source], help="spectrum of a finite graph, fiber or truncation")
    p.add_argument("--theta", type=_float_list, help="character θ for a fiber, comma separated")
    p.add_argument("--radius", type=int, help="spectrum of the radius-R truncation of the cover")

    p = sub.add_parser("bands", parents=[common, source], help="band structure CSV")
    p.add_argument("--grid", type=int, default=256, help="θ samples per dimension")
    p.add_argument("--refine", action="store_true", help="double the grid once and report endpoint drift")

    p = sub.add_parser("sweep", parents=[common, source], help="flux diagram CSV (and SVG)")
    p.add_argument("--s-grid", type=int, default=64, help="flux samples in [0, 2π)")
    p.add_argument("--theta-grid", type=int, default=64, help="θ samples per dimension (bands mode)")
    p.add_argument("--mode", choices=["bands", "bracket"], default="bands")
    p.add_argument("--kappa", action="store_true", help="κ-refine each bracketing row (bracket mode)")
    p.add_argument("--virtualize-arcs", type=_id_list)
    p.add_argument("--virtualize-vertices", type=_id_list)
    p.add_argument("--svg", help="also render the diagram to this SVG file")

    p = sub.add_parser("bracket", parents=[common, source], help="bracketing JSON")
    p.add_argument("--virtualize-arcs", type=_id_list)
    p.add_argument("--virtualize-vertices", type=_id_list)
    p.add_argument("--kappa", action="store_true", help="intersect with the mirror image (bipartite, standard weights)")

    p = sub.add_parser("delta", parents=[common, source], help="single-vertex gap certificate")
    p.add_argument("--vertex", required=True)
    p.add_argument("--arcs", type=_id_list, help="virtualized arcs at the vertex (default: connecting arcs)")
    p.add_argument("--variant", choices=["general", "standard", "combinatorial"], help="default follows --weights")

    p = sub.add_parser("render", parents=[common], help="render a flux diagram CSV to SVG")
    p.add_argument("diagram", help="FluxDiagram CSV file")
    p.add_argument("--lambda-max", type=float, required=True, help="top of the λ axis, normally 2ρ∞ of the swept model")
    return parser


# ----------------------------------------------------------------------
# validation and sources
# ----------------------------------------------------------------------
def _require(check: tuple[bool, Optional[str]]) -> None:
    ok, message = check
    if not ok:
        raise CommandError(message)


def _flux(args) -> Optional[float]:
    if getattr(args, "flux_turns", None) is not None:
        _require(CommandValidator.validate_flux(args.flux_turns))
        return 2.0 * math.pi * args.flux_turns
    if getattr(args, "flux", None) is not None:
        _require(CommandValidator.validate_flux(args.flux))
        return args.flux
    return None


def _model_spec(args, flux: Optional[float]) -> ModelSpec:
    try:
        return ModelSpec(
            name=args.model,
            width=args.width,
            n=args.n,
            weights=args.weights or "standard",
            flux=flux or 0.0,
        )
    except ValidationError as e:
        raise CommandError(f"invalid model: {e.errors()[0]['msg']}") from e


def load_source(args):
    """The graph named on the command line with weights and flux applied."""
    if (args.model is None) == (args.graph is None):
        raise CommandError("give exactly one of --model or --graph")
    flux = _flux(args)
    if args.model is not None:
        return build(_model_spec(args, flux))

    graph = load_graph(args.graph)
    if args.weights:
        if isinstance(graph, PeriodicGraph):
            graph = graph.with_quotient(apply_weight_scheme(graph.quotient, args.weights))
        else:
            graph = apply_weight_scheme(graph, args.weights)
    if flux is not None:
        if not isinstance(graph, PeriodicGraph):
            raise CommandError("--flux applies to models and periodic graphs")
        graph = constant_flux_potential(graph, flux)
    return graph


def _family(args):
    if args.model is not None:
        spec = _model_spec(args, None)
        if not spec.periodic:
            raise CommandError(f"{spec.name} is not periodic; sweeps need a periodic model")
        return flux_family(spec)
    base = load_source(args)
    if not isinstance(base, PeriodicGraph):
        raise CommandError("sweeps need a periodic graph")
    return lambda s: constant_flux_potential(base, s)


def _periodic(graph, verb: str) -> PeriodicGraph:
    if not isinstance(graph, PeriodicGraph):
        raise CommandError(f"{verb} needs a periodic graph")
    return graph


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    _require(CommandValidator.validate_output_path(path))
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise CommandError(f"cannot write {path}: {e.strerror}") from e
    logger.info("wrote %s", path)


# ----------------------------------------------------------------------
# verbs
# ----------------------------------------------------------------------
def run_spectrum(args) -> None:
    graph = load_source(args)
    if isinstance(graph, MwGraph):
        if args.theta is not None or args.radius is not None:
            raise CommandError("--theta and --radius apply to periodic graphs")
        spectrum = eigenvalues(assemble_dml(graph))
    elif args.radius is not None:
        _require(CommandValidator.validate_radius(args.radius))
        spectrum = eigenvalues(assemble_dml(unfold_truncation(graph, args.radius)))
    else:
        theta = args.theta if args.theta is not None else [0.0] * graph.rank
        _require(CommandValidator.validate_theta(theta))
        spectrum = fiber_spectrum(graph, theta)
    _emit(result_json(spectrum.to_dict()), args.output)


def run_bands(args) -> None:
    _require(CommandValidator.validate_grid(args.grid, "--grid"))
    p = _periodic(load_source(args), "bands")
    _emit(band_structure_csv(band_structure(p, args.grid, refine=args.refine)), args.output)


def run_sweep(args) -> None:
    _require(CommandValidator.validate_grid(args.s_grid, "--s-grid"))
    family = _family(args)
    if args.mode == "bands":
        _require(CommandValidator.validate_grid(args.theta_grid, "--theta-grid"))
        diagram = flux_sweep(family, args.s_grid, args.theta_grid)
    else:
        for ids in (args.virtualize_arcs, args.virtualize_vertices):
            if ids is not None:
                _require(CommandValidator.validate_ids(ids))
        diagram = bracket_sweep(family, args.s_grid, args.kappa, args.virtualize_vertices, args.virtualize_arcs)
    _emit(flux_diagram_csv(diagram), args.output)
    if args.svg:
        _emit(render_svg(diagram), args.svg)


def run_bracket(args) -> None:
    graph = load_source(args)
    for ids in (args.virtualize_arcs, args.virtualize_vertices):
        if ids is not None:
            _require(CommandValidator.validate_ids(ids))
    if isinstance(graph, PeriodicGraph):
        result = covering_bracketing(graph, args.virtualize_vertices, args.virtualize_arcs)
    else:
        if not args.virtualize_arcs:
            raise CommandError("finite graphs need --virtualize-arcs")
        vertices = args.virtualize_vertices or minimal_neighborhood(graph, args.virtualize_arcs)
        result = bracketing(graph, args.virtualize_arcs, vertices)
    if args.kappa:
        result = kappa_refine(result)
    _emit(result_json(result.to_dict()), args.output)


def run_delta(args) -> None:
    graph = load_source(args)
    g = graph.quotient if isinstance(graph, PeriodicGraph) else graph
    g.vertex_position(args.vertex)
    if args.arcs is not None:
        _require(CommandValidator.validate_ids(args.arcs, "arc"))
        arcs = args.arcs
    elif isinstance(graph, PeriodicGraph):
        connecting = connecting_arc_classes(graph)
        arcs = [a.id for a in g.incident_arcs(args.vertex) if a.id in connecting and not a.is_loop]
    else:
        arcs = [a.id for a in g.incident_arcs(args.vertex) if not a.is_loop]
    variant = args.variant or args.weights or "general"
    certificate = certify(g, args.vertex, arcs, variant)

    discrepancy = None
    if not any(a.is_loop for a in g.incident_arcs(args.vertex)):
        discrepancy = trace_identity_check(g, args.vertex, arcs)
    document = DeltaDocument(**certificate.to_dict(), trace_discrepancy=discrepancy)
    _emit(result_json(document.model_dump(exclude_none=True)), args.output)


def run_render(args) -> None:
    if not (math.isfinite(args.lambda_max) and args.lambda_max > 0):
        raise CommandError("--lambda-max must be positive")
    diagram = read_flux_diagram(args.diagram, args.lambda_max)
    _emit(render_svg(diagram, lambda_max=args.lambda_max), args.output)


HANDLERS: dict[str, Callable] = {
    "spectrum": run_spectrum,
    "bands": run_bands,
    "sweep": run_sweep,
    "bracket": run_bracket,
    "delta": run_delta,
    "render": run_render,
}


def _configure_logging(level: Optional[str]) -> None:
    name = (level or settings.log_level).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise CommandError(f"unknown log level {level!r}")
    logging.basicConfig(
        level=numeric,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _report(error: SpectralToolkitError) -> None:
    document = ErrorDocument(**error.to_payload())
    sys.stderr.write(document.model_dump_json() + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.log_level)
        logger.debug("running %s", args.verb)
        HANDLERS[args.verb](args)
    except CostGuardError as e:
        _report(e)
        return 2
    except SpectralToolkitError as e:
        logger.debug("command failed", exc_info=True)
        _report(e)
        return 1
    finally:
        summary = solve_metrics.session_summary()
        if summary["solver_calls"]:
            logger.debug("solver summary: %s", summary)
    return 0


__all__ = ["build_parser", "load_source", "main", "HANDLERS", "VERBS"]
