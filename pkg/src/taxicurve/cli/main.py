import sys
import logging
import argparse
import warnings
from pathlib import Path
from fractions import Fraction
from dataclasses import dataclass

import pandas as pd
from pydantic import ValidationError

from .. import __version__
from ..core.exceptions import TaxicurveException
from ..core.metric import Point, Line, Metric, TAXICAB
from ..conic.model import ConicSpec, Circle, TwoFociEllipse, TwoFociHyperbola, Parabola, SumEllipse, separable_foci
from ..conic.classifier import classify
from ..polygonize.contour import BoundingBox
from ..polygonize.exceptions import EmptyRegionError
from ..measures.paper import CANONICAL_TRIFOCAL_FOCI
from ..measures.exceptions import NoMeasureError
from ..measures.oracle import measures_oracle, fermat_point_taxicab, reconcile
from ..scan.region import SumEllipseRegion, region_x_extent
from ..scan.sweep import ScanConfig, scan_area_perimeter
from ..scan.exceptions import ScanEmptyRegionError
from .svg import curve_chains, default_bbox, render_svg
from .exceptions import CommandInputError, OutputWriteError
from .report import (
    CommandName,
    CurveFamily,
    OutputFormat,
    CommandRequest,
    CommandReport,
    MeasureModel,
    ClassificationModel,
    ReconciliationModel,
    ScanModel,
    FermatModel,
    RenderModel
)

# set logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_EMPTY_REGION = 3

# flags whose value may start with "-" without being a number, e.g. --foci "-1,0;1,0"
VALUE_FLAGS = ("--foci", "--line", "--bbox", "--gamma", "--sum", "--radius", "--startx", "--endx")

@dataclass(frozen = True)
class CommandResult:
    """Report, emitted document and exit code of a command."""

    report: CommandReport
    output: str
    exit_code: int

def parse_number(text: str) -> float:
    """
        Parses a decimal (`2.5`) or a fraction (`5/2`).

        Raises:
            CommandInputError: if the text is not a finite number.
    """
    try:
        value = float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        logger.error(f"invalid number '{text}'")
        raise CommandInputError(f"invalid number: '{text}'")
    return value

def parse_tuple(text: str, size: int, name: str) -> tuple[float, ...]:
    """
        Parses `size` comma-separated numbers.

        Raises:
            CommandInputError: if the count is wrong or a value is not a number.
    """
    parts = [part for part in text.split(",")]
    if len(parts) != size:
        logger.error(f"invalid {name} '{text}'")
        raise CommandInputError(f"{name} requires {size} comma-separated values, got '{text}'")
    return tuple(parse_number(part) for part in parts)

def parse_foci(text: str) -> list[tuple[float, float]]:
    """
        Parses the foci wire format, semicolon-separated `x,y` pairs,
        e.g. `"-1,0;1,0;0,0"`. Whitespace is ignored.

        Raises:
            CommandInputError: if a pair is malformed or the list is empty.
    """
    pairs = [pair for pair in "".join(text.split()).split(";") if pair != ""]
    if len(pairs) == 0:
        logger.error("empty foci list")
        raise CommandInputError("--foci requires at least one 'x,y' pair")
    return [parse_tuple(pair, 2, "focus") for pair in pairs] # type: ignore (pairs of size 2)

def _join_option_values(argv: list[str]) -> list[str]:
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_FLAGS and i + 1 < len(argv):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined

def build_parser() -> argparse.ArgumentParser:
    """Builds the parser of the `taxicurve` command."""
    common = argparse.ArgumentParser(add_help = False)
    common.add_argument("--family", choices = [family.value for family in CurveFamily], help = "Curve family.")
    common.add_argument("--foci", help = "Foci as 'x,y;x,y;...'; the center of a circle.")
    common.add_argument("--gamma", help = "Constant gamma <= 0 of ellipses and hyperbolas.")
    common.add_argument("--sum", dest = "S", help = "Focal sum S of sum-ellipses and trifocal ellipses.")
    common.add_argument("--radius", help = "Radius of the circle.")
    common.add_argument("--eccentricity", type = float, help = "Eccentricity of the parabola (default: 1).")
    common.add_argument("--line", help = "Directrix 'a,b,c' of the line ax + by + c = 0.")
    common.add_argument("--metric", default = "taxicab", help = "taxicab, euclidean or minkowski:<k> (default: taxicab).")
    common.add_argument("--step", type = float, default = 0.01, help = "Column step of the sweep (default: 0.01).")
    common.add_argument("--startx", help = "First column of the sweep (default: left end of the region).")
    common.add_argument("--endx", help = "Last column of the sweep (default: right end of the region).")
    common.add_argument("--bbox", help = "Drawing window 'x0,y0,x1,y1'.")
    common.add_argument("--resolution", type = int, default = 200, help = "Grid nodes per side for traced curves (default: 200).")
    common.add_argument("--format", choices = [fmt.value for fmt in OutputFormat], help = "Output format (default: svg for render, json otherwise).")
    common.add_argument("--out", help = "Output path (default: standard output).")
    common.add_argument("--log-level", default = "WARNING", choices = ["DEBUG", "INFO", "WARNING", "ERROR"], help = "Logging level on standard error.")

    parser = argparse.ArgumentParser(
        prog = "taxicurve",
        description = "Conics, sum-ellipses, areas and perimeters in the taxicab plane."
    )
    parser.add_argument("--version", action = "version", version = f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest = "command", required = True)
    commands.add_parser(CommandName.CLASSIFY.value, parents = [common], help = "Classify a curve.")
    commands.add_parser(CommandName.MEASURE.value, parents = [common], help = "Printed and exact area and perimeter.")
    commands.add_parser(CommandName.SCAN.value, parents = [common], help = "Area and perimeter by the column sweep.")
    commands.add_parser(CommandName.RENDER.value, parents = [common], help = "Draw the curve as SVG.")
    commands.add_parser(CommandName.FERMAT.value, parents = [common], help = "Minimizers of the taxicab focal sum.")
    return parser

def infer_family(req: CommandRequest) -> CurveFamily | None:
    """
        Family implied by the parameters when `--family` is omitted:
        `--sum` gives a sum-ellipse (the canonical trifocal ellipse without
        `--foci`), `--radius` a circle and `--line` a parabola. Two foci
        with `--gamma` fit both ellipses and hyperbolas, so no family is
        inferred for them.
    """
    if req.S is not None:
        return CurveFamily.SUM_ELLIPSE if req.foci else CurveFamily.TRIFOCAL
    if req.r is not None:
        return CurveFamily.CIRCLE
    if req.line is not None:
        return CurveFamily.PARABOLA
    return None

def build_request(args: argparse.Namespace) -> CommandRequest:
    """
        Converts the parsed arguments into a validated request; the family
        is inferred with [`infer_family`][taxicurve.cli.main.infer_family]
        when `--family` is omitted.

        Raises:
            CommandInputError: if a value is malformed.
            ValidationError: if a value is out of range, e.g. `step <= 0`.
    """
    command = CommandName(args.command)
    output_format = args.format or (OutputFormat.SVG.value if command == CommandName.RENDER else OutputFormat.JSON.value)

    def number(text: str | None) -> float | None:
        return None if text is None else parse_number(text)

    req = CommandRequest(
        command = command,
        family = args.family,
        foci = [] if args.foci is None else parse_foci(args.foci),
        gamma = number(args.gamma),
        S = number(args.S),
        r = number(args.radius),
        e = args.eccentricity,
        line = None if args.line is None else parse_tuple(args.line, 3, "--line"),
        metric = args.metric,
        step = args.step,
        start_x = number(args.startx),
        end_x = number(args.endx),
        bbox = None if args.bbox is None else parse_tuple(args.bbox, 4, "--bbox"),
        resolution = args.resolution,
        out = args.out,
        format = output_format
    )
    if req.family is None:
        family = infer_family(req)
        if family is not None:
            logger.info(f"inferred family: {family.value}")
            req = req.model_copy(update = {"family": family})
    return req

def _exact(value: float) -> Fraction:
    # shortest decimal of the float, so 2.5 becomes 5/2
    return Fraction(repr(value))

def _require(value, flag: str, family: CurveFamily | None):
    if value is None:
        logger.error(f"missing {flag}")
        name = "the command" if family is None else family.value
        raise CommandInputError(f"{flag} is required for {name}")
    return value

def _foci(req: CommandRequest, exact: bool = False) -> list[Point]:
    if exact:
        return [Point(_exact(x), _exact(y)) for x, y in req.foci]
    return [Point(x, y) for x, y in req.foci]

def _require_foci(req: CommandRequest, count: int | None = None) -> list[Point]:
    foci = _foci(req)
    if len(foci) == 0 or (count is not None and len(foci) != count):
        expected = "at least one" if count is None else str(count)
        logger.error(f"invalid foci count: {len(foci)}")
        raise CommandInputError(f"--foci requires {expected} focus for {req.family.value if req.family else 'the command'}")
    return foci

def build_spec(req: CommandRequest) -> ConicSpec:
    """
        Builds the curve described by the request.

        Raises:
            CommandInputError: if the family or one of its parameters is missing.
    """
    family = _require(req.family, "--family", None)
    match family:
        case CurveFamily.CIRCLE:
            center = _require_foci(req, 1)[0] if req.foci else Point(0.0, 0.0)
            return Circle(center, _require(req.r, "--radius", family))
        case CurveFamily.ELLIPSE:
            F1, F2 = _require_foci(req, 2)
            return TwoFociEllipse(F1, F2, _require(req.gamma, "--gamma", family))
        case CurveFamily.HYPERBOLA:
            F1, F2 = _require_foci(req, 2)
            return TwoFociHyperbola(F1, F2, _require(req.gamma, "--gamma", family))
        case CurveFamily.PARABOLA:
            F1 = _require_foci(req, 1)[0]
            a, b, c = _require(req.line, "--line", family)
            return Parabola(F1, Line(a, b, c), 1.0 if req.e is None else req.e)
        case CurveFamily.TRIFOCAL:
            foci = _require_foci(req, 3) if req.foci else list(CANONICAL_TRIFOCAL_FOCI)
            return SumEllipse(tuple(foci), _require(req.S, "--sum", family))
        case _:
            return SumEllipse(tuple(_require_foci(req)), _require(req.S, "--sum", family))

def _is_canonical_trifocal(req: CommandRequest) -> bool:
    if not req.foci:
        return True
    return [Point(x, y) for x, y in req.foci] == list(CANONICAL_TRIFOCAL_FOCI)

def _classify(req: CommandRequest, report: dict) -> None:
    report["classification"] = ClassificationModel.from_classification(classify(build_spec(req)))

def _measure(req: CommandRequest, report: dict) -> None:
    spec = build_spec(req)
    report["classification"] = ClassificationModel.from_classification(classify(spec))
    match req.family:
        case CurveFamily.CIRCLE:
            center = _foci(req, exact = True)[0] if req.foci else Point(0.0, 0.0)
            reconciliation = reconcile("circle", r = _exact(req.r), center = center) # type: ignore (checked by build_spec)
        case CurveFamily.ELLIPSE:
            F1, F2 = _foci(req, exact = True)
            reconciliation = reconcile("ellipse", F1 = F1, F2 = F2, gamma = _exact(req.gamma)) # type: ignore (checked by build_spec)
        case CurveFamily.TRIFOCAL if _is_canonical_trifocal(req):
            reconciliation = reconcile("trifocal", S = _exact(req.S)) # type: ignore (checked by build_spec)
        case CurveFamily.TRIFOCAL | CurveFamily.SUM_ELLIPSE:
            report["oracle"] = MeasureModel.from_measure(measures_oracle(*separable_foci(spec)))
            return
        case _:
            logger.error(f"no measures for {req.family}")
            raise NoMeasureError(f"area and perimeter are available only for closed curves, got '{req.family.value}'") # type: ignore (checked by build_spec)

    report["paper"] = MeasureModel.from_measure(reconciliation.paper)
    report["oracle"] = MeasureModel.from_measure(reconciliation.oracle)
    report["reconciliation"] = ReconciliationModel.from_report(reconciliation)

def _scan(req: CommandRequest, report: dict) -> pd.DataFrame:
    spec = build_spec(req)
    if not spec.is_separable:
        logger.error(f"{spec.family.value} cannot be swept")
        raise CommandInputError(f"the sweep requires a closed region, got '{spec.family.value}'")

    region = SumEllipseRegion.from_spec(spec, Metric.parse(req.metric))
    start_x, end_x = req.start_x, req.end_x
    if start_x is None or end_x is None:
        x_lo, x_hi = region_x_extent(region)
        start_x = x_lo if start_x is None else start_x
        end_x = x_hi if end_x is None else end_x

    cfg = ScanConfig(start_x = start_x, end_x = end_x, step = req.step, metric = region.metric)
    result = scan_area_perimeter(region, cfg)
    report["scan"] = ScanModel.from_result(cfg, result)
    return result.columns

def _fermat(req: CommandRequest, report: dict) -> None:
    if req.foci:
        foci = _foci(req)
    elif req.family == CurveFamily.TRIFOCAL:
        foci = list(CANONICAL_TRIFOCAL_FOCI)
    else:
        foci = _require_foci(req)
    report["fermat"] = FermatModel.from_result(fermat_point_taxicab(foci))

def _render(req: CommandRequest, report: dict) -> str:
    spec = build_spec(req)
    bbox = default_bbox(spec) if req.bbox is None else BoundingBox.from_tuple(req.bbox)
    chains = curve_chains(spec, bbox, req.resolution)
    report["render"] = RenderModel(
        bbox = bbox.as_tuple(),
        chains = len(chains),
        closed_chains = sum(1 for chain in chains if chain.closed)
    )
    return render_svg(spec, bbox, req.resolution, chains = chains)

def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding = "utf-8")
    except OSError as e:
        logger.error(f"unable to write {out}: {e}")
        raise OutputWriteError(f"unable to write the output file '{out}': {e}")

def _csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index = False, lineterminator = "\n")

def run_command(req: CommandRequest) -> CommandResult:
    """
        Executes a validated request and writes its output to standard
        output or to `req.out`.

        Exit codes: `0` on success, `2` on invalid input (malformed or
        missing parameters, curves without the requested measures, write
        failures), `3` when the region is empty.

        Parameters:
            req: validated request.

        Returns:
            the report, the emitted document and the exit code.
    """
    logger.debug("start")
    sections: dict = {}
    output = ""

    with warnings.catch_warnings(record = True) as caught:
        warnings.simplefilter("always")
        try:
            document = None
            frame = None
            match req.command:
                case CommandName.CLASSIFY:
                    _classify(req, sections)
                case CommandName.MEASURE:
                    _measure(req, sections)
                    if sections.get("oracle") is not None:
                        rows = [("paper", sections["paper"]), ("oracle", sections["oracle"])] if "paper" in sections else [("oracle", sections["oracle"])]
                        frame = pd.DataFrame([(name, m.area, m.perimeter) for name, m in rows], columns = ["source", "area", "perimeter"])
                case CommandName.SCAN:
                    frame = _scan(req, sections)
                case CommandName.RENDER:
                    document = _render(req, sections)
                case CommandName.FERMAT:
                    _fermat(req, sections)

            report = CommandReport(
                version = __version__,
                command = req.command,
                request = req,
                warnings = [str(w.message) for w in caught],
                **sections
            )

            match req.format:
                case OutputFormat.JSON:
                    output = report.to_json()
                case OutputFormat.CSV:
                    if frame is None:
                        logger.error(f"csv not available for {req.command.value}")
                        raise CommandInputError(f"csv output is available for scan and measure, not for '{req.command.value}'")
                    output = _csv(frame)
                case OutputFormat.SVG:
                    if document is None:
                        logger.error(f"svg not available for {req.command.value}")
                        raise CommandInputError(f"svg output is available for render, not for '{req.command.value}'")
                    output = document

            _emit(output, req.out)
            exit_code = EXIT_OK
        except (EmptyRegionError, ScanEmptyRegionError) as e:
            exit_code = EXIT_EMPTY_REGION
            report = CommandReport(version = __version__, command = req.command, request = req, error = str(e), exit_code = exit_code)
            output = ""
        except TaxicurveException as e:
            exit_code = EXIT_INVALID_INPUT
            report = CommandReport(version = __version__, command = req.command, request = req, error = str(e), exit_code = exit_code)
            output = ""

    logger.info(f"{req.command.value}: exit code {exit_code}")
    logger.debug("end")
    return CommandResult(report = report, output = output, exit_code = exit_code)

def main(argv: list[str] | None = None) -> int:
    """
        Entry point of the `taxicurve` command.

        Parameters:
            argv: arguments without the program name; by default `sys.argv[1:]`.

        Returns:
            the exit code.
    """
    parser = build_parser()
    args = parser.parse_args(_join_option_values(sys.argv[1:] if argv is None else list(argv)))
    logging.basicConfig(
        level = args.log_level,
        stream = sys.stderr,
        format = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

    try:
        req = build_request(args)
    except CommandInputError as e:
        sys.stderr.write(f"taxicurve: error: {e}\n")
        return EXIT_INVALID_INPUT
    except ValidationError as e:
        logger.error(f"invalid request: {e}")
        sys.stderr.write(f"taxicurve: error: {e}\n")
        return EXIT_INVALID_INPUT

    result = run_command(req)
    if result.report.error is not None:
        sys.stderr.write(f"taxicurve: error: {result.report.error}\n")
    return result.exit_code

def cli() -> None:
    sys.exit(main())
