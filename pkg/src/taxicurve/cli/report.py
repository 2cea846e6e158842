import math
import dataclasses
from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

from ..core.exceptions import InvalidArgumentError
from ..core.metric import Metric
from ..conic.classifier import Classification
from ..measures.paper import Measure
from ..measures.oracle import FermatResult, ReconciliationReport
from ..scan.sweep import ScanConfig, ScanResult

class CommandName(str, Enum):
    """
        Commands of the command line interface.
    """

    CLASSIFY = "classify"
    MEASURE = "measure"
    SCAN = "scan"
    RENDER = "render"
    FERMAT = "fermat"

class CurveFamily(str, Enum):
    """
        Curve families accepted by `--family`.
    """

    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    HYPERBOLA = "hyperbola"
    PARABOLA = "parabola"
    TRIFOCAL = "trifocal"
    SUM_ELLIPSE = "sumellipse"

class OutputFormat(str, Enum):
    """
        Output formats accepted by `--format`.
    """

    JSON = "json"
    CSV = "csv"
    SVG = "svg"

class CommandRequest(BaseModel):
    """
        Validated content of a command line invocation.
    """

    command: CommandName
    family: CurveFamily | None = None
    foci: list[tuple[float, float]] = []
    gamma: float | None = None
    S: float | None = None
    r: float | None = None
    e: float | None = None
    line: tuple[float, float, float] | None = None
    metric: str = "taxicab"
    step: float = Field(default = 0.01, gt = 0)
    start_x: float | None = None
    end_x: float | None = None
    bbox: tuple[float, float, float, float] | None = None
    resolution: int = Field(default = 200, ge = 2)
    out: str | None = None
    format: OutputFormat = OutputFormat.JSON

    @field_validator("metric")
    @classmethod
    def check_metric(cls, value: str) -> str:
        try:
            return str(Metric.parse(value))
        except InvalidArgumentError as e:
            raise ValueError(str(e))

def _exact_text(value) -> str | None:
    if isinstance(value, Fraction):
        return str(value)
    return None

def _finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None

class MeasureModel(BaseModel):
    """Area and perimeter; exact values are added as fraction strings when available."""

    area: float
    perimeter: float
    perimeter_metric: str
    area_exact: str | None = None
    perimeter_exact: str | None = None

    @classmethod
    def from_measure(cls, measure: Measure) -> "MeasureModel":
        return cls(
            area = float(measure.area),
            perimeter = float(measure.perimeter),
            perimeter_metric = str(measure.perimeter_metric),
            area_exact = _exact_text(measure.area),
            perimeter_exact = _exact_text(measure.perimeter)
        )

class ClassificationModel(BaseModel):
    """Variant chosen by the classifier with the quantities of its predicate."""

    variant: str
    extrapolated: bool
    predicates: dict[str, float | None]

    @classmethod
    def from_classification(cls, classification: Classification) -> "ClassificationModel":
        predicates = {
            key: _finite_or_none(float(value))
            for key, value in dataclasses.asdict(classification).items()
            if key != "variant"
        }
        return cls(
            variant = classification.variant.value,
            extrapolated = classification.extrapolated,
            predicates = predicates
        )

class ReconciliationModel(BaseModel):
    """Differences between printed and oracle measures."""

    area_abs_diff: float
    perimeter_abs_diff: float
    area_agrees: bool
    perimeter_agrees: bool
    bbox_area_gap: float | None = None

    @classmethod
    def from_report(cls, report: ReconciliationReport) -> "ReconciliationModel":
        return cls(
            area_abs_diff = report.area_abs_diff,
            perimeter_abs_diff = report.perimeter_abs_diff,
            area_agrees = report.area_agrees,
            perimeter_agrees = report.perimeter_agrees,
            bbox_area_gap = report.bbox_area_gap
        )

class ScanModel(BaseModel):
    """Settings and totals of a sweep."""

    start_x: float
    end_x: float
    step: float
    metric: str
    area: float
    perimeter: float
    columns_hit: int
    columns_empty: int

    @classmethod
    def from_result(cls, cfg: ScanConfig, result: ScanResult) -> "ScanModel":
        return cls(
            start_x = cfg.start_x,
            end_x = cfg.end_x,
            step = cfg.step,
            metric = str(cfg.metric),
            area = result.area,
            perimeter = result.perimeter,
            columns_hit = result.columns_hit,
            columns_empty = result.columns_empty
        )

class FermatModel(BaseModel):
    """Minimizing set of the focal sum."""

    kind: str
    corner_lo: tuple[float, float] | None = None
    corner_hi: tuple[float, float] | None = None
    S0: float

    @classmethod
    def from_result(cls, result: FermatResult) -> "FermatModel":
        lo = result.minimizing_set.corner_lo
        hi = result.minimizing_set.corner_hi
        return cls(
            kind = result.minimizing_set.kind.value,
            corner_lo = None if lo is None else (float(lo.x), float(lo.y)),
            corner_hi = None if hi is None else (float(hi.x), float(hi.y)),
            S0 = float(result.S0)
        )

class RenderModel(BaseModel):
    """Summary of a drawing."""

    bbox: tuple[float, float, float, float]
    chains: int
    closed_chains: int

class CommandReport(BaseModel):
    """
        Outcome of a command; sections not produced by the command are omitted
        from the JSON document, the order of the keys is fixed.
    """

    version: str
    command: CommandName
    request: CommandRequest
    classification: ClassificationModel | None = None
    paper: MeasureModel | None = None
    oracle: MeasureModel | None = None
    reconciliation: ReconciliationModel | None = None
    scan: ScanModel | None = None
    fermat: FermatModel | None = None
    render: RenderModel | None = None
    warnings: list[str] = []
    error: str | None = None
    exit_code: int = 0

    def to_json(self) -> str:
        return self.model_dump_json(indent = 2, exclude_none = True) + "\n"
