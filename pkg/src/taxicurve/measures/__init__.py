from .paper import (
    Measure,
    TAXICAB_PI,
    CANONICAL_TRIFOCAL_FOCI,
    metric_pi,
    circle_measures_paper,
    two_focus_measures_paper,
    trifocal_measures_paper
)
from .oracle import (
    FermatResult,
    ReconcileFamily,
    ReconciliationReport,
    fermat_point_taxicab,
    measures_oracle,
    monte_carlo_area,
    reconcile
)

__all__ = [
    # paper
    "Measure",
    "TAXICAB_PI",
    "CANONICAL_TRIFOCAL_FOCI",
    "metric_pi",
    "circle_measures_paper",
    "two_focus_measures_paper",
    "trifocal_measures_paper",
    # oracle
    "FermatResult",
    "ReconcileFamily",
    "ReconciliationReport",
    "fermat_point_taxicab",
    "measures_oracle",
    "monte_carlo_area",
    "reconcile"
]
