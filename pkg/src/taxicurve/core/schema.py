from dataclasses import dataclass

@dataclass(frozen = True)
class Tolerances:
    """
        Class to represent the numerical tolerances used across the library.

        The classifiers compare exact reals in their definitions, so the 
        library must fix a comparison width; all the values are absolute.
    """

    classification: float = 1e-9
    """Width used for the equality predicates of the classifiers (`-gamma = delta`, `e = rho`, ...)."""

    dedupe: float = 1e-12
    """Distance under which two consecutive polygon vertices are considered equal."""

    contour: float = 1e-6
    """Maximum absolute residual admitted for a contour point."""

    contour_max_bisections: int = 60
    """Maximum number of bisection steps used to refine a contour crossing."""

    root: float = 1e-10
    """Default tolerance of the column root finders of the scan."""

    y_bracket: float = 1e3
    """Default half-width of the window where the scan looks for feasible points."""

    max_iterations: int = 200
    """Iteration cap of the ternary search and bisection of the scan."""

    reconcile: float = 1e-9
    """Tolerance used to decide if a printed formula agrees with the oracle."""

DEFAULT_TOLERANCES = Tolerances()
"""Tolerances used by default by all the library functions."""
