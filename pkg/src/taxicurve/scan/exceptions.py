from ..core.exceptions import TaxicurveException

class BracketExceededError(TaxicurveException):
    """
        Error when the feasible set of a column reaches the ends of the
        initial y window, i.e. the region is larger than `y_bracket`.
    """
    pass

class UnsupportedMetricError(TaxicurveException):
    """
        Error when the sweep is asked to measure with a metric other than
        taxicab or Euclidean.
    """
    pass

class ScanEmptyRegionError(TaxicurveException):
    """
        Error when every column of the sweep is empty.
    """
    pass

class ScanConfigError(TaxicurveException):
    """
        Error when the sweep configuration is not valid,
        e.g. `start_x > end_x` or a nonpositive step.
    """
    pass
