from ..core.exceptions import TaxicurveException

class EmptyProfileError(TaxicurveException):
    """
        Error when a piecewise-linear profile is built from an empty or non-finite list of coordinates.
    """
    pass

class PolygonError(TaxicurveException):
    """
        Error when a polygon does not satisfy the requirements of an operation,
        e.g. the shoelace formula on an open chain.
    """
    pass

class EmptyRegionError(TaxicurveException):
    """
        Error when the region `{sum_i d1(P, F_i) <= S}` is empty, i.e. `S < S0`.
    """
    pass
