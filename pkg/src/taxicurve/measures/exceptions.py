from ..core.exceptions import TaxicurveException

class NoMeasureError(TaxicurveException):
    """
        Error when no printed formula exists for the requested curve,
        e.g. an ellipse with `-gamma < delta`.
    """
    pass

class DegenerateInputError(TaxicurveException):
    """
        Error when the trifocal formulas are requested for `S <= 2`,
        where the canonical trifocal ellipse degenerates.
    """
    pass
