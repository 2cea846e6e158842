from ..core.exceptions import TaxicurveException

class InvalidConicError(TaxicurveException):
    """
        Error when the parameters of a conic violate its definition,
        e.g. `gamma > 0` or a missing second focus.
    """
    pass
