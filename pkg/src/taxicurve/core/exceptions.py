class TaxicurveException(Exception):
    """
        General exception of Taxicurve library
    """
    def __init__(self, description):
        self.description = description

    def __str__(self):
        return self.description

class InvalidArgumentError(TaxicurveException):
    """
        Exception raised when an argument is not admitted, e.g. 
        non-finite coordinates, Minkowski order `k < 1` or a 
        non-positive radius.
    """
    def __init__(self, description):
        super().__init__(description)

class InvalidLineError(TaxicurveException):
    """
        Exception raised when a line has both coefficients `a` and `b` equal to zero.
    """
    def __init__(self, description):
        super().__init__(description)
