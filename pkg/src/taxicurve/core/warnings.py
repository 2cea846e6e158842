class TaxicurveWarning(Warning):
    """
        General warning of Taxicurve library
    """
    def __init__(self, description):
        self.description = description

    def __str__(self):
        return self.description

class ExtrapolatedClassWarning(TaxicurveWarning):
    """
        Warning raised when a classifier returns a variant that is not 
        one of the printed regimes (`EMPTY`, `DEGENERATE`, `UNCLASSIFIED`).
    """
    pass
