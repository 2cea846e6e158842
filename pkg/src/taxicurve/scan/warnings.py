from ..core.warnings import TaxicurveWarning

class LooseScanBoundsWarning(TaxicurveWarning):
    """
        Warning when the sweep bounds are wider than the region and some
        columns are empty.
    """
    pass
