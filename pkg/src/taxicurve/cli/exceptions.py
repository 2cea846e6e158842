from ..core.exceptions import TaxicurveException

class CommandInputError(TaxicurveException):
    """
        Error when a command line value is malformed or a flag required
        by the selected command is missing.
    """
    pass

class OutputWriteError(TaxicurveException):
    """
        Error when the output file cannot be written.
    """
    pass
