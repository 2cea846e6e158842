from .model import (
    ConicFamily,
    BranchSign,
    ConicSpec,
    Circle,
    TwoFociEllipse,
    TwoFociHyperbola,
    Parabola,
    SumEllipse,
    GeneralConicSpec,
    separable_foci,
    general_conic_residual,
    conic_from_general,
    residual,
    residual_grid
)
from .classifier import (
    EllipseVariant,
    HyperbolaVariant,
    ParabolaVariant,
    SumEllipseVariant,
    EllipseClass,
    HyperbolaClass,
    ParabolaClass,
    SumEllipseClass,
    Classification,
    classify_ellipse,
    classify_hyperbola,
    classify_parabola,
    classify_sum_ellipse,
    minimal_focal_sum,
    classify
)

__all__ = [
    # model
    "ConicFamily",
    "BranchSign",
    "ConicSpec",
    "Circle",
    "TwoFociEllipse",
    "TwoFociHyperbola",
    "Parabola",
    "SumEllipse",
    "GeneralConicSpec",
    "separable_foci",
    "general_conic_residual",
    "conic_from_general",
    "residual",
    "residual_grid",
    # classifier
    "EllipseVariant",
    "HyperbolaVariant",
    "ParabolaVariant",
    "SumEllipseVariant",
    "EllipseClass",
    "HyperbolaClass",
    "ParabolaClass",
    "SumEllipseClass",
    "Classification",
    "classify_ellipse",
    "classify_hyperbola",
    "classify_parabola",
    "classify_sum_ellipse",
    "minimal_focal_sum",
    "classify"
]
