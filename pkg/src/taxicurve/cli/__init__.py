from .report import CommandName, CurveFamily, OutputFormat, CommandRequest, CommandReport
from .svg import render_svg, default_bbox, curve_chains
from .main import CommandResult, build_parser, infer_family, build_request, build_spec, run_command, main

__all__ = [
    # report
    "CommandName",
    "CurveFamily",
    "OutputFormat",
    "CommandRequest",
    "CommandReport",
    # svg
    "render_svg",
    "default_bbox",
    "curve_chains",
    # main
    "CommandResult",
    "build_parser",
    "infer_family",
    "build_request",
    "build_spec",
    "run_command",
    "main"
]
