"""Polygraphs, free strict categories and essentially algebraic theories."""

from ._polycat import (
    Error,
    ParseError,
    Polygraph,
    StructuralError,
    TypingError,
    UnsupportedDimension,
    check_model,
    check_theory,
    decide_equal,
    enumerate_cells,
    infer_type,
    normalize,
    oracle_equal,
    parse_polygraph,
    read_polygraph,
    render_svg,
    run_cli,
    theory_text,
)

__all__ = [
    "Error",
    "ParseError",
    "Polygraph",
    "StructuralError",
    "TypingError",
    "UnsupportedDimension",
    "check_model",
    "check_theory",
    "decide_equal",
    "enumerate_cells",
    "infer_type",
    "normalize",
    "oracle_equal",
    "parse_polygraph",
    "read_polygraph",
    "render_svg",
    "run_cli",
    "theory_text",
]
