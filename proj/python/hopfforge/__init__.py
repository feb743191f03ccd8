"""Finitely presented bialgebras and Hopf algebras over Q and F_p."""

from ._hopfforge import (
    DegreeOverflow,
    HopfforgeError,
    ParseError,
    PreconditionFailed,
    Presentation,
    Table,
    check_hopf_map,
    coequalizer,
    compile,
    coproduct,
    example,
    example_names,
    parse_presentation,
    parse_table,
    run_cli,
)

__all__ = [
    "DegreeOverflow",
    "HopfforgeError",
    "ParseError",
    "PreconditionFailed",
    "Presentation",
    "Table",
    "check_hopf_map",
    "coequalizer",
    "compile",
    "coproduct",
    "example",
    "example_names",
    "parse_presentation",
    "parse_table",
    "run_cli",
]
