"""Hilbert-Samuel coefficients of syzygy modules over complete intersections."""

from ._syzlab import (
    FitInconclusive,
    Module,
    ParseError,
    Ring,
    SpecError,
    SyzlabError,
    VerdictReport,
    betti_numbers,
    coefficient_growth_table,
    complexity,
    depth_table,
    dual_growth_check,
    dual_hilbert_data,
    e0_recursion_check,
    e1_recursion_check,
    groebner_basis,
    hilbert_data,
    parse_spec,
    quasi_fit,
    rr_deviation_table,
    run_spec,
    tor_rigidity_check,
)

__all__ = [
    "FitInconclusive",
    "Module",
    "ParseError",
    "Ring",
    "SpecError",
    "SyzlabError",
    "VerdictReport",
    "betti_numbers",
    "coefficient_growth_table",
    "complexity",
    "depth_table",
    "dual_growth_check",
    "dual_hilbert_data",
    "e0_recursion_check",
    "e1_recursion_check",
    "groebner_basis",
    "hilbert_data",
    "parse_spec",
    "quasi_fit",
    "rr_deviation_table",
    "run_spec",
    "tor_rigidity_check",
]
