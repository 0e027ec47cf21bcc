from .catalog import (
    MATCH,
    MISMATCH,
    NO_EXPECTATION,
    REFINEMENT,
    CatalogReport,
    Discrepancy,
    PolynomialCheck,
    TypeRecord,
    build_catalog,
    compare_with_paper,
    match_orbits,
    orbit_admits,
    verify_paper_polynomials,
)
from .paperdata import EXPECTATIONS, NONTRIVIAL_TYPES, POLYNOMIALS, ROWS, Orbit, OrbitExpectation, PaperRow
from .report import format_report, render_table
