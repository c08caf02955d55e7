"""Exact computation and verification of total dominator colorings of
circulant graphs, centered on the distance-{1,3} family."""

from .coloring import (
    ClassRecord,
    Coloring,
    ColoringError,
    ColoringReport,
    class_size_capacity_check,
    common_neighborhood,
    is_proper,
    is_tdc,
    random_greedy_coloring,
)
from .constructions import (
    ConstructionError,
    ConstructionPlan,
    ConstructionVerdict,
    construct_tdc,
    verify_construction,
)
from .formulas import (
    FormulaConsistencyError,
    FormulaTable,
    build_formula_table,
    formula_tdc,
    formula_tdc_general,
    tdc_total_domination_offset,
)
from .graphs import (
    CirculantGraph,
    GraphConstructionError,
    ReductionResult,
    build_circulant,
    circular_distance,
    is_standard_13,
    reduce_to_standard,
    standard_circulant,
    standard_connection_set,
    verify_isomorphism,
)
from .invariants import (
    InvariantValue,
    OracleLimitError,
    PackingStructureReport,
    chromatic_number_oracle,
    independence_number_formula,
    independence_number_oracle,
    max_open_packing_structure,
    open_packing_number_formula,
    open_packing_number_oracle,
    total_domination_number_formula,
    total_domination_number_oracle,
)
from .solver import (
    BudgetExceededError,
    FeasibilityOutcome,
    SearchBudget,
    SearchOutcome,
    SolverLimitError,
    tdc_feasible,
    tdc_number_exact,
)

__all__ = [
    "BudgetExceededError",
    "CirculantGraph",
    "ClassRecord",
    "Coloring",
    "ColoringError",
    "ColoringReport",
    "ConstructionError",
    "ConstructionPlan",
    "ConstructionVerdict",
    "FeasibilityOutcome",
    "FormulaConsistencyError",
    "FormulaTable",
    "GraphConstructionError",
    "InvariantValue",
    "OracleLimitError",
    "PackingStructureReport",
    "ReductionResult",
    "SearchBudget",
    "SearchOutcome",
    "SolverLimitError",
    "build_circulant",
    "build_formula_table",
    "chromatic_number_oracle",
    "circular_distance",
    "class_size_capacity_check",
    "common_neighborhood",
    "construct_tdc",
    "formula_tdc",
    "formula_tdc_general",
    "independence_number_formula",
    "independence_number_oracle",
    "is_proper",
    "is_standard_13",
    "is_tdc",
    "max_open_packing_structure",
    "open_packing_number_formula",
    "open_packing_number_oracle",
    "random_greedy_coloring",
    "reduce_to_standard",
    "standard_circulant",
    "standard_connection_set",
    "tdc_feasible",
    "tdc_number_exact",
    "tdc_total_domination_offset",
    "total_domination_number_formula",
    "total_domination_number_oracle",
    "verify_construction",
    "verify_isomorphism",
]
