"""A_n comultiplication solver and route-agreement fuzzing."""

from src.solver.an_solver import (
    AnDeltaMatrix,
    AnSolverReport,
    BMatrix,
    CoalgebraCriterion,
    ConstraintDerivation,
    FamilyTally,
    an_delta_from_matrix,
    b_matrix,
    check_an_constraints,
    coalgebra_B_criterion,
    derive_an_constraints,
    exhaustive_constraint_grid,
    random_skew_rank2,
    random_skew_rank4,
    verify_an_classification,
)
from src.solver.fuzz import FuzzReport, RouteTally, fuzz_route_agreement, random_constants

__all__ = [
    "AnDeltaMatrix",
    "AnSolverReport",
    "BMatrix",
    "CoalgebraCriterion",
    "ConstraintDerivation",
    "FamilyTally",
    "FuzzReport",
    "RouteTally",
    "an_delta_from_matrix",
    "b_matrix",
    "check_an_constraints",
    "coalgebra_B_criterion",
    "derive_an_constraints",
    "exhaustive_constraint_grid",
    "fuzz_route_agreement",
    "random_constants",
    "random_skew_rank2",
    "random_skew_rank4",
    "verify_an_classification",
]
