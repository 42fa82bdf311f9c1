"""n-Lie algebras, coalgebras, bialgebras and their extensions."""

from .structure import (
    StructureConstants,
    VectorElement,
    bracket_basis,
    bracket_eval,
    check_fundamental_identity,
    fundamental_identity_direct,
    is_n_lie,
    derived_algebra,
    center,
    algebra_matrix,
    filippov_matrix,
)
from .representation import ad_operator, ad_matrix, rho_s_apply, check_rho_module
from .coalgebra import (
    Comultiplication,
    delta_apply,
    dual_algebra,
    dual_comultiplication,
    check_coalgebra_dual,
    check_coalgebra_tensor,
    rank,
    check_coalgebra_iso,
)
from .transport import permutation_matrix, transport_algebra, transport_comultiplication, check_algebra_iso
from .bialgebra import (
    Bialgebra,
    check_compatibility_tensor,
    check_compatibility_constants,
    compatibility_residuals,
    compatibility_residuals_lie,
    validate,
    dualize,
    check_equivalence_map,
)
from .extension import (
    BilinearForm,
    ExtendedIndexing,
    check_ad_invariance,
    extend_algebra_metric,
    extend_algebra_trivial,
    extend_form,
    extend_comultiplication,
    extend_bialgebra,
    extend_bialgebra_dual,
    solve_invariant_forms,
)

__all__ = [
    "StructureConstants", "VectorElement", "bracket_basis", "bracket_eval",
    "check_fundamental_identity", "fundamental_identity_direct", "is_n_lie",
    "derived_algebra", "center", "algebra_matrix", "filippov_matrix",
    "ad_operator", "ad_matrix", "rho_s_apply", "check_rho_module",
    "Comultiplication", "delta_apply", "dual_algebra", "dual_comultiplication",
    "check_coalgebra_dual", "check_coalgebra_tensor", "rank", "check_coalgebra_iso",
    "permutation_matrix", "transport_algebra", "transport_comultiplication", "check_algebra_iso",
    "Bialgebra", "check_compatibility_tensor", "check_compatibility_constants",
    "compatibility_residuals", "compatibility_residuals_lie", "validate", "dualize",
    "check_equivalence_map",
    "BilinearForm", "ExtendedIndexing", "check_ad_invariance", "extend_algebra_metric",
    "extend_algebra_trivial", "extend_form", "extend_comultiplication", "extend_bialgebra",
    "extend_bialgebra_dual", "solve_invariant_forms",
]
