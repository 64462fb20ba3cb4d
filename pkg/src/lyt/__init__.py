"""Exact computations for Lie-Yamaguti algebras with modified Rota-Baxter operators."""

from .algebra import (
    LYAlgebra, abelian, as_operator, check_ly_axioms, check_modified_rb, check_nijenhuis,
    check_rb_weight_m1, descendant, from_leibniz, from_lie, make_algebra, modified_from_rb,
    search_operators,
)
from .cohomology import (
    Cochain2, Cochain3, ComplexReport, TotalCochain2, cohomology_dims, d1, d2, delta1, delta2,
    matrix_of, partial1, partial2, phi1, phi2,
)
from .deformations import (
    Infinitesimal, are_cohomologous, check_infinitesimal, coboundary_infinitesimal, is_rigid,
    random_infinitesimal,
)
from .extensions import (
    AbelianExtension, ExtensionCocycle, cocycle_from_section, extension_from_cocycle,
    extensions_equivalent, sections_cohomologous,
)
from .report import AxiomReport, CheckFailed
from .representations import (
    MRBLYAlgebra, Representation, adjoint_mrb_representation, adjoint_representation,
    check_mrb_representation, check_representation, induced_representation, make_representation,
    semidirect_product,
)

__version__ = "0.1.0"

__all__ = [
    "LYAlgebra", "abelian", "as_operator", "check_ly_axioms", "check_modified_rb",
    "check_nijenhuis", "check_rb_weight_m1", "descendant", "from_leibniz", "from_lie",
    "make_algebra", "modified_from_rb", "search_operators", "Cochain2", "Cochain3",
    "ComplexReport", "TotalCochain2", "cohomology_dims", "d1", "d2", "delta1", "delta2",
    "matrix_of", "partial1", "partial2", "phi1", "phi2", "Infinitesimal", "are_cohomologous",
    "check_infinitesimal", "coboundary_infinitesimal", "is_rigid", "random_infinitesimal",
    "AbelianExtension", "ExtensionCocycle", "cocycle_from_section", "extension_from_cocycle",
    "extensions_equivalent", "sections_cohomologous", "MRBLYAlgebra", "Representation",
    "adjoint_mrb_representation", "adjoint_representation", "check_mrb_representation",
    "check_representation", "induced_representation", "make_representation",
    "semidirect_product", "AxiomReport", "CheckFailed",
]
