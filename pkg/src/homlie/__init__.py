"""Exact-arithmetic workbench for finite-dimensional hom-Lie superalgebras over Q."""

from .errors import (DimensionError, HomLieError, ParseError, PreconditionError,
                     ProlongationError, SpecError)
from .forms import (BilinearForm, check_form, extend_form, form_radical_ideal, invariant_forms,
                    killing_form, proportional)
from .grading import (analyze_grading, check_grading, graded_irreducible, is_simple,
                      structural_criteria, transitivity)
from .prolong import (LocalAlgebra, TensorWindow, load_local, mirror_local, phi_operators,
                      prolong_minimal, verify_phi_relations)
from .ratlin import KERNEL, Matrix, Subspace, kernel, rref, solve
from .repth import Representation, adjoint, check_representation, irreducible, spin
from .structure import (center, classify_subspace, derived_algebra, ideal_arithmetic,
                        ideal_closure, quotient)
from .superalgebra import HomLieSuperalgebra, check_axioms, load_algebra

__version__ = "0.1.0"

__all__ = [
    "BilinearForm", "DimensionError", "HomLieError", "HomLieSuperalgebra", "KERNEL",
    "LocalAlgebra", "Matrix", "ParseError", "PreconditionError", "ProlongationError",
    "Representation", "SpecError", "Subspace", "TensorWindow", "adjoint", "analyze_grading",
    "center", "check_axioms", "check_form", "check_grading", "check_representation",
    "classify_subspace", "derived_algebra", "extend_form", "form_radical_ideal",
    "graded_irreducible", "ideal_arithmetic", "ideal_closure", "invariant_forms",
    "irreducible", "is_simple", "kernel", "killing_form", "load_algebra", "load_local",
    "mirror_local", "phi_operators", "proportional", "prolong_minimal", "quotient", "rref",
    "solve", "spin", "structural_criteria", "transitivity", "verify_phi_relations",
]
